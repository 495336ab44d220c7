#include "algcalc/definition.hpp"

#include "algcalc/parser.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <set>
#include <sstream>

namespace algcalc {

using nlohmann::json;

DefinitionError::DefinitionError(const std::string& message, std::size_t line, std::size_t column)
    : Error(line > 0 ? message + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : message),
      line_(line), column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json parse_json_strict(std::string_view text) {
    std::vector<std::set<std::string>> keys;
    std::string duplicate;
    json::parser_callback_t track = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
        case json::parse_event_t::object_start: keys.emplace_back(); break;
        case json::parse_event_t::object_end:
            if (!keys.empty()) keys.pop_back();
            break;
        case json::parse_event_t::key:
            if (!keys.empty() && !keys.back().insert(parsed.get<std::string>()).second &&
                duplicate.empty())
                duplicate = parsed.get<std::string>();
            break;
        default: break;
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(text.begin(), text.end(), track);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::string what = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] " prefix
        if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
        // and its own location, which we report in line/column form below.
        if (what.starts_with("parse error at ")) {
            if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
        }
        throw DefinitionError("JSON parse error: " + what, line, column);
    }
    if (!duplicate.empty()) throw DefinitionError("duplicate key '" + duplicate + "'");
    return doc;
}

class Reader {
public:
    explicit Reader(std::vector<Coordinate> coords) : coords_(std::move(coords)) {}

    ScalarExpr expr(const json& node, const std::string& where) const {
        if (node.is_number_integer()) return ScalarExpr(node.get<long>());
        if (!node.is_string()) throw DefinitionError(where + ": expected an expression string");
        try {
            return parse_expr(node.get<std::string>(), coords_);
        } catch (const ParseError& e) {
            throw DefinitionError(where + ": " + e.what());
        } catch (const DivisionByZero& e) {
            throw DefinitionError(where + ": " + e.what());
        }
    }

    const std::vector<Coordinate>& coords() const { return coords_; }

private:
    std::vector<Coordinate> coords_;
};

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw DefinitionError(std::string("missing required key '") + key + "'");
    return *it;
}

std::size_t index_value(const json& node, std::size_t upper, const std::string& where) {
    if (!node.is_number_integer()) throw DefinitionError(where + ": expected an integer index");
    const long v = node.get<long>();
    if (v < 1 || static_cast<std::size_t>(v) > upper)
        throw DefinitionError(where + ": index " + std::to_string(v) + " outside 1.." +
                              std::to_string(upper));
    return static_cast<std::size_t>(v);
}

Section read_section(const Reader& reader, const json& node, std::size_t p, const std::string& where) {
    if (!node.is_array() || node.size() != p)
        throw DefinitionError(where + ": expected an array of " + std::to_string(p) + " expressions");
    Section s(p);
    for (std::size_t a = 0; a < p; ++a)
        s[a] = reader.expr(node[a], where + "[" + std::to_string(a) + "]");
    return s;
}

DifferentialForm read_form(const Reader& reader, const json& node, std::size_t p, const std::string& where) {
    if (!node.is_object()) throw DefinitionError(where + ": expected an object");
    for (const auto& [key, value] : node.items()) {
        if (key != "degree" && key != "terms") throw DefinitionError(where + ": unknown key '" + key + "'");
    }
    const json& deg = require(node, "degree");
    if (!deg.is_number_unsigned()) throw DefinitionError(where + ".degree: expected a non-negative integer");
    const std::size_t q = deg.get<std::size_t>();
    DifferentialForm form(p, q);
    const json& terms = require(node, "terms");
    if (!terms.is_array()) throw DefinitionError(where + ".terms: expected an array");
    std::set<MultiIndex> seen;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string at = where + ".terms[" + std::to_string(t) + "]";
        const json& term = terms[t];
        if (!term.is_object()) throw DefinitionError(at + ": expected an object");
        const json& idx = require(term, "indices");
        if (!idx.is_array() || idx.size() != q)
            throw DefinitionError(at + ".indices: expected " + std::to_string(q) + " indices");
        MultiIndex key;
        for (std::size_t i = 0; i < q; ++i) {
            key.push_back(index_value(idx[i], p, at + ".indices") - 1);
            if (i > 0 && key[i - 1] >= key[i])
                throw DefinitionError(at + ".indices: must be strictly increasing");
        }
        if (!seen.insert(key).second) throw DefinitionError(at + ": duplicate index tuple");
        form.set(key, reader.expr(require(term, "coeff"), at + ".coeff"));
    }
    return form;
}

} // namespace

ProblemDefinition parse_definition(std::string_view text) {
    const json doc = parse_json_strict(text);
    if (!doc.is_object()) throw DefinitionError("definition must be a JSON object");
    static const std::set<std::string> known{"coords", "rank", "anchor", "structure",
                                             "subbundles", "forms", "description"};
    for (const auto& [key, value] : doc.items()) {
        if (!known.count(key)) throw DefinitionError("unknown key '" + key + "'");
    }

    const json& coords_node = require(doc, "coords");
    if (!coords_node.is_array()) throw DefinitionError("coords: expected an array of names");
    std::vector<std::string> names;
    for (const auto& c : coords_node) {
        if (!c.is_string()) throw DefinitionError("coords: expected an array of names");
        names.push_back(c.get<std::string>());
    }
    std::vector<Coordinate> coords;
    try {
        coords = make_coordinates(names);
    } catch (const Error& e) {
        throw DefinitionError(std::string("coords: ") + e.what());
    }
    const Reader reader(coords);
    const std::size_t n = coords.size();

    const json& rank_node = require(doc, "rank");
    if (!rank_node.is_number_unsigned() || rank_node.get<std::size_t>() == 0)
        throw DefinitionError("rank: expected a positive integer");
    const std::size_t p = rank_node.get<std::size_t>();

    ProblemDefinition def;
    def.algebroid = LieAlgebroid(coords, p);

    const json& anchor = require(doc, "anchor");
    if (!anchor.is_array() || anchor.size() != n)
        throw DefinitionError("anchor: expected " + std::to_string(n) + " rows (one per coordinate)");
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "anchor[" + std::to_string(i) + "]";
        if (!anchor[i].is_array() || anchor[i].size() != p)
            throw DefinitionError(where + ": expected " + std::to_string(p) + " entries");
        for (std::size_t a = 0; a < p; ++a)
            def.algebroid.set_anchor(i, a, reader.expr(anchor[i][a], where + "[" + std::to_string(a) + "]"));
    }

    if (auto it = doc.find("structure"); it != doc.end()) {
        if (!it->is_array()) throw DefinitionError("structure: expected an array");
        std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
        for (std::size_t e = 0; e < it->size(); ++e) {
            const std::string where = "structure[" + std::to_string(e) + "]";
            const json& entry = (*it)[e];
            if (!entry.is_object()) throw DefinitionError(where + ": expected an object");
            for (const auto& [key, value] : entry.items()) {
                if (key != "lower" && key != "upper" && key != "value")
                    throw DefinitionError(where + ": unknown key '" + key + "'");
            }
            const json& lower = require(entry, "lower");
            if (!lower.is_array() || lower.size() != 2)
                throw DefinitionError(where + ".lower: expected two indices");
            const std::size_t a = index_value(lower[0], p, where + ".lower");
            const std::size_t b = index_value(lower[1], p, where + ".lower");
            const std::size_t c = index_value(require(entry, "upper"), p, where + ".upper");
            if (a >= b)
                throw DefinitionError(where + ": antisymmetry violation, lower indices must satisfy a < b "
                                      "(the b, a entry is completed automatically)");
            if (!seen.emplace(a, b, c).second)
                throw DefinitionError(where + ": duplicate structure entry");
            def.algebroid.set_bracket(a - 1, b - 1, c - 1, reader.expr(require(entry, "value"), where + ".value"));
        }
    }

    if (auto it = doc.find("subbundles"); it != doc.end()) {
        if (!it->is_object()) throw DefinitionError("subbundles: expected an object");
        for (const auto& [name, gens] : it->items()) {
            const std::string where = "subbundles." + name;
            if (!gens.is_array() || gens.empty())
                throw DefinitionError(where + ": expected a non-empty array of sections");
            SubbundleSpec spec;
            for (std::size_t g = 0; g < gens.size(); ++g)
                spec.generators.push_back(read_section(reader, gens[g], p, where + "[" + std::to_string(g) + "]"));
            try {
                require_full_rank(def.algebroid, spec);
            } catch (const RankDeficiency& e) {
                throw DefinitionError(where + ": " + e.what());
            }
            def.subbundles.emplace(name, std::move(spec));
        }
    }

    if (auto it = doc.find("forms"); it != doc.end()) {
        if (!it->is_object()) throw DefinitionError("forms: expected an object");
        for (const auto& [name, node] : it->items())
            def.forms.emplace(name, read_form(reader, node, p, "forms." + name));
    }

    if (auto it = doc.find("description"); it != doc.end()) {
        if (!it->is_string()) throw DefinitionError("description: expected a string");
        def.description = it->get<std::string>();
    }
    return def;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DefinitionError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemDefinition load_definition(const std::filesystem::path& path) {
    return parse_definition(read_file(path));
}

std::string to_json_text(const ProblemDefinition& def) {
    const LieAlgebroid& A = def.algebroid;
    const auto names = A.coordinate_names();
    const std::size_t p = A.rank();
    nlohmann::ordered_json doc;
    if (!def.description.empty()) doc["description"] = def.description;
    doc["coords"] = names;
    doc["rank"] = p;
    auto anchor = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < A.base_dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t a = 0; a < p; ++a) row.push_back(A.anchor(i, a).to_string(names));
        anchor.push_back(row);
    }
    doc["anchor"] = anchor;
    auto structure = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b)
            for (std::size_t c = 0; c < p; ++c) {
                if (A.structure(a, b, c).is_zero()) continue;
                structure.push_back({{"lower", {a + 1, b + 1}},
                                     {"upper", c + 1},
                                     {"value", A.structure(a, b, c).to_string(names)}});
            }
    doc["structure"] = structure;
    if (!def.subbundles.empty()) {
        nlohmann::ordered_json subs = nlohmann::ordered_json::object();
        for (const auto& [name, spec] : def.subbundles) {
            auto gens = nlohmann::ordered_json::array();
            for (const Section& s : spec.generators) {
                auto comps = nlohmann::ordered_json::array();
                for (const auto& c : s.components()) comps.push_back(c.to_string(names));
                gens.push_back(comps);
            }
            subs[name] = gens;
        }
        doc["subbundles"] = subs;
    }
    if (!def.forms.empty()) {
        nlohmann::ordered_json forms = nlohmann::ordered_json::object();
        for (const auto& [name, form] : def.forms) {
            auto terms = nlohmann::ordered_json::array();
            for (const auto& [key, c] : form.terms()) {
                auto idx = nlohmann::ordered_json::array();
                for (std::size_t k : key) idx.push_back(k + 1);
                terms.push_back({{"indices", idx}, {"coeff", c.to_string(names)}});
            }
            forms[name] = {{"degree", form.degree()}, {"terms", terms}};
        }
        doc["forms"] = forms;
    }
    return doc.dump(2) + "\n";
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

} // namespace algcalc
