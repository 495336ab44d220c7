#include "algcalc/run.hpp"

#include "algcalc/calculus.hpp"
#include "algcalc/eds.hpp"
#include "algcalc/ids.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace algcalc {

bool RunReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRun& c) { return c.report.passed(); });
}

namespace {

constexpr std::array<std::string_view, 3> kGlobalChecks{"axioms", "maurer-cartan", "calculus-identities"};
constexpr std::array<std::string_view, 4> kSubbundleChecks{"involutive", "cartan", "eds", "equivalence"};

struct CheckKey {
    int group;            // 0 = global, 1 = per subbundle
    std::string subbundle;
    std::size_t kind;     // position in kGlobalChecks / kSubbundleChecks

    auto operator<=>(const CheckKey&) const = default;

    std::string name() const {
        if (group == 0) return std::string(kGlobalChecks[kind]);
        return std::string(kSubbundleChecks[kind]) + ":" + subbundle;
    }
};

CheckKey parse_check_name(const ProblemDefinition& def, const std::string& name) {
    for (std::size_t k = 0; k < kGlobalChecks.size(); ++k) {
        if (name == kGlobalChecks[k]) return {0, {}, k};
    }
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string kind = name.substr(0, colon);
        const std::string sub = name.substr(colon + 1);
        for (std::size_t k = 0; k < kSubbundleChecks.size(); ++k) {
            if (kind != kSubbundleChecks[k]) continue;
            if (!def.subbundles.count(sub)) throw UsageError("unknown subbundle '" + sub + "' in check '" + name + "'");
            return {1, sub, k};
        }
    }
    throw UsageError("unknown check '" + name + "'");
}

CheckReport run_one(const ProblemDefinition& def, const CheckKey& key, const RunOptions& options) {
    const LieAlgebroid& A = def.algebroid;
    if (key.group == 0) {
        switch (key.kind) {
        case 0: return validate(A);
        case 1: return maurer_cartan_check(A);
        default: {
            SamplingBudget budget;
            budget.samples = options.identity_samples;
            return verify_calculus_identities(A, budget, options.seed);
        }
        }
    }
    const SubbundleSpec& E = def.subbundles.at(key.subbundle);
    switch (key.kind) {
    case 0: return involutive_bracket_test(A, E);
    case 1: return cartan_test(A, E).report;
    case 2: return eds_closure_check(A, E);
    default: return eds_involutivity_equivalence(A, E).report;
    }
}

} // namespace

std::vector<std::string> default_selection(const ProblemDefinition& def) {
    std::vector<std::string> out(kGlobalChecks.begin(), kGlobalChecks.end());
    for (const auto& [name, spec] : def.subbundles) out.push_back("equivalence:" + name);
    return out;
}

RunReport run_checks(const ProblemDefinition& def, const std::vector<std::string>& selection,
                     const RunOptions& options, const std::string& input_digest) {
    std::vector<CheckKey> keys;
    for (const auto& name : selection) keys.push_back(parse_check_name(def, name));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    RunReport report;
    report.input_digest = input_digest;
    report.seed = options.seed;
    for (const CheckKey& key : keys) {
        const auto start = std::chrono::steady_clock::now();
        CheckReport r = run_one(def, key, options);
        const auto stop = std::chrono::steady_clock::now();
        r.name = key.name();
        report.checks.push_back(
            {key.name(), std::move(r), std::chrono::duration<double, std::milli>(stop - start).count()});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

nlohmann::json witness_json(const Witness& w, const std::vector<std::string>& names) {
    return {{"label", w.label}, {"indices", w.indices}, {"residual", w.residual.to_string(names)}};
}

nlohmann::json check_json(const CheckReport& r, const std::vector<std::string>& names) {
    nlohmann::json j;
    j["name"] = r.name;
    j["verdict"] = verdict(r.passed());
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : r.witnesses) j["witnesses"].push_back(witness_json(w, names));
    j["children"] = nlohmann::json::array();
    for (const auto& c : r.children) j["children"].push_back(check_json(c, names));
    return j;
}

std::string format_indices(const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0) s += ", ";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

bool owned_by_child(const CheckReport& r, const Witness& w) {
    for (const auto& c : r.children)
        if (std::find(c.witnesses.begin(), c.witnesses.end(), w) != c.witnesses.end()) return true;
    return false;
}

void text_check(std::ostringstream& os, const CheckReport& r, const std::vector<std::string>& names,
                int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    // Aggregate reports repeat their children's witnesses; print each once.
    for (const auto& w : r.witnesses) {
        if (owned_by_child(r, w)) continue;
        os << pad << "  witness " << w.label << " " << format_indices(w.indices) << ": "
           << w.residual.to_string(names) << "\n";
    }
    for (const auto& c : r.children) {
        os << pad << "  " << (c.passed() ? "PASS " : "FAIL ") << c.name << "\n";
        text_check(os, c, names, depth + 1);
    }
}

} // namespace

std::string emit_report(const RunReport& report, ReportFormat format,
                        const std::vector<std::string>& coordinate_names, bool include_timing) {
    std::size_t passed = 0;
    for (const auto& c : report.checks) passed += c.report.passed() ? 1 : 0;
    const std::size_t failed = report.checks.size() - passed;

    if (format == ReportFormat::json) {
        nlohmann::json j;
        j["input_digest"] = report.input_digest;
        j["seed"] = report.seed;
        j["overall"] = verdict(report.passed());
        j["summary"] = {{"total", report.checks.size()}, {"passed", passed}, {"failed", failed}};
        j["checks"] = nlohmann::json::array();
        for (const auto& c : report.checks) {
            nlohmann::json cj = check_json(c.report, coordinate_names);
            if (include_timing) cj["elapsed_ms"] = c.elapsed_ms;
            j["checks"].push_back(std::move(cj));
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "input sha256:" << report.input_digest << "\n";
    os << "seed " << report.seed << "\n";
    for (const auto& c : report.checks) {
        os << (c.report.passed() ? "PASS " : "FAIL ") << c.name;
        if (include_timing) os << " (" << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms)";
        os << "\n";
        text_check(os, c.report, coordinate_names, 0);
    }
    os << "summary: " << report.checks.size() << " checks, " << passed << " passed, " << failed
       << " failed; overall " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace algcalc
