#pragma once

#include "algcalc/algebroid.hpp"
#include "algcalc/error.hpp"
#include "algcalc/forms.hpp"
#include "algcalc/ids.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace algcalc {

/// Malformed or inconsistent definition file. `line`/`column` are 1-based
/// and 0 when the error is not tied to a text location.
class DefinitionError : public Error {
public:
    DefinitionError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct ProblemDefinition {
    LieAlgebroid algebroid{{}, 0};
    std::map<std::string, SubbundleSpec> subbundles;
    std::map<std::string, DifferentialForm> forms;
    std::string description;

    friend bool operator==(const ProblemDefinition&, const ProblemDefinition&) = default;
};

/// Parses a JSON definition:
///   coords      array of coordinate names
///   rank        fibre rank p
///   anchor      n x p array of expression strings
///   structure   [{lower: [a, b], upper: c, value: expr}] with 1 <= a < b <= p;
///               the b, a entry is completed by antisymmetry
///   subbundles  {name: [p-vector of expression strings, ...]}   (optional)
///   forms       {name: {degree, terms: [{indices, coeff}]}}      (optional)
///   description free text                                         (optional)
ProblemDefinition parse_definition(std::string_view text);

ProblemDefinition load_definition(const std::filesystem::path& path);

/// Serializes back to the same schema; parse_definition(to_json_text(d)) == d.
std::string to_json_text(const ProblemDefinition& def);

std::string read_file(const std::filesystem::path& path);

/// Hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

} // namespace algcalc
