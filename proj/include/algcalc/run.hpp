#pragma once

#include "algcalc/check_report.hpp"
#include "algcalc/definition.hpp"
#include "algcalc/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace algcalc {

/// Unknown check or subbundle name, or any other invalid request.
class UsageError : public Error {
public:
    using Error::Error;
};

struct CheckRun {
    std::string name;
    CheckReport report;
    double elapsed_ms = 0.0;
};

struct RunReport {
    std::string input_digest;
    std::uint64_t seed = 0;
    std::vector<CheckRun> checks;

    bool passed() const noexcept;
};

struct RunOptions {
    std::uint64_t seed = 0;
    std::size_t identity_samples = 50;
};

/// Every check applicable to `def` in canonical order: axioms, maurer-cartan,
/// calculus-identities, then equivalence:<name> for each subbundle.
std::vector<std::string> default_selection(const ProblemDefinition& def);

/// Runs the selected checks. Accepted names: axioms, maurer-cartan,
/// calculus-identities, involutive:<name>, cartan:<name>, eds:<name>,
/// equivalence:<name>. Results are ordered canonically regardless of the
/// order requested, and depend only on (definition, selection, seed).
RunReport run_checks(const ProblemDefinition& def, const std::vector<std::string>& selection,
                     const RunOptions& options, const std::string& input_digest = {});

enum class ReportFormat { text, json };

/// Renders a report. `include_timing = false` drops the elapsed_ms fields.
std::string emit_report(const RunReport& report, ReportFormat format,
                        const std::vector<std::string>& coordinate_names = {},
                        bool include_timing = true);

} // namespace algcalc
