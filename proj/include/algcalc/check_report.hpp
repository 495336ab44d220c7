#pragma once

#include "algcalc/scalar_expr.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace algcalc {

/// One failing identity instance. Indices are 1-based, as printed in reports.
struct Witness {
    std::string label;
    std::vector<std::size_t> indices;
    ScalarExpr residual;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of an executable check. The verdict is derived from the witness
/// list, so "pass" and "no witnesses" cannot disagree.
struct CheckReport {
    std::string name;
    std::vector<Witness> witnesses;
    /// Sub-checks that contributed to this one (e.g. the parts of `validate`).
    std::vector<CheckReport> children;

    bool passed() const noexcept { return witnesses.empty(); }

    /// Appends a witness unless the residual is zero.
    void record(std::string label, std::vector<std::size_t> indices, ScalarExpr residual) {
        if (!residual.is_zero())
            witnesses.push_back({std::move(label), std::move(indices), std::move(residual)});
    }
};

} // namespace algcalc
