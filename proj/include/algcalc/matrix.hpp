#pragma once

#include "algcalc/scalar_expr.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace algcalc {

/// Dense row-major matrix over the rational function field.
using ExprMatrix = std::vector<std::vector<ScalarExpr>>;

struct RowEchelon {
    ExprMatrix reduced;                      ///< reduced row echelon form
    std::vector<std::size_t> pivot_columns;  ///< one per nonzero row, increasing
};

/// Gauss-Jordan elimination over the function field. Pivot rows are chosen
/// as the first row with a nonzero entry, so the result is deterministic.
RowEchelon row_echelon(ExprMatrix m);

/// Rank over the field of rational functions (generic rank).
std::size_t generic_rank(const ExprMatrix& m);

/// Basis of {v : m v = 0}, one vector per non-pivot column, with entries
/// cleared to primitive polynomials (see clear_denominators).
std::vector<std::vector<ScalarExpr>> nullspace(const ExprMatrix& m, std::size_t columns);

/// Inverse of a square matrix, or nullopt when singular over the field.
std::optional<ExprMatrix> inverse(const ExprMatrix& m);

/// Rescales `v` by a nonzero rational function so every entry is a polynomial,
/// the entries share no common polynomial factor, and entry `anchor` (which
/// must be nonzero) has leading coefficient 1.
std::vector<ScalarExpr> clear_denominators(const std::vector<ScalarExpr>& v, std::size_t anchor);

ExprMatrix transpose(const ExprMatrix& m);

} // namespace algcalc
