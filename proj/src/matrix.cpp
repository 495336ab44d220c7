#include "algcalc/matrix.hpp"

#include "algcalc/error.hpp"

#include <utility>

namespace algcalc {

RowEchelon row_echelon(ExprMatrix m) {
    RowEchelon out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        const ScalarExpr inv = ScalarExpr(1L) / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const ScalarExpr factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                if (!m[row][c].is_zero()) m[r][c] -= factor * m[row][c];
            }
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t generic_rank(const ExprMatrix& m) {
    return row_echelon(m).pivot_columns.size();
}

std::vector<ScalarExpr> clear_denominators(const std::vector<ScalarExpr>& v, std::size_t anchor) {
    if (anchor >= v.size() || v[anchor].is_zero())
        throw Error("clear_denominators: anchor entry must be nonzero");
    Polynomial common_den(1L);
    for (const auto& e : v) {
        const Polynomial& d = e.denominator();
        if (d.is_constant()) continue;
        common_den = *(common_den * d).divide_exact(gcd(common_den, d));
    }
    std::vector<Polynomial> nums;
    nums.reserve(v.size());
    Polynomial content;
    for (const auto& e : v) {
        Polynomial n = *(e.numerator() * common_den).divide_exact(e.denominator());
        content = gcd(content, n);
        nums.push_back(std::move(n));
    }
    std::vector<ScalarExpr> out;
    out.reserve(v.size());
    for (auto& n : nums) n = *n.divide_exact(content);
    const Rational scale = Rational(1) / nums[anchor].leading_coefficient();
    for (auto& n : nums) out.emplace_back(n * scale);
    return out;
}

std::vector<std::vector<ScalarExpr>> nullspace(const ExprMatrix& m, std::size_t columns) {
    const RowEchelon e = row_echelon(m);
    std::vector<bool> is_pivot(columns, false);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<ScalarExpr>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<ScalarExpr> v(columns);
        v[free] = ScalarExpr(1L);
        for (std::size_t k = 0; k < e.pivot_columns.size(); ++k)
            v[e.pivot_columns[k]] = -e.reduced[k][free];
        basis.push_back(clear_denominators(v, free));
    }
    return basis;
}

std::optional<ExprMatrix> inverse(const ExprMatrix& m) {
    const std::size_t n = m.size();
    ExprMatrix augmented(n, std::vector<ScalarExpr>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DimensionError("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) augmented[i][j] = m[i][j];
        augmented[i][n + i] = ScalarExpr(1L);
    }
    RowEchelon e = row_echelon(std::move(augmented));
    if (e.pivot_columns.size() < n || (n > 0 && e.pivot_columns[n - 1] != n - 1)) return std::nullopt;
    ExprMatrix inv(n, std::vector<ScalarExpr>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.reduced[i][n + j];
    return inv;
}

ExprMatrix transpose(const ExprMatrix& m) {
    if (m.empty()) return {};
    ExprMatrix t(m[0].size(), std::vector<ScalarExpr>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

} // namespace algcalc
