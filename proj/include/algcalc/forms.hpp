#pragma once

#include "algcalc/algebroid.hpp"
#include "algcalc/scalar_expr.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace algcalc {

/// Strictly increasing tuple of 0-based coframe indices.
using MultiIndex = std::vector<std::size_t>;

/// All strictly increasing tuples of length `degree` drawn from 0..rank-1,
/// in lexicographic order.
std::vector<MultiIndex> increasing_tuples(std::size_t rank, std::size_t degree);

/// Sign of the permutation sorting `indices`, or 0 if an index repeats.
int permutation_sign(std::span<const std::size_t> indices);

/// Element of Lambda^q: coefficients on the basis t^{a1} ^ ... ^ t^{aq}
/// with a1 < ... < aq. Zero coefficients are never stored.
class DifferentialForm {
public:
    using TermMap = std::map<MultiIndex, ScalarExpr>;

    DifferentialForm() = default;
    DifferentialForm(std::size_t rank, std::size_t degree) : rank_(rank), degree_(degree) {}

    /// The 0-form f.
    static DifferentialForm scalar(std::size_t rank, const ScalarExpr& f);
    /// Coframe element t^alpha (0-based alpha).
    static DifferentialForm coframe(std::size_t rank, std::size_t alpha);
    /// 1-form with the given coefficients on t^1..t^p.
    static DifferentialForm one_form(const std::vector<ScalarExpr>& coefficients);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t degree() const noexcept { return degree_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient on an increasing tuple (zero when absent).
    const ScalarExpr& coefficient(const MultiIndex& key) const;
    /// omega(t_{i1}, ..., t_{iq}) for arbitrary (unsorted, possibly repeated) indices.
    ScalarExpr evaluate_on_frame(std::span<const std::size_t> indices) const;
    /// The 0-form value, for degree 0.
    const ScalarExpr& value() const { return coefficient({}); }

    /// Adds `c` to the coefficient of the increasing tuple `key`.
    void add(const MultiIndex& key, const ScalarExpr& c);
    void set(const MultiIndex& key, ScalarExpr c);

    DifferentialForm& operator+=(const DifferentialForm& other);
    DifferentialForm& operator-=(const DifferentialForm& other);
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
    friend DifferentialForm operator-(const DifferentialForm& a);
    friend DifferentialForm operator*(const ScalarExpr& f, const DifferentialForm& w);
    friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

    /// e.g. "x1*t^1^t^2 - t^2^t^3"; the 0-form prints as its value.
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    void check_key(const MultiIndex& key) const;

    std::size_t rank_ = 0;
    std::size_t degree_ = 0;
    TermMap terms_;
};

/// Exterior product under the determinant convention, so that
/// (t^1 ^ t^2)(t_1, t_2) = 1.
DifferentialForm wedge(const DifferentialForm& omega, const DifferentialForm& theta);

/// Wedge of a list of forms, left to right; empty list gives the 0-form 1.
DifferentialForm wedge_all(std::size_t rank, std::span<const DifferentialForm> forms);

/// omega(z_1, ..., z_q). Throws DimensionError on arity or rank mismatch.
ScalarExpr apply_form(const DifferentialForm& omega, std::span<const Section> sections);

/// Interior product i_z omega; zero on 0-forms.
DifferentialForm interior(const Section& z, const DifferentialForm& omega);

} // namespace algcalc
