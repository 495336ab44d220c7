#pragma once

#include "algcalc/check_report.hpp"
#include "algcalc/matrix.hpp"
#include "algcalc/scalar_expr.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace algcalc {

/// A section z = z^a t_a, stored by its components in the fixed frame.
class Section {
public:
    Section() = default;
    explicit Section(std::size_t rank) : components_(rank) {}
    explicit Section(std::vector<ScalarExpr> components) : components_(std::move(components)) {}
    Section(std::initializer_list<ScalarExpr> components) : components_(components) {}

    /// Frame section t_alpha (0-based alpha).
    static Section frame(std::size_t rank, std::size_t alpha);

    std::size_t rank() const noexcept { return components_.size(); }
    const ScalarExpr& operator[](std::size_t alpha) const { return components_[alpha]; }
    ScalarExpr& operator[](std::size_t alpha) { return components_[alpha]; }
    const std::vector<ScalarExpr>& components() const noexcept { return components_; }

    bool is_zero() const noexcept;

    Section& operator+=(const Section& other);
    Section& operator-=(const Section& other);
    friend Section operator+(Section a, const Section& b) { return a += b; }
    friend Section operator-(Section a, const Section& b) { return a -= b; }
    friend Section operator-(const Section& a);
    friend Section operator*(const ScalarExpr& f, const Section& s);
    friend bool operator==(const Section&, const Section&) = default;

private:
    std::vector<ScalarExpr> components_;
};

/// Lie algebroid over a single chart in a fixed frame: anchor coefficients
/// rho^i_a and structure functions L^c_{ab}, with [t_a, t_b] = L^c_{ab} t_c.
/// Axioms are not enforced on construction; see validate().
class LieAlgebroid {
public:
    /// `anchor` is n x p (anchor[i][a] = rho^i_a); `structure` is p x p x p with
    /// structure[a][b][c] = L^c_{ab}.
    LieAlgebroid(std::vector<Coordinate> coords, std::size_t rank, ExprMatrix anchor,
                 std::vector<std::vector<std::vector<ScalarExpr>>> structure);

    /// Zero anchor and zero structure.
    LieAlgebroid(std::vector<Coordinate> coords, std::size_t rank);

    /// The tangent algebroid T R^n: identity anchor, zero structure.
    static LieAlgebroid tangent(std::size_t n);

    std::size_t base_dim() const noexcept { return coords_.size(); }
    std::size_t rank() const noexcept { return rank_; }
    const std::vector<Coordinate>& coords() const noexcept { return coords_; }
    std::vector<std::string> coordinate_names() const;

    /// rho^i_a, 0-based.
    const ScalarExpr& anchor(std::size_t i, std::size_t a) const { return anchor_[i * rank_ + a]; }
    /// L^c_{ab}, 0-based.
    const ScalarExpr& structure(std::size_t a, std::size_t b, std::size_t c) const {
        return structure_[(a * rank_ + b) * rank_ + c];
    }

    void set_anchor(std::size_t i, std::size_t a, ScalarExpr value);
    void set_structure(std::size_t a, std::size_t b, std::size_t c, ScalarExpr value);
    /// Sets L^c_{ab} = value and L^c_{ba} = -value.
    void set_bracket(std::size_t a, std::size_t b, std::size_t c, const ScalarExpr& value);

    friend bool operator==(const LieAlgebroid&, const LieAlgebroid&) = default;

private:
    std::vector<Coordinate> coords_;
    std::size_t rank_;
    std::vector<ScalarExpr> anchor_;
    std::vector<ScalarExpr> structure_;
};

/// rho(z) f = rho^i_a z^a df/dx^i.
ScalarExpr anchor_apply(const LieAlgebroid& A, const Section& z, const ScalarExpr& f);

/// Components of the vector field rho(z): X^i = rho^i_a z^a.
std::vector<ScalarExpr> anchor_vector(const LieAlgebroid& A, const Section& z);

/// [u, v]^c = u^a v^b L^c_{ab} + rho(u)(v^c) - rho(v)(u^c).
Section bracket(const LieAlgebroid& A, const Section& u, const Section& v);

CheckReport check_antisymmetry(const LieAlgebroid& A);
CheckReport check_anchor_compatibility(const LieAlgebroid& A);
CheckReport check_jacobi(const LieAlgebroid& A);
/// Conjunction of the three axiom checks; children hold the individual reports.
CheckReport validate(const LieAlgebroid& A);

} // namespace algcalc
