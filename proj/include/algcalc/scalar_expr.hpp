#pragma once

#include "algcalc/polynomial.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace algcalc {

/// A base coordinate. `index` is 1-based; the coordinate with index i is
/// the polynomial variable i-1.
struct Coordinate {
    std::size_t index = 0;
    std::string name;

    friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

/// Builds coordinates 1..n from display names. Names must be distinct identifiers.
std::vector<Coordinate> make_coordinates(const std::vector<std::string>& names);

/// Default coordinates x1..xn.
std::vector<Coordinate> default_coordinates(std::size_t n);

std::vector<std::string> coordinate_names(std::span<const Coordinate> coords);

/// Exact rational function in the base coordinates, always kept canonical:
/// numerator and denominator coprime, denominator monic under graded lex,
/// zero stored as 0/1. Structural equality therefore decides equality of
/// rational functions.
class ScalarExpr {
public:
    ScalarExpr() : den_(1L) {}
    ScalarExpr(const Rational& c) : num_(c), den_(1L) {}
    ScalarExpr(long c) : num_(c), den_(1L) {}
    ScalarExpr(const Polynomial& p) : num_(p), den_(1L) {}
    /// Canonicalizes num/den; throws DivisionByZero when den is zero.
    ScalarExpr(const Polynomial& num, const Polynomial& den);

    /// Coordinate with 1-based index `index`.
    static ScalarExpr coordinate(std::size_t index);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Number of coordinates the expression may depend on.
    std::size_t width() const noexcept { return std::max(num_.width(), den_.width()); }

    ScalarExpr operator-() const;
    ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
    ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
    ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }
    ScalarExpr& operator/=(const ScalarExpr& o) { return *this = *this / o; }
    friend ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    /// Throws DivisionByZero for a zero divisor.
    friend ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
    friend bool operator==(const ScalarExpr&, const ScalarExpr&) = default;

    ScalarExpr pow(unsigned exponent) const;

    std::string to_string(std::span<const std::string> names = {}) const;

private:
    struct Canonical {};
    ScalarExpr(Polynomial num, Polynomial den, Canonical)
        : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

ScalarExpr add(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr sub(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr mul(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr div(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr neg(const ScalarExpr& a);

/// Derivative with respect to the coordinate with 1-based `index`.
/// Throws DimensionError unless 1 <= index <= n.
ScalarExpr partial(const ScalarExpr& a, std::size_t index, std::size_t n);

bool is_zero(const ScalarExpr& a);

/// Value at `point`. Throws PoleError when the denominator vanishes there.
Rational eval_at(const ScalarExpr& a, std::span<const Rational> point);

} // namespace algcalc
