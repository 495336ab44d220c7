#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace algcalc {

using Rational = mpq_class;

/// Exponent vector of a monomial. Trailing zero exponents are never stored, so
/// x1*x2 and x1*x2*x3^0 compare equal regardless of how many variables exist.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents);

    static Monomial variable(std::size_t var, unsigned power = 1);

    unsigned exponent(std::size_t var) const noexcept {
        return var < exps_.size() ? exps_[var] : 0u;
    }
    unsigned total_degree() const noexcept { return degree_; }
    /// One past the highest variable index with a nonzero exponent.
    std::size_t width() const noexcept { return exps_.size(); }
    bool is_one() const noexcept { return exps_.empty(); }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    Monomial operator*(const Monomial& other) const;
    /// Quotient if `divisor` divides this monomial.
    std::optional<Monomial> divided_by(const Monomial& divisor) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    void trim();

    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

/// Graded lexicographic order with x1 > x2 > ... ; `operator()` is "a > b" so
/// that maps keyed by it iterate from the leading term down.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(long constant) : Polynomial(Rational(constant)) {}

    static Polynomial variable(std::size_t var);
    static Polynomial term(const Monomial& m, const Rational& c);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Leading monomial/coefficient under graded lex. Precondition: nonzero.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    /// One past the highest variable index that occurs; 0 for constants.
    std::size_t width() const noexcept;
    unsigned degree_in(std::size_t var) const noexcept;
    unsigned total_degree() const noexcept;

    /// Coefficients with respect to `var`: result[k] multiplies var^k.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned exponent) const;
    Polynomial derivative(std::size_t var) const;
    Polynomial times_monomial(const Monomial& m) const;

    /// Exact quotient if `divisor` divides this polynomial, otherwise nullopt.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;

    /// Evaluates at `point`; variables beyond point.size() raise DimensionError.
    Rational evaluate(std::span<const Rational> point) const;

    /// Human-readable form, e.g. "x1^2*x2 - 1/2*x1 + 3". Variable k is printed
    /// as names[k] when available, otherwise "x{k+1}".
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

/// Monic greatest common divisor over Q[x1..xn]; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of `a` by `b` viewed as univariate polynomials in `var`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

/// Gcd of the coefficients of `p` with respect to `var` (monic).
Polynomial content_in(const Polynomial& p, std::size_t var);

std::string rational_to_string(const Rational& q);

} // namespace algcalc
