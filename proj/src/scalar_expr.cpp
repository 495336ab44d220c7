#include "algcalc/scalar_expr.hpp"

#include "algcalc/error.hpp"

#include <cctype>
#include <set>

namespace algcalc {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

} // namespace

std::vector<Coordinate> make_coordinates(const std::vector<std::string>& names) {
    std::vector<Coordinate> coords;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_identifier(names[i]))
            throw Error("invalid coordinate name '" + names[i] + "'");
        if (!seen.insert(names[i]).second)
            throw Error("duplicate coordinate name '" + names[i] + "'");
        coords.push_back({i + 1, names[i]});
    }
    return coords;
}

std::vector<Coordinate> default_coordinates(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make_coordinates(names);
}

std::vector<std::string> coordinate_names(std::span<const Coordinate> coords) {
    std::vector<std::string> names;
    names.reserve(coords.size());
    for (const auto& c : coords) names.push_back(c.name);
    return names;
}

ScalarExpr::ScalarExpr(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DivisionByZero("division by zero expression");
    if (num.is_zero()) {
        den_ = Polynomial(1L);
        return;
    }
    if (den.is_constant()) {
        num_ = num * (Rational(1) / den.leading_coefficient());
        den_ = Polynomial(1L);
        return;
    }
    const Polynomial g = gcd(num, den);
    Polynomial n = *num.divide_exact(g);
    Polynomial d = *den.divide_exact(g);
    const Rational lc = d.leading_coefficient();
    if (lc != 1) {
        const Rational inv = Rational(1) / lc;
        n *= inv;
        d *= inv;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

ScalarExpr ScalarExpr::coordinate(std::size_t index) {
    if (index == 0) throw DimensionError("coordinate indices start at 1");
    return ScalarExpr(Polynomial::variable(index - 1));
}

ScalarExpr ScalarExpr::operator-() const {
    return ScalarExpr(-num_, den_, Canonical{});
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return ScalarExpr(a.num_ + b.num_, a.den_);
    return ScalarExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
    return a + (-b);
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.is_zero() || b.is_zero()) return ScalarExpr();
    if (a.is_polynomial() && b.is_polynomial())
        return ScalarExpr(a.num_ * b.num_, Polynomial(1L), ScalarExpr::Canonical{});
    return ScalarExpr(a.num_ * b.num_, a.den_ * b.den_);
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero expression");
    return ScalarExpr(a.num_ * b.den_, a.den_ * b.num_);
}

ScalarExpr ScalarExpr::pow(unsigned exponent) const {
    return ScalarExpr(num_.pow(exponent), den_.pow(exponent), Canonical{});
}

std::string ScalarExpr::to_string(std::span<const std::string> names) const {
    if (is_polynomial()) return num_.to_string(names);
    std::string n = num_.to_string(names);
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.to_string(names);
    const bool bare_power = den_.term_count() == 1 && den_.leading_coefficient() == 1 &&
                            den_.leading_monomial().total_degree() ==
                                den_.leading_monomial().exponent(den_.width() - 1);
    if (!bare_power) d = "(" + d + ")";
    return n + "/" + d;
}

ScalarExpr add(const ScalarExpr& a, const ScalarExpr& b) { return a + b; }
ScalarExpr sub(const ScalarExpr& a, const ScalarExpr& b) { return a - b; }
ScalarExpr mul(const ScalarExpr& a, const ScalarExpr& b) { return a * b; }
ScalarExpr div(const ScalarExpr& a, const ScalarExpr& b) { return a / b; }
ScalarExpr neg(const ScalarExpr& a) { return -a; }

ScalarExpr partial(const ScalarExpr& a, std::size_t index, std::size_t n) {
    if (index < 1 || index > n)
        throw DimensionError("coordinate index " + std::to_string(index) + " out of range 1.." +
                             std::to_string(n));
    const std::size_t var = index - 1;
    const Polynomial& num = a.numerator();
    const Polynomial& den = a.denominator();
    if (a.is_polynomial()) return ScalarExpr(num.derivative(var));
    return ScalarExpr(num.derivative(var) * den - num * den.derivative(var), den * den);
}

bool is_zero(const ScalarExpr& a) { return a.is_zero(); }

Rational eval_at(const ScalarExpr& a, std::span<const Rational> point) {
    const Rational d = a.denominator().evaluate(point);
    if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
    return a.numerator().evaluate(point) / d;
}

} // namespace algcalc
