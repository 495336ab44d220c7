#include "algcalc/polynomial.hpp"

#include "algcalc/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace algcalc {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
    trim();
}

Monomial Monomial::variable(std::size_t var, unsigned power) {
    std::vector<unsigned> e(var + 1, 0u);
    e[var] = power;
    return Monomial(std::move(e));
}

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0u) exps_.pop_back();
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<unsigned> e(std::max(exps_.size(), other.exps_.size()), 0u);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(i) + other.exponent(i);
    return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::divided_by(const Monomial& divisor) const {
    if (divisor.exps_.size() > exps_.size()) return std::nullopt;
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < divisor.exps_.size(); ++i) {
        if (divisor.exps_[i] > e[i]) return std::nullopt;
        e[i] -= divisor.exps_[i];
    }
    return Monomial(std::move(e));
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    const std::size_t w = std::max(a.width(), b.width());
    for (std::size_t i = 0; i < w; ++i) {
        const unsigned ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::size_t var) {
    return term(Monomial::variable(var), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::width() const noexcept {
    std::size_t w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.width());
    return w;
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

unsigned Polynomial::total_degree() const noexcept {
    return terms_.empty() ? 0u : terms_.begin()->first.total_degree();
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    std::vector<Polynomial> out(degree_in(var) + 1);
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> e = m.exponents();
        unsigned k = 0;
        if (var < e.size()) {
            k = e[var];
            e[var] = 0;
        }
        out[k].add_term(Monomial(std::move(e)), c);
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, coeff] : terms_) coeff *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(1L), base(*this);
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.exponent(var);
        if (e == 0) continue;
        std::vector<unsigned> ex = m.exponents();
        ex[var] -= 1;
        r.add_term(Monomial(std::move(ex)), c * e);
    }
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (divisor.is_constant()) return *this * (Rational(1) / divisor.leading_coefficient());
    Polynomial quotient, rest(*this);
    const Monomial& lm = divisor.leading_monomial();
    const Rational& lc = divisor.leading_coefficient();
    while (!rest.is_zero()) {
        auto m = rest.leading_monomial().divided_by(lm);
        if (!m) return std::nullopt;
        const Rational c = rest.leading_coefficient() / lc;
        quotient.add_term(*m, c);
        rest -= divisor.times_monomial(*m) * c;
    }
    return quotient;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coefficient());
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (width() > point.size())
        throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                             " entries, polynomial uses " + std::to_string(width()));
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.width(); ++i) {
            for (unsigned k = 0; k < m.exponent(i); ++k) t *= point[i];
        }
        sum += t;
    }
    return sum;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

namespace {

std::string variable_name(std::size_t var, std::span<const std::string> names) {
    if (var < names.size()) return names[var];
    return "x" + std::to_string(var + 1);
}

} // namespace

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << rational_to_string(mag);
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            os << rational_to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < m.width(); ++i) {
            const unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (need_star) os << '*';
            os << variable_name(i, names);
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd via content / primitive-part recursion on the highest variable

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
    const unsigned db = b.degree_in(var);
    const Polynomial lcb = b.coefficients_in(var).back();
    Polynomial r = a;
    while (!r.is_zero()) {
        const unsigned dr = r.degree_in(var);
        if (dr < db) break;
        const Polynomial lcr = r.coefficients_in(var).back();
        r = lcb * r - (lcr * b).times_monomial(Monomial::variable(var, dr - db));
    }
    return r;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial g;
    for (const Polynomial& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = a.divide_exact(b);
    if (!q) throw Error("internal error: inexact division in gcd");
    return *q;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
    if (p.is_zero()) return p;
    return exact_quotient(p, content_in(p, var)).monic();
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1L);
    if (a == b) return a.monic();

    const std::size_t var = std::max(a.width(), b.width()) - 1;
    const unsigned da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0) return gcd(a, content_in(b, var));
    if (db == 0) return gcd(content_in(a, var), b);

    const Polynomial ca = content_in(a, var), cb = content_in(b, var);
    const Polynomial content_gcd = gcd(ca, cb);
    Polynomial p = exact_quotient(a, ca).monic();
    Polynomial q = exact_quotient(b, cb).monic();
    if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);

    // Primitive pseudo-remainder sequence.
    while (true) {
        Polynomial r = pseudo_remainder(p, q, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            q = Polynomial(1L);
            break;
        }
        p = std::move(q);
        q = primitive_part(r, var);
    }
    return (content_gcd * primitive_part(q, var)).monic();
}

} // namespace algcalc
