#include "algcalc/forms.hpp"

#include "algcalc/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace algcalc {

std::vector<MultiIndex> increasing_tuples(std::size_t rank, std::size_t degree) {
    std::vector<MultiIndex> out;
    if (degree > rank) return out;
    MultiIndex cur(degree);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
        out.push_back(cur);
        std::size_t i = degree;
        while (i > 0 && cur[i - 1] == rank - degree + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < degree; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int permutation_sign(std::span<const std::size_t> indices) {
    int sign = 1;
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            if (indices[i] == indices[j]) return 0;
            if (indices[i] > indices[j]) sign = -sign;
        }
    return sign;
}

// ---------------------------------------------------------------------------
// DifferentialForm

DifferentialForm DifferentialForm::scalar(std::size_t rank, const ScalarExpr& f) {
    DifferentialForm w(rank, 0);
    w.set({}, f);
    return w;
}

DifferentialForm DifferentialForm::coframe(std::size_t rank, std::size_t alpha) {
    DifferentialForm w(rank, 1);
    w.set({alpha}, ScalarExpr(1L));
    return w;
}

DifferentialForm DifferentialForm::one_form(const std::vector<ScalarExpr>& coefficients) {
    DifferentialForm w(coefficients.size(), 1);
    for (std::size_t a = 0; a < coefficients.size(); ++a) w.set({a}, coefficients[a]);
    return w;
}

void DifferentialForm::check_key(const MultiIndex& key) const {
    if (key.size() != degree_) throw DimensionError("multi-index length differs from form degree");
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] >= rank_) throw DimensionError("coframe index out of range");
        if (i > 0 && key[i - 1] >= key[i]) throw DimensionError("multi-index must be strictly increasing");
    }
}

const ScalarExpr& DifferentialForm::coefficient(const MultiIndex& key) const {
    static const ScalarExpr zero;
    auto it = terms_.find(key);
    return it == terms_.end() ? zero : it->second;
}

ScalarExpr DifferentialForm::evaluate_on_frame(std::span<const std::size_t> indices) const {
    if (indices.size() != degree_) throw DimensionError("form arity mismatch");
    const int sign = permutation_sign(indices);
    if (sign == 0) return ScalarExpr();
    MultiIndex key(indices.begin(), indices.end());
    std::sort(key.begin(), key.end());
    const ScalarExpr& c = coefficient(key);
    return sign > 0 ? c : -c;
}

void DifferentialForm::add(const MultiIndex& key, const ScalarExpr& c) {
    check_key(key);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void DifferentialForm::set(const MultiIndex& key, ScalarExpr c) {
    check_key(key);
    if (c.is_zero()) {
        terms_.erase(key);
    } else {
        terms_[key] = std::move(c);
    }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& other) {
    if (other.rank_ != rank_ || other.degree_ != degree_)
        throw DimensionError("adding forms of different rank or degree");
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& other) {
    if (other.rank_ != rank_ || other.degree_ != degree_)
        throw DimensionError("subtracting forms of different rank or degree");
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
}

DifferentialForm operator-(const DifferentialForm& a) {
    DifferentialForm r(a);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

DifferentialForm operator*(const ScalarExpr& f, const DifferentialForm& w) {
    DifferentialForm r(w.rank_, w.degree_);
    if (f.is_zero()) return r;
    for (const auto& [k, c] : w.terms_) r.terms_.emplace(k, f * c);
    return r;
}

std::string DifferentialForm::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    if (degree_ == 0) return value().to_string(names);
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string basis;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i > 0) basis += "^";
            basis += "t^" + std::to_string(key[i] + 1);
        }
        if (c == ScalarExpr(1L)) {
            os << basis;
        } else if (c.is_polynomial() && c.numerator().term_count() == 1) {
            os << c.to_string(names) << "*" << basis;
        } else {
            os << "(" << c.to_string(names) << ")*" << basis;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exterior algebra operations

DifferentialForm wedge(const DifferentialForm& omega, const DifferentialForm& theta) {
    if (omega.rank() != theta.rank()) throw DimensionError("wedge of forms over different ranks");
    DifferentialForm out(omega.rank(), omega.degree() + theta.degree());
    for (const auto& [I, a] : omega.terms()) {
        for (const auto& [J, b] : theta.terms()) {
            // Sign of the shuffle bringing I ++ J into increasing order.
            int sign = 1;
            bool overlap = false;
            for (std::size_t i : I) {
                for (std::size_t j : J) {
                    if (i == j) overlap = true;
                    else if (i > j) sign = -sign;
                }
            }
            if (overlap) continue;
            MultiIndex K;
            K.reserve(I.size() + J.size());
            std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(K));
            const ScalarExpr prod = a * b;
            out.add(K, sign > 0 ? prod : -prod);
        }
    }
    return out;
}

DifferentialForm wedge_all(std::size_t rank, std::span<const DifferentialForm> forms) {
    DifferentialForm acc = DifferentialForm::scalar(rank, ScalarExpr(1L));
    for (const auto& f : forms) acc = wedge(acc, f);
    return acc;
}

namespace {

/// det of the q x q matrix M[i][j] = sections[j][key[i]], by permutation expansion.
ScalarExpr minor_determinant(const MultiIndex& key, std::span<const Section> sections) {
    const std::size_t q = key.size();
    std::vector<std::size_t> perm(q);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    ScalarExpr det;
    do {
        ScalarExpr term(1L);
        for (std::size_t j = 0; j < q && !term.is_zero(); ++j) term *= sections[j][key[perm[j]]];
        if (term.is_zero()) continue;
        det += permutation_sign(perm) > 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

ScalarExpr apply_form(const DifferentialForm& omega, std::span<const Section> sections) {
    if (sections.size() != omega.degree())
        throw DimensionError("form of degree " + std::to_string(omega.degree()) + " applied to " +
                             std::to_string(sections.size()) + " sections");
    for (const auto& s : sections) {
        if (s.rank() != omega.rank()) throw DimensionError("section rank differs from form rank");
    }
    ScalarExpr sum;
    for (const auto& [key, c] : omega.terms()) sum += c * minor_determinant(key, sections);
    return sum;
}

DifferentialForm interior(const Section& z, const DifferentialForm& omega) {
    if (z.rank() != omega.rank()) throw DimensionError("section rank differs from form rank");
    if (omega.degree() == 0) return DifferentialForm(omega.rank(), 0);
    DifferentialForm out(omega.rank(), omega.degree() - 1);
    // (i_z w)_J = sum_a z^a w(t_a, t_J): remove each slot of every key.
    for (const auto& [key, c] : omega.terms()) {
        for (std::size_t pos = 0; pos < key.size(); ++pos) {
            const ScalarExpr& za = z[key[pos]];
            if (za.is_zero()) continue;
            MultiIndex rest;
            rest.reserve(key.size() - 1);
            for (std::size_t i = 0; i < key.size(); ++i)
                if (i != pos) rest.push_back(key[i]);
            const ScalarExpr term = za * c;
            out.add(rest, pos % 2 == 0 ? term : -term);
        }
    }
    return out;
}

} // namespace algcalc
