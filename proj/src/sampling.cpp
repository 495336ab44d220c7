#include "algcalc/sampling.hpp"

#include <algorithm>

namespace algcalc {

std::size_t Sampler::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

long Sampler::coefficient() {
    return std::uniform_int_distribution<long>(-budget_.max_coefficient, budget_.max_coefficient)(rng_);
}

ScalarExpr Sampler::polynomial() {
    Polynomial p;
    const std::size_t terms = uniform(0, budget_.max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<unsigned> exps(n_, 0u);
        const unsigned degree = static_cast<unsigned>(uniform(0, budget_.max_degree));
        for (unsigned d = 0; d < degree && n_ > 0; ++d) ++exps[uniform(0, n_ - 1)];
        p += Polynomial::term(Monomial(std::move(exps)), Rational(coefficient()));
    }
    return ScalarExpr(p);
}

ScalarExpr Sampler::nonzero_polynomial() {
    while (true) {
        ScalarExpr e = polynomial();
        if (!e.is_zero()) return e;
    }
}

Section Sampler::section() {
    Section s(p_);
    for (std::size_t a = 0; a < p_; ++a) s[a] = polynomial();
    return s;
}

DifferentialForm Sampler::form(std::size_t degree) {
    DifferentialForm w(p_, degree);
    for (const auto& key : increasing_tuples(p_, degree)) {
        if (uniform(0, 2) == 0) continue;
        w.set(key, polynomial());
    }
    return w;
}

std::size_t Sampler::form_degree() {
    return uniform(0, std::min(p_, budget_.max_form_degree));
}

} // namespace algcalc
