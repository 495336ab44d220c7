#pragma once

#include "algcalc/algebroid.hpp"
#include "algcalc/forms.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace algcalc {

/// Bounds for randomly generated polynomial data.
struct SamplingBudget {
    std::size_t samples = 50;      ///< random inputs per identity
    unsigned max_degree = 2;       ///< total degree of coefficient polynomials
    std::size_t max_terms = 3;     ///< terms per coefficient polynomial
    long max_coefficient = 3;      ///< integer coefficients drawn from [-c, c]
    std::size_t max_form_degree = 4;
};

/// Deterministic generator of random polynomials, sections and forms.
class Sampler {
public:
    Sampler(std::uint64_t seed, std::size_t base_dim, std::size_t rank, SamplingBudget budget = {})
        : rng_(seed), n_(base_dim), p_(rank), budget_(budget) {}

    std::size_t uniform(std::size_t lo, std::size_t hi);
    long coefficient();

    /// Random polynomial, possibly zero.
    ScalarExpr polynomial();
    ScalarExpr nonzero_polynomial();
    Section section();
    /// Form of the given degree; each coefficient is nonzero with probability ~2/3.
    DifferentialForm form(std::size_t degree);
    /// Degree drawn from 0..min(rank, max_form_degree).
    std::size_t form_degree();

private:
    std::mt19937_64 rng_;
    std::size_t n_;
    std::size_t p_;
    SamplingBudget budget_;
};

} // namespace algcalc
