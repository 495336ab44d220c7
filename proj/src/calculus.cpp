#include "algcalc/calculus.hpp"

#include "algcalc/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace algcalc {

DifferentialForm lie_derivative(const LieAlgebroid& A, const Section& z, const DifferentialForm& omega) {
    const std::size_t p = A.rank();
    if (omega.rank() != p || z.rank() != p) throw DimensionError("rank mismatch in lie_derivative");
    const std::size_t q = omega.degree();
    if (q == 0) return DifferentialForm::scalar(p, anchor_apply(A, z, omega.value()));

    std::vector<Section> z_brackets;  // [z, t_a]
    z_brackets.reserve(p);
    for (std::size_t a = 0; a < p; ++a) z_brackets.push_back(bracket(A, z, Section::frame(p, a)));

    DifferentialForm out(p, q);
    for (const MultiIndex& key : increasing_tuples(p, q)) {
        ScalarExpr value = anchor_apply(A, z, omega.coefficient(key));
        MultiIndex slots(key);
        for (std::size_t i = 0; i < q; ++i) {
            const Section& br = z_brackets[key[i]];
            for (std::size_t b = 0; b < p; ++b) {
                if (br[b].is_zero()) continue;
                slots[i] = b;
                const ScalarExpr w = omega.evaluate_on_frame(slots);
                if (!w.is_zero()) value -= br[b] * w;
            }
            slots[i] = key[i];
        }
        out.set(key, std::move(value));
    }
    return out;
}

DifferentialForm ext_deriv(const LieAlgebroid& A, const DifferentialForm& omega) {
    const std::size_t p = A.rank();
    if (omega.rank() != p) throw DimensionError("rank mismatch in ext_deriv");
    const std::size_t q = omega.degree();
    DifferentialForm out(p, q + 1);
    if (omega.is_zero()) return out;

    std::vector<Section> frame;
    for (std::size_t a = 0; a < p; ++a) frame.push_back(Section::frame(p, a));

    for (const MultiIndex& key : increasing_tuples(p, q + 1)) {
        ScalarExpr value;
        // sum_i (-1)^i rho(t_{k_i}) (w(t_{k_0}, ..., ^i, ..., t_{k_q}))
        for (std::size_t i = 0; i <= q; ++i) {
            MultiIndex rest;
            for (std::size_t j = 0; j <= q; ++j)
                if (j != i) rest.push_back(key[j]);
            const ScalarExpr& c = omega.coefficient(rest);
            if (c.is_zero()) continue;
            const ScalarExpr term = anchor_apply(A, frame[key[i]], c);
            value += (i % 2 == 0) ? term : -term;
        }
        // sum_{i<j} (-1)^{i+j} w([t_{k_i}, t_{k_j}], t_{k_0}, ..., ^i, ..., ^j, ...)
        for (std::size_t i = 0; i <= q; ++i) {
            for (std::size_t j = i + 1; j <= q; ++j) {
                MultiIndex slots{0};
                for (std::size_t m = 0; m <= q; ++m)
                    if (m != i && m != j) slots.push_back(key[m]);
                ScalarExpr inner;
                for (std::size_t c = 0; c < p; ++c) {
                    const ScalarExpr& L = A.structure(key[i], key[j], c);
                    if (L.is_zero()) continue;
                    slots[0] = c;
                    const ScalarExpr w = omega.evaluate_on_frame(slots);
                    if (!w.is_zero()) inner += L * w;
                }
                value += ((i + j) % 2 == 0) ? inner : -inner;
            }
        }
        out.set(key, std::move(value));
    }
    return out;
}

DifferentialForm coordinate_differential(const LieAlgebroid& A, std::size_t i) {
    if (i >= A.base_dim()) throw DimensionError("coordinate index out of range");
    DifferentialForm w(A.rank(), 1);
    for (std::size_t a = 0; a < A.rank(); ++a) w.set({a}, A.anchor(i, a));
    return w;
}

// ---------------------------------------------------------------------------
// Identity verification

namespace {

void record_difference(CheckReport& report, std::size_t sample, const DifferentialForm& lhs,
                       const DifferentialForm& rhs) {
    const DifferentialForm diff = lhs - rhs;
    if (diff.is_zero()) return;
    // One witness per violated sample: the first nonzero coefficient.
    const auto& [key, residual] = *diff.terms().begin();
    std::vector<std::size_t> indices{sample + 1};
    for (std::size_t k : key) indices.push_back(k + 1);
    report.record(report.name, std::move(indices), residual);
}

DifferentialForm with_sign(int sign, const DifferentialForm& w) {
    return sign > 0 ? w : -w;
}

} // namespace

CheckReport verify_calculus_identities(const LieAlgebroid& A, const SamplingBudget& budget,
                                       std::uint64_t seed) {
    const std::size_t p = A.rank();
    const std::size_t max_q = std::min(p, budget.max_form_degree);
    Sampler sampler(seed, A.base_dim(), p, budget);

    // Picks a pair of degrees (q, r) with q + r <= p whenever possible so that
    // wedge products are not trivially zero.
    auto degree_pair = [&]() {
        const std::size_t q = sampler.uniform(0, max_q);
        const std::size_t r = sampler.uniform(0, std::min(max_q, p > q ? p - q : std::size_t{0}));
        return std::pair{q, r};
    };

    CheckReport lie_wedge{"lie derivative of wedge", {}, {}};
    CheckReport interior_wedge{"interior product of wedge", {}, {}};
    CheckReport commutator{"lie-interior commutator", {}, {}};
    CheckReport cartan{"cartan formula", {}, {}};
    CheckReport d_wedge{"exterior derivative of wedge", {}, {}};
    CheckReport lie_d{"lie derivative commutes with d", {}, {}};
    CheckReport d_squared{"d squared vanishes", {}, {}};

    for (std::size_t s = 0; s < budget.samples; ++s) {
        {
            const auto [q, r] = degree_pair();
            const Section z = sampler.section();
            const DifferentialForm w = sampler.form(q), h = sampler.form(r);
            record_difference(lie_wedge, s, lie_derivative(A, z, wedge(w, h)),
                              wedge(lie_derivative(A, z, w), h) + wedge(w, lie_derivative(A, z, h)));
        }
        {
            const auto [q, r] = degree_pair();
            const Section z = sampler.section();
            const DifferentialForm w = sampler.form(q), h = sampler.form(r);
            const DifferentialForm lhs = interior(z, wedge(w, h));
            // i_z vanishes on 0-forms, so skip the term whose factor has degree 0.
            DifferentialForm rhs(p, lhs.degree());
            if (q > 0) rhs += wedge(interior(z, w), h);
            if (r > 0) rhs += with_sign(q % 2 == 0 ? 1 : -1, wedge(w, interior(z, h)));
            record_difference(interior_wedge, s, lhs, rhs);
        }
        {
            const std::size_t q = sampler.uniform(0, max_q);
            const Section z = sampler.section();
            const Section v = sampler.section();
            const DifferentialForm w = sampler.form(q);
            const DifferentialForm lhs = (q == 0)
                ? DifferentialForm(p, 0)
                : lie_derivative(A, v, interior(z, w)) - interior(z, lie_derivative(A, v, w));
            record_difference(commutator, s, lhs, interior(bracket(A, v, z), w));
        }
        {
            const std::size_t q = sampler.uniform(0, max_q);
            const Section z = sampler.section();
            const DifferentialForm w = sampler.form(q);
            DifferentialForm rhs = interior(z, ext_deriv(A, w));
            if (q > 0) rhs += ext_deriv(A, interior(z, w));
            record_difference(cartan, s, lie_derivative(A, z, w), rhs);
        }
        {
            const auto [q, r] = degree_pair();
            const DifferentialForm w = sampler.form(q), h = sampler.form(r);
            record_difference(d_wedge, s, ext_deriv(A, wedge(w, h)),
                              wedge(ext_deriv(A, w), h) +
                                  with_sign(q % 2 == 0 ? 1 : -1, wedge(w, ext_deriv(A, h))));
        }
        {
            const std::size_t q = sampler.uniform(0, max_q);
            const Section z = sampler.section();
            const DifferentialForm w = sampler.form(q);
            record_difference(lie_d, s, lie_derivative(A, z, ext_deriv(A, w)),
                              ext_deriv(A, lie_derivative(A, z, w)));
        }
        {
            const std::size_t q = sampler.uniform(0, max_q);
            const DifferentialForm w = sampler.form(q);
            record_difference(d_squared, s, ext_deriv(A, ext_deriv(A, w)), DifferentialForm(p, q + 2));
        }
    }

    CheckReport report{"calculus identities", {}, {}};
    report.children = {lie_wedge, interior_wedge, commutator, cartan, d_wedge, lie_d, d_squared};
    for (const auto& child : report.children)
        report.witnesses.insert(report.witnesses.end(), child.witnesses.begin(), child.witnesses.end());
    return report;
}

CheckReport maurer_cartan_check(const LieAlgebroid& A) {
    const std::size_t p = A.rank();
    CheckReport report{"maurer-cartan", {}, {}};
    for (std::size_t a = 0; a < p; ++a) {
        DifferentialForm expected(p, 2);
        for (std::size_t b = 0; b < p; ++b)
            for (std::size_t c = b + 1; c < p; ++c)
                expected -= A.structure(b, c, a) *
                            wedge(DifferentialForm::coframe(p, b), DifferentialForm::coframe(p, c));
        const DifferentialForm diff = ext_deriv(A, DifferentialForm::coframe(p, a)) - expected;
        for (const auto& [key, residual] : diff.terms())
            report.record("C1", {a + 1, key[0] + 1, key[1] + 1}, residual);
    }
    for (std::size_t i = 0; i < A.base_dim(); ++i) {
        DifferentialForm expected(p, 1);
        for (std::size_t a = 0; a < p; ++a)
            expected += A.anchor(i, a) * DifferentialForm::coframe(p, a);
        const DifferentialForm x = DifferentialForm::scalar(p, ScalarExpr::coordinate(i + 1));
        const DifferentialForm diff = ext_deriv(A, x) - expected;
        for (const auto& [key, residual] : diff.terms())
            report.record("C2", {i + 1, key[0] + 1}, residual);
    }
    return report;
}

} // namespace algcalc
