#include "algcalc/ids.hpp"

#include "algcalc/calculus.hpp"
#include "algcalc/error.hpp"

#include <string>

namespace algcalc {

ExprMatrix generator_matrix(const LieAlgebroid& A, const SubbundleSpec& E) {
    ExprMatrix m;
    m.reserve(E.generators.size());
    for (const Section& s : E.generators) {
        if (s.rank() != A.rank())
            throw DimensionError("subbundle generator has " + std::to_string(s.rank()) +
                                 " components, algebroid rank is " + std::to_string(A.rank()));
        m.push_back(s.components());
    }
    return m;
}

void require_full_rank(const LieAlgebroid& A, const SubbundleSpec& E) {
    const ExprMatrix m = generator_matrix(A, E);
    if (E.dimension() > A.rank() || generic_rank(m) != E.dimension())
        throw RankDeficiency("subbundle generators are linearly dependent over the function field");
}

AnnihilatorBasis annihilator(const LieAlgebroid& A, const SubbundleSpec& E) {
    require_full_rank(A, E);
    AnnihilatorBasis basis;
    for (const auto& v : nullspace(generator_matrix(A, E), A.rank()))
        basis.coforms.push_back(DifferentialForm::one_form(v));
    return basis;
}

AdaptedCoframe extend_frame(const LieAlgebroid& A, const SubbundleSpec& E) {
    require_full_rank(A, E);
    const std::size_t p = A.rank();
    AdaptedCoframe cf;
    cf.dimension = E.dimension();
    cf.frame = E.generators;
    const RowEchelon echelon = row_echelon(generator_matrix(A, E));
    std::vector<bool> is_pivot(p, false);
    for (std::size_t c : echelon.pivot_columns) is_pivot[c] = true;
    for (std::size_t a = 0; a < p; ++a) {
        if (!is_pivot[a]) cf.frame.push_back(Section::frame(p, a));
    }
    ExprMatrix frame_matrix;
    for (const Section& s : cf.frame) frame_matrix.push_back(s.components());
    const auto inv = inverse(transpose(frame_matrix));
    if (!inv) throw RankDeficiency("no generic completion of the subbundle frame");
    for (const auto& row : *inv) cf.coframe.push_back(DifferentialForm::one_form(row));
    return cf;
}

bool span_contains(const LieAlgebroid& A, const SubbundleSpec& E, const Section& s) {
    ExprMatrix m = generator_matrix(A, E);
    const std::size_t base = generic_rank(m);
    if (s.rank() != A.rank()) throw DimensionError("section rank differs from algebroid rank");
    m.push_back(s.components());
    return generic_rank(m) == base;
}

CheckReport involutive_bracket_test(const LieAlgebroid& A, const SubbundleSpec& E) {
    CheckReport report{"involutive", {}, {}};
    const AnnihilatorBasis ann = annihilator(A, E);
    const std::size_t r = E.dimension();
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
            const Section br = bracket(A, E.generators[a], E.generators[b]);
            for (std::size_t j = 0; j < ann.coforms.size(); ++j) {
                const Section arg[] = {br};
                report.record("bracket outside subbundle", {a + 1, b + 1, r + j + 1},
                              apply_form(ann.coforms[j], arg));
            }
        }
    }
    return report;
}

TwoFormDecomposition decompose_two_form(const AdaptedCoframe& cf, const DifferentialForm& omega) {
    if (omega.degree() != 2)
        throw DimensionError("decompose_two_form expects a 2-form, got degree " +
                             std::to_string(omega.degree()));
    const std::size_t p = cf.frame.size();
    ExprMatrix coeffs(p, std::vector<ScalarExpr>(p));
    for (std::size_t u = 0; u < p; ++u) {
        for (std::size_t v = u + 1; v < p; ++v) {
            const Section pair[] = {cf.frame[u], cf.frame[v]};
            coeffs[u][v] = apply_form(omega, pair);
            coeffs[v][u] = -coeffs[u][v];
        }
    }
    return TwoFormDecomposition(cf.dimension, std::move(coeffs));
}

DifferentialForm reconstruct(const AdaptedCoframe& cf, const TwoFormDecomposition& dec) {
    const std::size_t p = cf.coframe.size();
    DifferentialForm out(p, 2);
    for (std::size_t u = 0; u < p; ++u)
        for (std::size_t v = u + 1; v < p; ++v) {
            if (dec.coefficient(u, v).is_zero()) continue;
            out += dec.coefficient(u, v) * wedge(cf.coframe[u], cf.coframe[v]);
        }
    return out;
}

CartanResult cartan_test(const LieAlgebroid& A, const SubbundleSpec& E) {
    CartanResult result{{"cartan", {}, {}}, extend_frame(A, E), {}};
    const AdaptedCoframe& cf = result.coframe;
    const std::size_t p = A.rank();
    const std::size_t r = cf.dimension;
    const ScalarExpr half = ScalarExpr(Rational(1, 2));

    for (std::size_t alpha = r; alpha < p; ++alpha) {
        const DifferentialForm d_theta = ext_deriv(A, cf.coframe[alpha]);
        CartanDecomposition dec{alpha, decompose_two_form(cf, d_theta), {}};
        bool a_block_vanishes = true;
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = b + 1; c < r; ++c) {
                if (dec.d_theta.A(b, c).is_zero()) continue;
                a_block_vanishes = false;
                result.report.record("A-block", {alpha + 1, b + 1, c + 1}, dec.d_theta.A(b, c));
            }

        if (a_block_vanishes) {
            DifferentialForm sum(p, 2);
            for (std::size_t gamma = r; gamma < p; ++gamma) {
                DifferentialForm omega(p, 1);
                for (std::size_t b = 0; b < r; ++b)
                    omega += dec.d_theta.B(b, gamma) * cf.coframe[b];
                for (std::size_t beta = r; beta < p; ++beta)
                    omega += (half * dec.d_theta.C(beta, gamma)) * cf.coframe[beta];
                sum += wedge(omega, cf.coframe[gamma]);
                dec.omegas.push_back(std::move(omega));
            }
            const DifferentialForm diff = d_theta - sum;
            for (const auto& [key, residual] : diff.terms())
                result.report.record("reconstruction", {alpha + 1, key[0] + 1, key[1] + 1}, residual);
        }
        result.decompositions.push_back(std::move(dec));
    }
    return result;
}

} // namespace algcalc
