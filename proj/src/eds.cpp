#include "algcalc/eds.hpp"

#include "algcalc/calculus.hpp"
#include "algcalc/error.hpp"
#include "algcalc/matrix.hpp"

#include <string>

namespace algcalc {

GeneratedIdeal::GeneratedIdeal(std::size_t rank, AnnihilatorBasis generators)
    : rank_(rank), generators_(std::move(generators)) {
    ExprMatrix rows;
    for (const auto& g : generators_.coforms) {
        if (g.rank() != rank || g.degree() != 1)
            throw DimensionError("ideal generators must be 1-forms of the ambient rank");
        std::vector<ScalarExpr> row(rank);
        for (std::size_t a = 0; a < rank; ++a) row[a] = g.coefficient({a});
        rows.push_back(std::move(row));
    }
    const RowEchelon echelon = row_echelon(rows);
    if (echelon.pivot_columns.size() != rows.size())
        throw RankDeficiency("ideal generators are linearly dependent");
    top_ = wedge_all(rank, generators_.coforms);

    std::vector<bool> is_pivot(rank, false);
    for (std::size_t c : echelon.pivot_columns) is_pivot[c] = true;
    ExprMatrix coframe_matrix;
    for (std::size_t a = 0; a < rank; ++a) {
        if (is_pivot[a]) continue;
        coframe_.push_back(DifferentialForm::coframe(rank, a));
        std::vector<ScalarExpr> row(rank);
        row[a] = ScalarExpr(1L);
        coframe_matrix.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
        coframe_.push_back(generators_.coforms[j]);
        coframe_matrix.push_back(rows[j]);
    }
    // Dual frame: columns of the inverse of the coframe matrix.
    const auto inv = inverse(coframe_matrix);
    if (!inv) throw RankDeficiency("cannot complete ideal generators to a coframe");
    for (std::size_t v = 0; v < rank; ++v) {
        Section s(rank);
        for (std::size_t a = 0; a < rank; ++a) s[a] = (*inv)[a][v];
        dual_frame_.push_back(std::move(s));
    }
}

GeneratedIdeal GeneratedIdeal::of(const LieAlgebroid& A, const SubbundleSpec& E) {
    return GeneratedIdeal(A.rank(), annihilator(A, E));
}

DifferentialForm membership_residual(const GeneratedIdeal& I, const DifferentialForm& omega) {
    if (omega.rank() != I.rank()) throw DimensionError("form rank differs from ideal rank");
    return wedge(omega, I.top_wedge());
}

bool ideal_membership(const GeneratedIdeal& I, const DifferentialForm& omega) {
    if (omega.degree() == 0)
        throw DimensionError("membership queries require degree >= 1");
    return membership_residual(I, omega).is_zero();
}

std::optional<std::vector<DifferentialForm>> ideal_certificate(const GeneratedIdeal& I,
                                                               const DifferentialForm& omega) {
    if (!ideal_membership(I, omega)) return std::nullopt;
    const std::size_t p = I.rank();
    const std::size_t q = omega.degree();
    const std::size_t first_generator = p - I.generators().size();
    std::vector<DifferentialForm> omegas(I.generators().size(), DifferentialForm(p, q - 1));
    // omega = sum_K omega(S_K) Theta^K over increasing K in the completed
    // coframe. Members only have terms whose last index is a generator.
    for (const MultiIndex& key : increasing_tuples(p, q)) {
        if (key.back() < first_generator) continue;
        std::vector<Section> args;
        for (std::size_t k : key) args.push_back(I.dual_frame_[k]);
        const ScalarExpr c = apply_form(omega, args);
        if (c.is_zero()) continue;
        std::vector<DifferentialForm> head;
        for (std::size_t i = 0; i + 1 < key.size(); ++i) head.push_back(I.coframe_[key[i]]);
        omegas[key.back() - first_generator] += c * wedge_all(p, head);
    }
    return omegas;
}

DifferentialForm expand_certificate(const GeneratedIdeal& I, const std::vector<DifferentialForm>& omegas) {
    if (omegas.size() != I.generators().size()) throw DimensionError("one Omega per generator expected");
    if (omegas.empty()) return DifferentialForm(I.rank(), 1);
    DifferentialForm sum(I.rank(), omegas.front().degree() + 1);
    for (std::size_t j = 0; j < omegas.size(); ++j) sum += wedge(omegas[j], I.generators()[j]);
    return sum;
}

CheckReport eds_closure_check(const LieAlgebroid& A, const SubbundleSpec& E) {
    CheckReport report{"eds", {}, {}};
    const GeneratedIdeal I = GeneratedIdeal::of(A, E);
    const std::size_t r = E.dimension();
    for (std::size_t j = 0; j < I.generators().size(); ++j) {
        const DifferentialForm residual = membership_residual(I, ext_deriv(A, I.generators()[j]));
        for (const auto& [key, c] : residual.terms()) {
            std::vector<std::size_t> indices{r + j + 1};
            for (std::size_t k : key) indices.push_back(k + 1);
            report.record("d(theta) outside ideal", std::move(indices), c);
        }
    }
    return report;
}

std::optional<std::vector<std::size_t>> nonvanishing_tuple(const DifferentialForm& omega,
                                                           const SubbundleSpec& E) {
    if (omega.degree() == 0) throw DimensionError("vanishing condition needs a form of degree >= 1");
    const std::size_t k = omega.degree();
    if (k > E.dimension()) return std::nullopt;
    for (const MultiIndex& key : increasing_tuples(E.dimension(), k)) {
        std::vector<Section> args;
        for (std::size_t a : key) args.push_back(E.generators[a]);
        if (!apply_form(omega, args).is_zero()) {
            std::vector<std::size_t> out;
            for (std::size_t a : key) out.push_back(a + 1);
            return out;
        }
    }
    return std::nullopt;
}

bool vanishes_on_ids(const DifferentialForm& omega, const SubbundleSpec& E) {
    return !nonvanishing_tuple(omega, E).has_value();
}

EquivalenceReport eds_involutivity_equivalence(const LieAlgebroid& A, const SubbundleSpec& E) {
    EquivalenceReport out;
    CheckReport bracket_report = involutive_bracket_test(A, E);
    CheckReport cartan_report = cartan_test(A, E).report;
    CheckReport closure_report = eds_closure_check(A, E);
    out.bracket_verdict = bracket_report.passed();
    out.cartan_verdict = cartan_report.passed();
    out.closure_verdict = closure_report.passed();
    out.report.name = "equivalence";
    if (!(out.bracket_verdict == out.cartan_verdict && out.cartan_verdict == out.closure_verdict)) {
        // Indices encode the three verdicts (1 = pass, 0 = fail).
        out.report.record("verdict disagreement",
                          {std::size_t{out.bracket_verdict}, std::size_t{out.cartan_verdict},
                           std::size_t{out.closure_verdict}},
                          ScalarExpr(1L));
    }
    out.report.children = {std::move(bracket_report), std::move(cartan_report), std::move(closure_report)};
    return out;
}

} // namespace algcalc
