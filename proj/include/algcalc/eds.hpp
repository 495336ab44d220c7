#pragma once

#include "algcalc/algebroid.hpp"
#include "algcalc/check_report.hpp"
#include "algcalc/forms.hpp"
#include "algcalc/ids.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace algcalc {

/// Ideal of the exterior algebra generated by pointwise independent 1-forms.
/// Represented by its generators only; members are never enumerated.
class GeneratedIdeal {
public:
    /// Throws DimensionError unless every generator is a 1-form of rank `rank`
    /// and RankDeficiency if they are dependent.
    GeneratedIdeal(std::size_t rank, AnnihilatorBasis generators);

    static GeneratedIdeal of(const LieAlgebroid& A, const SubbundleSpec& E);

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<DifferentialForm>& generators() const noexcept { return generators_.coforms; }
    /// Theta^{r+1} ^ ... ^ Theta^p.
    const DifferentialForm& top_wedge() const noexcept { return top_; }

private:
    std::size_t rank_;
    AnnihilatorBasis generators_;
    DifferentialForm top_;
    // Completion of the generators to a full coframe (complement first, then
    // the generators) and its dual frame; used to build certificates.
    std::vector<DifferentialForm> coframe_;
    std::vector<Section> dual_frame_;

    friend std::optional<std::vector<DifferentialForm>> ideal_certificate(const GeneratedIdeal&,
                                                                          const DifferentialForm&);
};

/// omega ^ Theta^{r+1} ^ ... ^ Theta^p; zero exactly for ideal members.
DifferentialForm membership_residual(const GeneratedIdeal& I, const DifferentialForm& omega);

/// omega in I. Throws DimensionError for 0-forms (a proper ideal generated by
/// 1-forms has no nonzero 0-form members).
bool ideal_membership(const GeneratedIdeal& I, const DifferentialForm& omega);

/// For members, Omega_alpha (one per generator, degree q-1) with
/// omega = sum_alpha Omega_alpha ^ Theta^alpha. Nullopt for non-members.
std::optional<std::vector<DifferentialForm>> ideal_certificate(const GeneratedIdeal& I,
                                                               const DifferentialForm& omega);

/// sum_alpha Omega_alpha ^ Theta^alpha.
DifferentialForm expand_certificate(const GeneratedIdeal& I, const std::vector<DifferentialForm>& omegas);

/// Pass iff d Theta^alpha lies in the ideal for every generator; by the graded
/// Leibniz rule this gives d I within I. Witnesses are (alpha, top-wedge
/// multi-index...) with the nonzero top-wedge coefficient.
CheckReport eds_closure_check(const LieAlgebroid& A, const SubbundleSpec& E);

/// First increasing generator tuple (1-based) on which omega is nonzero, if any.
/// Forms of degree k > r vanish on E by alternation. Throws DimensionError
/// for 0-forms.
std::optional<std::vector<std::size_t>> nonvanishing_tuple(const DifferentialForm& omega,
                                                           const SubbundleSpec& E);

bool vanishes_on_ids(const DifferentialForm& omega, const SubbundleSpec& E);

struct EquivalenceReport {
    CheckReport report;  ///< passes iff the three verdicts agree
    bool bracket_verdict = false;
    bool cartan_verdict = false;
    bool closure_verdict = false;
};

/// Runs the bracket test, the Cartan test and the closure test and compares
/// their verdicts.
EquivalenceReport eds_involutivity_equivalence(const LieAlgebroid& A, const SubbundleSpec& E);

} // namespace algcalc
