#pragma once

#include "algcalc/algebroid.hpp"
#include "algcalc/check_report.hpp"
#include "algcalc/forms.hpp"
#include "algcalc/matrix.hpp"

#include <cstddef>
#include <vector>

namespace algcalc {

/// Interior differential system given by r spanning sections. The generator
/// matrix must have rank r over the function field; verdicts derived from it
/// hold on the dense open set where that generic rank is attained.
struct SubbundleSpec {
    std::vector<Section> generators;

    std::size_t dimension() const noexcept { return generators.size(); }
    friend bool operator==(const SubbundleSpec&, const SubbundleSpec&) = default;
};

/// Annihilating 1-forms Theta^{r+1}..Theta^p with polynomial coefficients.
struct AnnihilatorBasis {
    std::vector<DifferentialForm> coforms;
};

/// Frame S_1..S_p extending the generators, with its dual coframe
/// Theta^1..Theta^p (Theta^u(S_v) = delta^u_v).
struct AdaptedCoframe {
    std::size_t dimension = 0;  ///< r
    std::vector<Section> frame;
    std::vector<DifferentialForm> coframe;
};

/// Coefficients of a 2-form in the adapted basis Theta^u ^ Theta^v (u < v),
/// stored as the antisymmetric matrix coefficient(u, v) = omega(S_u, S_v).
/// Blocks, with b, c < r <= beta, gamma (0-based):
///   A(b, c)      on Theta^b ^ Theta^c
///   B(b, gamma)  on Theta^b ^ Theta^gamma
///   C(beta, gamma) on Theta^beta ^ Theta^gamma
class TwoFormDecomposition {
public:
    TwoFormDecomposition(std::size_t dimension, ExprMatrix coefficients)
        : r_(dimension), coefficients_(std::move(coefficients)) {}

    std::size_t dimension() const noexcept { return r_; }
    std::size_t rank() const noexcept { return coefficients_.size(); }
    const ScalarExpr& coefficient(std::size_t u, std::size_t v) const { return coefficients_[u][v]; }
    const ScalarExpr& A(std::size_t b, std::size_t c) const { return coefficients_[b][c]; }
    const ScalarExpr& B(std::size_t b, std::size_t gamma) const { return coefficients_[b][gamma]; }
    const ScalarExpr& C(std::size_t beta, std::size_t gamma) const { return coefficients_[beta][gamma]; }

private:
    std::size_t r_;
    ExprMatrix coefficients_;
};

/// Cartan data for one annihilator element Theta^alpha.
struct CartanDecomposition {
    std::size_t alpha = 0;  ///< 0-based, alpha >= r
    TwoFormDecomposition d_theta;
    /// Omega^alpha_gamma = B_{b gamma} Theta^b + 1/2 C_{beta gamma} Theta^beta for
    /// gamma = r..p-1 (index gamma - r). Populated only when the A block vanishes.
    std::vector<DifferentialForm> omegas;
};

struct CartanResult {
    CheckReport report;
    AdaptedCoframe coframe;
    std::vector<CartanDecomposition> decompositions;
};

/// Generator component matrix (rows = generators). Throws DimensionError on rank mismatch.
ExprMatrix generator_matrix(const LieAlgebroid& A, const SubbundleSpec& E);

/// Throws RankDeficiency if the generators are dependent over the function field.
void require_full_rank(const LieAlgebroid& A, const SubbundleSpec& E);

/// Nullspace of the generator matrix, denominator-cleared.
AnnihilatorBasis annihilator(const LieAlgebroid& A, const SubbundleSpec& E);

/// Completes the generators with the frame sections t_a whose columns are not
/// pivots in the reduced row echelon form of the generator matrix (pivots are
/// the first nonzero column of each row), in increasing a, then inverts the
/// resulting frame.
AdaptedCoframe extend_frame(const LieAlgebroid& A, const SubbundleSpec& E);

/// Membership of `s` in the span of the generators via the rank of the stacked matrix.
bool span_contains(const LieAlgebroid& A, const SubbundleSpec& E, const Section& s);

/// Bracket test: every [S_a, S_b] pairs to zero with every annihilator element.
/// Witnesses are (a, b, alpha) with residual Theta^alpha([S_a, S_b]).
CheckReport involutive_bracket_test(const LieAlgebroid& A, const SubbundleSpec& E);

/// Coefficients of a 2-form in the adapted basis of `cf`.
TwoFormDecomposition decompose_two_form(const AdaptedCoframe& cf, const DifferentialForm& omega);

/// Re-expands a decomposition as a form in the fixed coframe.
DifferentialForm reconstruct(const AdaptedCoframe& cf, const TwoFormDecomposition& dec);

/// Cartan test: decompose d Theta^alpha for every alpha >= r; pass iff the A
/// block vanishes. On pass the Omega^alpha_gamma are produced and the
/// reconstruction d Theta^alpha = sum_gamma Omega^alpha_gamma ^ Theta^gamma is
/// asserted. Witnesses are (alpha, b, c) with residual A^alpha_{bc}.
CartanResult cartan_test(const LieAlgebroid& A, const SubbundleSpec& E);

} // namespace algcalc
