#pragma once

#include "algcalc/algebroid.hpp"
#include "algcalc/check_report.hpp"
#include "algcalc/forms.hpp"
#include "algcalc/sampling.hpp"

#include <cstdint>

namespace algcalc {

/// Covariant Lie derivative L_z. On 0-forms it is the anchor action; on
/// q-forms the coefficient on t_I is
///   rho(z)(w_I) - sum_i w(t_{I1}, ..., [z, t_{Ii}], ..., t_{Iq}).
DifferentialForm lie_derivative(const LieAlgebroid& A, const Section& z, const DifferentialForm& omega);

/// Exterior derivative d^F: the alternating-sum formula evaluated on
/// increasing frame tuples. Frame sections have constant components, so the
/// first sum reduces to anchor derivatives of coefficients and the second to
/// contractions with the structure functions.
DifferentialForm ext_deriv(const LieAlgebroid& A, const DifferentialForm& omega);

/// d^F x^i, the 1-form rho^i_a t^a (0-based i).
DifferentialForm coordinate_differential(const LieAlgebroid& A, std::size_t i);

/// Checks, on seeded random sections and forms:
///   L_z(w^h) = L_z w ^ h + w ^ L_z h
///   i_z(w^h) = i_z w ^ h + (-1)^q w ^ i_z h
///   L_v i_z - i_z L_v = i_[v,z]
///   L_z = d i_z + i_z d
///   d(w^h) = dw ^ h + (-1)^q w ^ dh
///   L_z d = d L_z
///   d d = 0
/// Each identity is a child report; witnesses carry (sample, coefficient
/// multi-index) and the nonzero residual coefficient.
CheckReport verify_calculus_identities(const LieAlgebroid& A, const SamplingBudget& budget,
                                       std::uint64_t seed);

/// d^F t^a = -sum_{b<c} L^a_{bc} t^b ^ t^c and d^F x^i = rho^i_a t^a.
CheckReport maurer_cartan_check(const LieAlgebroid& A);

} // namespace algcalc
