#pragma once

#include "algcalc/algebroid.hpp"
#include "algcalc/ids.hpp"
#include "algcalc/parser.hpp"

#include <string>
#include <vector>

namespace fixtures {

using algcalc::LieAlgebroid;
using algcalc::ScalarExpr;
using algcalc::Section;
using algcalc::SubbundleSpec;

inline ScalarExpr x(std::size_t i) { return ScalarExpr::coordinate(i); }

/// Parses a section over default coordinates x1..xn.
inline Section section(std::size_t n, const std::vector<std::string>& comps) {
    const auto coords = algcalc::default_coordinates(n);
    std::vector<ScalarExpr> out;
    for (const auto& c : comps) out.push_back(algcalc::parse_expr(c, coords));
    return Section(std::move(out));
}

inline LieAlgebroid tangent(std::size_t n) { return LieAlgebroid::tangent(n); }

/// so(3) over a point-like one-dimensional base: [t_a, t_b] = eps_abc t_c.
inline LieAlgebroid so3() {
    LieAlgebroid A(algcalc::default_coordinates(1), 3);
    A.set_bracket(0, 1, 2, 1);
    A.set_bracket(1, 2, 0, 1);
    A.set_bracket(2, 0, 1, 1);
    return A;
}

/// Action algebroid of so(3) on R^3 by infinitesimal rotations
/// X_1 = x2 d3 - x3 d2 and cyclic. With these signs [X_a, X_b] = -eps_abc X_c.
inline LieAlgebroid so3_action() {
    LieAlgebroid A(algcalc::default_coordinates(3), 3);
    A.set_anchor(2, 0, x(2));
    A.set_anchor(1, 0, -x(3));
    A.set_anchor(0, 1, x(3));
    A.set_anchor(2, 1, -x(1));
    A.set_anchor(1, 2, x(1));
    A.set_anchor(0, 2, -x(2));
    A.set_bracket(0, 1, 2, -1);
    A.set_bracket(1, 2, 0, -1);
    A.set_bracket(2, 0, 1, -1);
    return A;
}

/// Rank one over R with anchor x1 d/dx1.
inline LieAlgebroid anchored() {
    LieAlgebroid A(algcalc::default_coordinates(1), 1);
    A.set_anchor(0, 0, x(1));
    return A;
}

/// Rank two over R with anchor (d/dx1, 0) and [t_1, t_2] = x1 t_2.
inline LieAlgebroid x_dependent() {
    LieAlgebroid A(algcalc::default_coordinates(1), 2);
    A.set_anchor(0, 0, 1);
    A.set_bracket(0, 1, 1, x(1));
    return A;
}

/// Zero anchor with [t1,t2] = t3, [t2,t3] = t1, [t3,t1] = t1; Jacobi fails.
inline LieAlgebroid jacobi_broken() {
    LieAlgebroid A(algcalc::default_coordinates(1), 3);
    A.set_bracket(0, 1, 2, 1);
    A.set_bracket(1, 2, 0, 1);
    A.set_bracket(2, 0, 0, 1);
    return A;
}

/// Anchor (1, x1) with zero brackets; the anchor is not a morphism.
inline LieAlgebroid anchor_broken() {
    LieAlgebroid A(algcalc::default_coordinates(1), 2);
    A.set_anchor(0, 0, 1);
    A.set_anchor(0, 1, x(1));
    return A;
}

/// Every algebroid above that satisfies the axioms.
inline std::vector<std::pair<std::string, LieAlgebroid>> valid_algebroids() {
    return {{"TR^1", tangent(1)},       {"TR^2", tangent(2)},     {"TR^3", tangent(3)},
            {"so3", so3()},             {"so3 action", so3_action()}, {"anchored", anchored()},
            {"x-dependent", x_dependent()}};
}

inline SubbundleSpec coordinate_plane() { return {{section(3, {"1", "0", "0"}), section(3, {"0", "1", "0"})}}; }

/// ker(dx3 - x2 dx1) in TR^3.
inline SubbundleSpec contact() { return {{section(3, {"0", "1", "0"}), section(3, {"1", "0", "x2"})}}; }

} // namespace fixtures
