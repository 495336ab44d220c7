#include "algcalc/algebroid.hpp"
#include "algcalc/error.hpp"
#include "algcalc/sampling.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

using namespace algcalc;
using fixtures::section;
using fixtures::x;

TEST_CASE("every fixture algebroid satisfies the axioms") {
    for (const auto& [name, A] : fixtures::valid_algebroids()) {
        CAPTURE(name);
        const CheckReport r = validate(A);
        CHECK(r.passed());
        REQUIRE(r.children.size() == 3);
        for (const auto& c : r.children) CHECK(c.passed());
    }
}

TEST_CASE("so3 action brackets match the rotation vector fields") {
    // The structure sign is fixed independently of the fixture: [X1, X2] = -X3.
    const LieAlgebroid A = fixtures::so3_action();
    const auto v1 = anchor_vector(A, Section::frame(3, 0));
    const auto v2 = anchor_vector(A, Section::frame(3, 1));
    const auto v3 = anchor_vector(A, Section::frame(3, 2));
    for (std::size_t i = 0; i < 3; ++i) {
        ScalarExpr lie;
        for (std::size_t j = 0; j < 3; ++j)
            lie += v1[j] * partial(v2[i], j + 1, 3) - v2[j] * partial(v1[i], j + 1, 3);
        CHECK(lie == -v3[i]);
    }
}

TEST_CASE("broken anchor fails compatibility with residual 1 at (1,2,1)") {
    const CheckReport r = check_anchor_compatibility(fixtures::anchor_broken());
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].indices == std::vector<std::size_t>{1, 2, 1});
    CHECK(r.witnesses[0].residual == ScalarExpr(1));
    CHECK(check_jacobi(fixtures::anchor_broken()).passed());
    CHECK_FALSE(validate(fixtures::anchor_broken()).passed());
}

TEST_CASE("broken structure fails Jacobi and agrees with the constant-coefficient oracle") {
    const LieAlgebroid A = fixtures::jacobi_broken();
    const CheckReport r = check_jacobi(A);
    REQUIRE_FALSE(r.passed());
    const auto expected = oracle::frame_jacobiator(A, 0, 1, 2);
    CHECK(expected[2] == ScalarExpr(-1));
    for (const auto& w : r.witnesses) {
        CHECK(w.indices.size() == 4);
        CHECK(w.residual == expected[w.indices[3] - 1]);
    }
    CHECK(check_anchor_compatibility(A).passed());
}

TEST_CASE("so3 Jacobi oracle vanishes for every frame triple") {
    const LieAlgebroid A = fixtures::so3();
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c)
                for (const auto& e : oracle::frame_jacobiator(A, a, b, c)) CHECK(e.is_zero());
}

TEST_CASE("set_bracket completes antisymmetry") {
    const LieAlgebroid A = fixtures::so3();
    CHECK(A.structure(0, 1, 2) == ScalarExpr(1));
    CHECK(A.structure(1, 0, 2) == ScalarExpr(-1));
    CHECK(A.structure(0, 0, 2).is_zero());
}

TEST_CASE("bracket of coordinate vector fields in the tangent algebroid") {
    const LieAlgebroid A = fixtures::tangent(2);
    const Section u = section(2, {"x2", "0"});
    const Section v = section(2, {"0", "x1"});
    // [x2 d1, x1 d2] = x2 d2 - x1 d1
    CHECK(bracket(A, u, v) == section(2, {"-x1", "x2"}));
}

TEST_CASE("property: bracket laws on random sections") {
    for (const auto& [name, A] : fixtures::valid_algebroids()) {
        CAPTURE(name);
        Sampler s(17, A.base_dim(), A.rank());
        for (int trial = 0; trial < 10; ++trial) {
            const Section u = s.section(), v = s.section(), w = s.section();
            const ScalarExpr f = s.polynomial();
            CHECK(bracket(A, u, v) == oracle::bracket(A, u, v));
            CHECK(bracket(A, u, v) == -bracket(A, v, u));
            // Leibniz: [u, f v] = f [u, v] + rho(u)(f) v
            CHECK(bracket(A, u, f * v) == f * bracket(A, u, v) + anchor_apply(A, u, f) * v);
            // Jacobi on arbitrary sections.
            const Section jac = bracket(A, u, bracket(A, v, w)) + bracket(A, v, bracket(A, w, u)) +
                                bracket(A, w, bracket(A, u, v));
            CHECK(jac.is_zero());
            // The anchor is a Lie algebra morphism.
            const ScalarExpr g = s.polynomial();
            CHECK(anchor_apply(A, bracket(A, u, v), g) ==
                  anchor_apply(A, u, anchor_apply(A, v, g)) - anchor_apply(A, v, anchor_apply(A, u, g)));
        }
    }
}

TEST_CASE("shape errors") {
    ExprMatrix bad(2, std::vector<ScalarExpr>(3));
    CHECK_THROWS_AS(LieAlgebroid(default_coordinates(1), 3, bad, {}), DimensionError);
    const LieAlgebroid A = fixtures::tangent(2);
    CHECK_THROWS_AS(bracket(A, Section(3), Section(2)), DimensionError);
}
