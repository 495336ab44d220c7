#include "algcalc/calculus.hpp"
#include "algcalc/eds.hpp"
#include "algcalc/error.hpp"

#include "../support/fixtures.hpp"

#include <doctest.h>

using namespace algcalc;
using fixtures::section;

namespace {
DifferentialForm t(std::size_t p, std::size_t a) { return DifferentialForm::coframe(p, a); }
} // namespace

TEST_CASE("membership in the contact ideal") {
    const LieAlgebroid A = fixtures::tangent(3);
    const GeneratedIdeal I = GeneratedIdeal::of(A, fixtures::contact());
    const DifferentialForm theta = I.generators()[0];
    CHECK(I.top_wedge() == theta);
    CHECK(ideal_membership(I, fixtures::x(1) * theta));
    CHECK_FALSE(ideal_membership(I, t(3, 1)));
    const DifferentialForm d_theta = ext_deriv(A, theta);
    CHECK(d_theta == wedge(t(3, 0), t(3, 1)));
    CHECK_FALSE(ideal_membership(I, d_theta));
    CHECK(membership_residual(I, d_theta) == wedge(d_theta, theta));
    CHECK_FALSE(ideal_certificate(I, d_theta).has_value());
    CHECK_THROWS_AS(ideal_membership(I, DifferentialForm::scalar(3, ScalarExpr(1))), DimensionError);
}

TEST_CASE("certificates re-expand to the member") {
    const LieAlgebroid A = fixtures::tangent(3);
    const GeneratedIdeal I = GeneratedIdeal::of(A, fixtures::contact());
    const DifferentialForm theta = I.generators()[0];
    const DifferentialForm w = wedge(fixtures::x(3) * t(3, 0) + t(3, 1), theta);
    REQUIRE(ideal_membership(I, w));
    const auto cert = ideal_certificate(I, w);
    REQUIRE(cert.has_value());
    REQUIRE(cert->size() == 1);
    CHECK((*cert)[0].degree() == 1);
    CHECK(expand_certificate(I, *cert) == w);
}

TEST_CASE("generators must be independent 1-forms") {
    AnnihilatorBasis dependent{{t(3, 0), fixtures::x(1) * t(3, 0)}};
    CHECK_THROWS_AS(GeneratedIdeal(3, dependent), RankDeficiency);
    AnnihilatorBasis two_form{{wedge(t(3, 0), t(3, 1))}};
    CHECK_THROWS_AS(GeneratedIdeal(3, two_form), DimensionError);
}

TEST_CASE("vanishing on the subbundle") {
    const LieAlgebroid A = fixtures::tangent(4);
    const SubbundleSpec E{{Section::frame(4, 0), Section::frame(4, 1)}};
    const GeneratedIdeal I = GeneratedIdeal::of(A, E);
    REQUIRE(I.generators().size() == 2);
    CHECK(vanishes_on_ids(I.generators()[0], E));
    CHECK(vanishes_on_ids(wedge(I.generators()[0], I.generators()[1]), E));
    CHECK_FALSE(vanishes_on_ids(t(4, 0), E));
    CHECK(nonvanishing_tuple(t(4, 0), E) == std::vector<std::size_t>{1});
    CHECK(nonvanishing_tuple(wedge(t(4, 0), t(4, 1)), E) == std::vector<std::size_t>{1, 2});
    // Degree above r vanishes by alternation.
    const DifferentialForm forms[] = {t(4, 0), t(4, 1), t(4, 2)};
    CHECK(vanishes_on_ids(wedge_all(4, forms), E));
    CHECK_THROWS_AS(vanishes_on_ids(DifferentialForm::scalar(4, ScalarExpr(1)), E), DimensionError);
}

TEST_CASE("closure check and three-way equivalence") {
    const LieAlgebroid T = fixtures::tangent(3);
    CHECK(eds_closure_check(T, fixtures::coordinate_plane()).passed());
    const CheckReport closure = eds_closure_check(T, fixtures::contact());
    REQUIRE(closure.witnesses.size() == 1);
    CHECK(closure.witnesses[0].indices == std::vector<std::size_t>{3, 1, 2, 3});

    const EquivalenceReport contact = eds_involutivity_equivalence(T, fixtures::contact());
    CHECK(contact.report.passed());
    CHECK_FALSE(contact.bracket_verdict);
    CHECK_FALSE(contact.cartan_verdict);
    CHECK_FALSE(contact.closure_verdict);
    CHECK(contact.report.children.size() == 3);

    const EquivalenceReport plane = eds_involutivity_equivalence(T, fixtures::coordinate_plane());
    CHECK(plane.report.passed());
    CHECK(plane.bracket_verdict);
    CHECK(plane.cartan_verdict);
    CHECK(plane.closure_verdict);

    const SubbundleSpec so3_plane{{Section::frame(3, 0), Section::frame(3, 1)}};
    CHECK_FALSE(eds_closure_check(fixtures::so3(), so3_plane).passed());
}

TEST_CASE("property: ideal laws on random members") {
    const LieAlgebroid A = fixtures::tangent(4);
    const SubbundleSpec E{{section(4, {"1", "0", "x2", "0"}), section(4, {"0", "1", "0", "x1"})}};
    const GeneratedIdeal I = GeneratedIdeal::of(A, E);
    Sampler s(41, 4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t q = s.uniform(0, 2);
        DifferentialForm w(4, q + 1);
        for (const auto& th : I.generators()) w += wedge(s.form(q), th);
        CHECK(ideal_membership(I, w));
        const auto cert = ideal_certificate(I, w);
        REQUIRE(cert.has_value());
        CHECK(expand_certificate(I, *cert) == w);
        CHECK(ideal_membership(I, wedge(s.form(1), w)));
        CHECK(vanishes_on_ids(w, E));
    }
}
