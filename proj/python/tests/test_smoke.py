import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import algcalc

FIXTURES = Path(os.environ.get("ALGCALC_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "data" / "fixtures"))


def so3():
    return algcalc.LieAlgebroid(
        ["x1"], 3, [["0", "0", "0"]], [(1, 2, 3, "1"), (2, 3, 1, "1"), (3, 1, 2, "1")]
    )


def test_expressions_are_exact():
    a = algcalc.parse_expr("(x1^2 - x2^2)/(x1 - x2)", ["x1", "x2"])
    assert str(a) == "x1 + x2"
    b = algcalc.parse_expr("1/(3*x1)", ["x1", "x2"])
    assert (b * algcalc.parse_expr("3*x1", ["x1", "x2"])) == algcalc.ScalarExpr(1)
    assert b.evaluate([Fraction(1, 2), 0]) == Fraction(2, 3)
    assert str(algcalc.partial(a, 1, 2)) == "1"


def test_parse_errors_are_python_exceptions():
    with pytest.raises(algcalc.ParseError):
        algcalc.parse_expr("x1 + y", ["x1"])
    with pytest.raises(algcalc.AlgcalcError):
        algcalc.parse_expr("1/(x1 - x1)", ["x1"])


def test_so3_structure_equations():
    A = so3()
    assert algcalc.validate(A).passed
    t = [algcalc.DifferentialForm.coframe(3, a) for a in (1, 2, 3)]
    assert algcalc.ext_deriv(A, t[0]) == -(t[1] ^ t[2])
    assert algcalc.lie_derivative(A, algcalc.Section.frame(3, 1), t[1]) == t[2]
    assert algcalc.maurer_cartan_check(A)


def test_bracket_and_forms_on_tangent_bundle():
    T = algcalc.LieAlgebroid.tangent(2)
    u = T.section(["x2", 0])
    v = T.section([0, "x1"])
    assert algcalc.bracket(T, u, v) == T.section(["-x1", "x2"])
    w = T.form(2, {(1, 2): "x1"})
    assert w.coefficient([1, 2]) == T.expr("x1")
    assert algcalc.apply_form(w, [T.section([1, 0]), T.section([0, 1])]) == T.expr("x1")
    assert algcalc.interior(T.section([1, 0]), w) == T.form(1, {(2,): "x1"})
    assert algcalc.verify_calculus_identities(T, samples=5, seed=3).passed


def test_contact_distribution_is_not_involutive():
    T = algcalc.LieAlgebroid.tangent(3)
    E = [T.section([0, 1, 0]), T.section([1, 0, "x2"])]
    (theta,) = algcalc.annihilator(T, E)
    assert theta == T.form(1, {(1,): "-x2", (3,): 1})
    verdicts = algcalc.involutivity_verdicts(T, E)
    assert verdicts == {"agree": True, "bracket": False, "cartan": False, "closure": False}
    cartan = algcalc.cartan_test(T, E)
    assert cartan.witnesses(T.coordinate_names) == [{"label": "A-block", "indices": [3, 1, 2], "residual": "-1"}]
    assert not algcalc.ideal_membership(T, E, algcalc.ext_deriv(T, theta))
    member = T.form(1, {(1,): "x3"}) ^ theta
    omegas = algcalc.ideal_certificate(T, E, member)
    assert omegas is not None and len(omegas) == 1
    assert algcalc.vanishes_on_ids(member, E)


def test_rank_deficiency():
    T = algcalc.LieAlgebroid.tangent(2)
    with pytest.raises(algcalc.RankDeficiency):
        algcalc.annihilator(T, [T.section([1, "x1"]), T.section(["x2", "x1*x2"])])


def test_definition_files_and_runs():
    d = algcalc.load_definition(str(FIXTURES / "heisenberg.json"))
    assert set(d.subbundles) == {"contact", "plane"}
    assert algcalc.parse_definition(d.to_json()) == d
    report = algcalc.run_checks(d, ["equivalence:contact"], seed=1)
    assert report.passed
    doc = json.loads(report.to_json())
    assert [c["verdict"] for c in doc["checks"][0]["children"]] == ["fail", "fail", "fail"]
    assert report.to_json() == algcalc.run_checks(d, ["equivalence:contact"], seed=1).to_json()
    with pytest.raises(algcalc.UsageError):
        algcalc.run_checks(d, ["cartan:nope"])
    with pytest.raises(algcalc.DefinitionError):
        algcalc.parse_definition('{"coords": ["x1"], "rank": 1')
