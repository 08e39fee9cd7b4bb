import pytest

import monadforge as mf

ANTICHAIN = {"elements": ["a", "b"], "leq": []}
CHAIN = {"elements": ["a", "b"], "leq": [[0, 1]]}
VAL = {"val": {"flavor": "one", "of": {"base": ANTICHAIN}}}
CHAIN_VAL = {"val": {"flavor": "one", "of": {"base": CHAIN}}}


def dirac(p):
    return {"val": [["1", {"pt": p}]]}


HALF = {"val": [["1/2", {"pt": "a"}], ["1/2", {"pt": "b"}]]}


def test_suite_names():
    names = mf.suite_names()
    assert "retraction" in names and "weaklaw" in names
    assert mf.default_instances("strassen") == 500


def test_retraction_suite_clean():
    report = mf.check("retraction", case="DN", seed=42, instances=5)
    assert report["suite"] == "retraction"
    assert report["failures"] == 0
    assert all(eq["witness"] is None for eq in report["equations"])


def test_reports_are_deterministic():
    a = mf.check("idempotent", case="AN", seed=3, instances=4)
    b = mf.check("idempotent", case="AN", seed=3, instances=4)
    assert a == b


def test_lambda_of_dirac_upset():
    xi = {"val": [["1", {"up": {"convex": False, "gens": [{"pt": "a"}, {"pt": "b"}]}}]]}
    out = mf.lambda_("DN", "one", ANTICHAIN, xi)
    assert out["text"] == "↑conv{δa, δb}"


def test_witness():
    w = mf.witness("DN")
    assert w["q"] == "↑{a, b}"
    assert w["separating"] == "1/2δa+1/2δb"
    assert w["in_lambda_by_formula"] and w["in_lambda_by_enumeration"]
    assert not w["in_unit_by_coupling"] and not w["in_unit_by_enumeration"]


def test_stochastic_order_routes_agree():
    for method in ("coupling", "enumerate"):
        assert mf.stochastic_leq(CHAIN_VAL, HALF, dirac("b"), method)
        assert not mf.stochastic_leq(CHAIN_VAL, dirac("b"), HALF, method)
        assert not mf.stochastic_leq(VAL, HALF, dirac("b"), method)


def test_retraction_roundtrip():
    q = {"up": {"convex": True, "gens": [dirac("a"), dirac("b")]}}
    f = mf.retraction_r("DN", "one", ANTICHAIN, q)
    assert mf.retraction_s("DN", "one", ANTICHAIN, f) == q


def test_mutation_detected():
    d = mf.detect_mutation("drop-convex")
    assert d["detected"]
    assert d["failing"]["witness"] is not None


def test_bad_input_raises():
    with pytest.raises(ValueError):
        mf.check("retraction", flavor="heavy")
    with pytest.raises(ValueError):
        mf.show(VAL, {"val": [["2", {"pt": "a"}]]})
