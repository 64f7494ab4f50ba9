import pytest

from gbell import suites


def test_suite_result_bookkeeping():
    r = suites.SuiteResult("x")
    assert not r.ok
    r.expect(True, "a")
    assert r.ok and r.summary() == "PASS x: 1 checked, 0 failed"
    r.expect(False, "b")
    assert not r.ok and r.failures == ["b"]


@pytest.mark.parametrize("name,kw", [
    ("recurrences", {"max_n": 5}),
    ("join", {"max_total": 6, "dominant_max_n": 6}),
    ("union", {"max_total": 6, "pairs": 40, "max_order": 8}),
    ("closed-forms", {"empty_max": 8, "clique_total": 8, "complement_max": 10}),
    ("q-lemmas", {"max_order": 8}),
    ("removal-theorems", {"max_n": 6}),
    ("counterexamples", {}),
])
def test_suites_pass_on_small_ranges(name, kw):
    res = suites.SUITES[name](**kw)
    assert res.ok, res.failures[:5]
