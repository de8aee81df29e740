import json
import pathlib

import pytest

import handlecalc as hc

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_words():
    assert hc.free_reduce("s1 s2 s2^-1 s3", 4) == "s1 s3"
    assert hc.invert("s1 s3", 4) == "s3^-1 s1^-1"
    assert hc.concat("s1", "s1^-1", 3) == "e"
    assert hc.is_trivial("s1 s2 s1 s2^-1 s1^-1 s2^-1", 3)
    assert not hc.is_trivial("s1 s2 s1^-1 s2^-1", 3)
    assert hc.braid_equal("s1 s3", "s3 s1", 4)
    assert hc.commutes("s1", "s3", 4)
    assert not hc.commutes("s1", "s2", 3)
    assert hc.underlying_permutation("s1 s2 s1", 3) == "(1 3)"
    with pytest.raises(hc.ParseError):
        hc.is_trivial("s5", 3)


def test_weak_bound():
    assert hc.weak_bound(3, 2, 0, 0) == 3
    assert hc.weak_bound(4, 0, 0, 5) == 8


def test_documents():
    assert hc.validate(load("example_n2.json"))["valid"]
    assert not hc.validate(load("chart_unbalanced.json"))["valid"]
    totals = hc.stats(load("mixed_n6.json"))["totals"]
    assert totals["s"] == -3 and totals["c"] == 7
    assert hc.plan(load("chart_n4.json"))["handles_added"] == 7
    assert hc.bound(load("example_n3.json"))["crossing_only_weak_upper"] == 7


def test_simplify_and_verify():
    report = hc.simplify(load("mixed_n6.json"), "strong")
    assert report["exponent"] == 3
    assert hc.verify(report)["accepted"]
    shifted = hc.simplify(load("mixed_n6.json"), "strong", shifted=True)
    assert shifted["exponent"] == 2
    bad = hc.verify(load("corrupt_trace.json"))
    assert not bad["accepted"] and bad["failed_step"] == 2


def test_errors():
    with pytest.raises(hc.ParseError, match="/handles/1"):
        hc.stats(load("noncommuting.json"))
    with pytest.raises(hc.PreconditionError):
        hc.simplify(load("not_crossing_only.json"), "weak")
    with pytest.raises(hc.BudgetExceeded):
        hc.simplify(load("mixed_n6.json"), "strong", max_steps=5)
    assert issubclass(hc.ParseError, hc.Error)
