import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import respdeg

DATA = Path(os.environ.get("RESPDEG_TEST_DATA_DIR", Path(__file__).resolve().parents[1] / "data"))


@pytest.fixture(scope="module")
def e1():
    return respdeg.Model.load(DATA / "e1.json")


def test_model_shape(e1):
    assert e1.agents == ["a1", "a2"]
    assert e1.states == ["q0", "q1", "q2"]
    assert e1.affairs == {"bad": ["q2"]}
    assert e1.num_transitions == 12
    assert respdeg.Model(e1.serialize()).content_hash == e1.content_hash


def test_responsible(e1):
    assert e1.responsible("q0", "@bad") == [["a1", "a2"]]
    assert e1.responsible("q1", "@bad", minimal_only=True) == [["a1"], ["a2"]]
    assert e1.responsible("q2", ["q2"]) == []
    assert e1.can_preclude(["a1", "a2"], "q0", "@bad")
    assert not e1.can_preclude("a1", "q0", "@bad")


def test_degrees(e1):
    assert e1.sdr("a1", "q0", "@bad") == (Fraction(1, 2), ["a1", "a2"])
    assert e1.sdr("", "q0", "@bad")[0] == 0
    assert e1.sdr("a1", "q2", "@bad") == (None, None)
    assert e1.fdr("a1", "q0", "@bad") == (Fraction(1, 2), 1, "q0 -(a1=a,a2=b)-> q1")
    assert e1.fdr("a1", "q1", "@bad") == (Fraction(1), 0, None)
    assert e1.fdr(["a1", "a2"], "q2", "@bad") == (Fraction(0), None, None)


def test_semantics(e1):
    assert e1.responsible("q0", "q0") != []
    assert e1.responsible("q0", "q0", semantics="include-initial") == []
    with pytest.raises(ValueError):
        e1.responsible("q0", "q0", semantics="sometimes")


def test_report(e1):
    rows = json.loads(e1.report("q0", "@bad"))["rows"]
    assert [r["responsible"] for r in rows] == [False, False, True]
    assert e1.report("q0", "@bad", format="csv").splitlines()[0] == "coalition,responsible,sdr,fdr,distance"


def test_errors(e1):
    with pytest.raises(respdeg.ModelError, match="MissingTransition"):
        respdeg.Model.load(DATA / "broken.json")
    with pytest.raises(respdeg.ModelError):
        respdeg.Model("{not json")
    with pytest.raises(ValueError):
        e1.sdr("a9", "q0", "@bad")
    with pytest.raises(ValueError):
        e1.sdr("a1", "q9", "@bad")
