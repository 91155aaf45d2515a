import json
import os

import pytest

import cyclic_shape as cs

REF = [(7, 6), (13, 6), (19, 8)]
FIXTURES = os.environ.get("CYCLIC_SHAPE_FIXTURE_DIR", "")


def test_cubic():
    assert cs.trace_zero_gram(3, 1, [(7, 2)]) == [[14, -7], [-7, 14]]


def test_reference_matrix():
    g = cs.trace_zero_gram(9, 1, REF)
    assert len(g) == 8
    assert g[0] == [2318, -1159, 570, -1140, 570, 570, -1140, 570]
    assert cs.determinant(g) == 9 * 7**6 * 13**6 * 19**8


def test_full_and_coefficients():
    full = cs.full_trace_gram(5, 1, [(11, 4)])
    assert full[0][0] == 9 and full[0][1] == -2
    assert cs.determinant(full) == 11**4
    assert cs.coefficients(9, 1, REF) == {1: 1729, 3: -570, 9: -2}


def test_errors():
    with pytest.raises(cs.ValidationError, match="wild ramification at p=3"):
        cs.trace_zero_gram(9, 1, [(3, 6), (7, 6)])
    with pytest.raises(cs.ParseError):
        cs.trace_zero_gram(3, 1, [(7, 2)], mode="lenient")
    assert issubclass(cs.ValidationError, ValueError)


def test_isometric():
    a = cs.trace_zero_gram(3, 1, [(7, 2)])
    r = cs.isometric(a, [[14, 7], [7, 14]])
    assert r["verdict"] == "isometric"
    r = cs.isometric(a, cs.trace_zero_gram(3, 1, [(13, 2)]))
    assert r["verdict"] == "not_isometric"
    assert r["invariant"] == "determinant"


@pytest.mark.skipif(not FIXTURES, reason="fixture dir not set")
def test_cli_fixture():
    disc = json.dumps({"sign": 1, "factors": REF})
    code, out, _ = cs.run_cli(
        ["isometry", "--m", "9", "--disc", disc, "--compare", os.path.join(FIXTURES, "field9_2.json")]
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "isometric"
