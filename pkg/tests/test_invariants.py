from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from spiralknots.alexander import alexander
from spiralknots.braidcore import SpiralParams, make_params
from spiralknots.invariants import (
    NOT_SPIRAL,
    SPIRAL_POSSIBLE,
    genus,
    knot_determinant,
    obstruct_spiral,
    torus_alexander,
    torus_determinant,
)
from spiralknots.polynomial import LaurentPoly

from strategies import spiral_params

FIVE_TWO = LaurentPoly([2, -3, 2])


def test_genus_examples():
    assert genus(make_params(3, 5, "+-")) == 4
    assert genus(make_params(3, 5, "++")) == 4
    assert genus(make_params(2, 2, "+")) == 0
    assert genus(make_params(5, 1, "+-+-")) == 0
    assert genus(make_params(3, 3, "+-")) == Fraction(2, 2)


def test_determinant_examples():
    assert knot_determinant(make_params(3, 2, "+-")) == 5
    assert knot_determinant(make_params(2, 3, "+")) == 3
    assert knot_determinant(make_params(4, 3, "+-+")) % 3 == 0


@pytest.mark.parametrize(
    "p, q, coeffs",
    [(2, 3, [1, -1, 1]), (3, 4, [1, -1, 0, 1, 0, -1, 1]), (2, 5, [1, -1, 1, -1, 1])],
)
def test_torus_alexander(p, q, coeffs):
    assert torus_alexander(p, q).canonical == LaurentPoly(coeffs)


def test_torus_alexander_rejects_links():
    with pytest.raises(ValueError):
        torus_alexander(4, 6)


@given(st.integers(2, 9), st.integers(2, 9))
def test_torus_diagonal(p, q):
    if gcd(p, q) != 1:
        return
    d = alexander(SpiralParams(p, q, (1,) * (p - 1)))
    assert d == torus_alexander(p, q) == torus_alexander(q, p)
    assert knot_determinant(SpiralParams(p, q, (-1,) * (p - 1))) == torus_determinant(p, q)


def test_five_two_is_not_spiral():
    r = obstruct_spiral(FIVE_TWO, q_hint=2)
    assert r.verdict == NOT_SPIRAL and "monic" in r.violated


def test_five_two_without_monic_rule():
    r = obstruct_spiral(FIVE_TWO, q_hint=2, rules=("second_coefficient", "determinant"))
    assert r.verdict == NOT_SPIRAL
    assert r.violated == ["second_coefficient"]
    (cand,) = r.candidates
    assert (cand.p, cand.q) == (3, 2) and cand.gamma == Fraction(1, 4)


def test_five_two_without_any_rule_survives():
    r = obstruct_spiral(FIVE_TWO, q_hint=2, rules=())
    assert r.verdict == SPIRAL_POSSIBLE


def test_figure_eight_possible():
    r = obstruct_spiral(LaurentPoly([1, -3, 1]), q_hint=2)
    assert r.verdict == SPIRAL_POSSIBLE
    (c,) = r.surviving
    assert (c.p, c.q, c.gamma) == (3, 2, 1)


def test_trefoil_torus_compatible():
    r = obstruct_spiral(LaurentPoly([1, -1, 1]))
    assert r.verdict == SPIRAL_POSSIBLE and r.torus_compatible
    assert {(c.p, c.q) for c in r.surviving} == {(2, 3), (3, 2)}


def test_degree_rule():
    # span 0 has no (p, q) with (p-1)(q-1) = 0 and q >= 2
    r = obstruct_spiral(LaurentPoly([1]))
    assert r.verdict == NOT_SPIRAL and r.violated == ["degree"]


def test_determinant_rule():
    # span 3 factors only as (2, 4) and (4, 2), neither coprime
    assert obstruct_spiral(LaurentPoly([1, -1, -1, 1])).violated == ["degree"]
    # (p, q) = (4, 3) with gamma = 1 but determinant 5
    r = obstruct_spiral(LaurentPoly([1, -4, 0, 5, 0, -4, 1]), q_hint=3)
    (c,) = r.candidates
    assert (c.p, c.q) == (4, 3) and c.gamma == 1
    assert c.det_divisibility_ok is False and r.verdict == NOT_SPIRAL


def test_bad_q_hint():
    with pytest.raises(ValueError):
        obstruct_spiral(LaurentPoly([1, -1, 1]), q_hint=1)


@given(spiral_params(max_span=12))
def test_obstruction_sound_on_spiral_knots(params):
    if not params.is_knot():
        return
    r = obstruct_spiral(alexander(params).canonical, q_hint=params.q)
    assert r.verdict == SPIRAL_POSSIBLE
    assert any(c.p == params.p for c in r.surviving)


@given(spiral_params(max_span=14))
def test_genus_and_determinant_properties(params):
    d = alexander(params)
    if params.is_knot():
        assert genus(params) == Fraction(d.span, 2)
        assert knot_determinant(params) % 2 == 1
    if params.p % 2 == 0:
        assert knot_determinant(params) % params.q == 0


def test_report_json():
    j = obstruct_spiral(FIVE_TWO, q_hint=2).to_json()
    assert j["verdict"] == NOT_SPIRAL and j["candidates"][0]["gamma"] == "1/4"
