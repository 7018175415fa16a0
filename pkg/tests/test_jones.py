import dataclasses
import random
from fractions import Fraction

import pytest
from hypothesis import given

from spiralknots.braidcore import SpiralParams, build_diagram, diagram_from_word, make_params
from spiralknots.jones import CrossingCapExceeded, JonesPolynomial, jones_polynomial, kauffman_bracket
from spiralknots.polynomial import LaurentPoly

from strategies import spiral_params


def A(terms):
    return LaurentPoly.from_dict(terms)


def test_bracket_examples():
    assert kauffman_bracket(diagram_from_word(1, [])) == LaurentPoly.one()
    assert kauffman_bracket(build_diagram(make_params(2, 2, "+"))) == A({4: -1, -4: -1})
    assert kauffman_bracket(build_diagram(make_params(2, 3, "+"))) == A({-7: 1, -3: -1, 5: -1})


def test_trefoil_jones():
    # positive trefoil under the stated conventions
    v = jones_polynomial(make_params(2, 3, "+"))
    assert v.as_t() == A({1: 1, 3: 1, 4: -1})
    assert jones_polynomial(make_params(2, 3, "-")).as_t() == A({-1: 1, -3: 1, -4: -1})


def test_unknot_closures():
    for p, eps in [(2, "+"), (3, "+-"), (5, "+--+")]:
        assert jones_polynomial(make_params(p, 1, eps)).as_t() == LaurentPoly.one()


def test_hopf_link_half_integer():
    v = jones_polynomial(make_params(2, 2, "+"))
    assert v.half_integer
    assert v.doubled == A({5: -1, 1: -1})
    assert str(v) == "-t^(5/2) - t^(1/2)"
    assert v.to_json()["encoding"] == "doubled-exponent"
    with pytest.raises(ValueError):
        v.as_t()


def test_cap():
    with pytest.raises(CrossingCapExceeded):
        jones_polynomial(make_params(5, 4, "++++"), cap=10)


def test_unknown_engine():
    with pytest.raises(ValueError):
        kauffman_bracket(build_diagram(make_params(2, 3, "+")), engine="magic")


@given(spiral_params(max_span=10, min_q=1))
def test_engines_bit_match(params):
    d = build_diagram(params)
    if d.crossing_count > 14:
        return
    assert kauffman_bracket(d, engine="naive") == kauffman_bracket(d, engine="vectorized")


@given(spiral_params(max_span=8, min_q=1))
def test_crossing_order_independence(params):
    d = build_diagram(params)
    if d.crossing_count > 12:
        return
    shuffled = list(d.crossings)
    random.Random(d.crossing_count).shuffle(shuffled)
    d2 = dataclasses.replace(d, crossings=tuple(shuffled))
    assert kauffman_bracket(d2, engine="naive") == kauffman_bracket(d, engine="naive")


@given(spiral_params(max_span=8, min_q=1))
def test_jones_symmetries(params):
    if (params.p - 1) * params.q > 14:
        return
    v = jones_polynomial(params)
    assert v.value_at_one() == (-2) ** (params.components - 1)
    mirror = SpiralParams(params.p, params.q, tuple(-e for e in params.epsilon))
    assert jones_polynomial(mirror) == v.mirror()
    rev = SpiralParams(params.p, params.q, params.epsilon[::-1])
    assert jones_polynomial(rev) == v
    if params.is_knot():
        assert not v.half_integer


def test_terms_and_mirror():
    v = JonesPolynomial(A({5: -1, 1: -1}))
    assert v.mirror().doubled == A({-5: -1, -1: -1})
    assert v.terms() == {Fraction(5, 2): -1, Fraction(1, 2): -1}
