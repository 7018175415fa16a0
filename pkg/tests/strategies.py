"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from spiralknots.braidcore import SpiralParams
from spiralknots.polynomial import LaurentPoly

small_ints = st.integers(-6, 6)


@st.composite
def laurent(draw, max_len=6, allow_zero=True):
    coeffs = draw(st.lists(small_ints, min_size=0 if allow_zero else 1, max_size=max_len))
    minexp = draw(st.integers(-4, 4))
    f = LaurentPoly(coeffs, minexp)
    if not allow_zero and f.is_zero():
        f = LaurentPoly([1], minexp)
    return f


def signs(length):
    return st.lists(st.sampled_from((1, -1)), min_size=length, max_size=length).map(tuple)


@st.composite
def spiral_params(draw, max_span=12, min_q=2):
    p = draw(st.integers(2, max_span + 1))
    q = draw(st.integers(min_q, max(min_q, max_span // (p - 1) + 1)))
    eps = draw(signs(p - 1))
    return SpiralParams(p, q, eps)
