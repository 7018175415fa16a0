"""Kauffman bracket state sum on the closed-braid diagram and the Jones
polynomial.

Conventions: a positive braid crossing has the vertical (identity) smoothing
as its A-smoothing, ``<D> = sum A^(#A - #B) d^(loops - 1)`` with
``d = -A^2 - A^-2``, ``V = (-A)^(-3w) <D>`` and ``t = A^-4``.

Two engines evaluate the same state sum.  ``"naive"`` walks the states one
by one and counts loops with a union-find; ``"vectorized"`` handles blocks of
states at once with numpy, counting loops as cycles of a permutation on edge
ends.  Both return identical polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .braidcore import ClosureDiagram, SpiralParams, build_diagram
from .polynomial import LaurentPoly

__all__ = [
    "CrossingCapExceeded",
    "JonesPolynomial",
    "kauffman_bracket",
    "jones_polynomial",
    "DEFAULT_CROSSING_CAP",
]

DEFAULT_CROSSING_CAP = 24
_BLOCK_BITS = 15


class CrossingCapExceeded(ValueError):
    pass


def _loop_delta_powers(max_loops: int) -> list[LaurentPoly]:
    d = LaurentPoly([-1, 0, 0, 0, -1], -2)
    out = [LaurentPoly.one()]
    for _ in range(max_loops):
        out.append(out[-1] * d)
    return out


def _assemble(hist: dict[tuple[int, int], int], n_cross: int) -> LaurentPoly:
    """``hist[(n_b, loops)]`` counts states; turn it into the bracket."""
    if not hist:
        return LaurentPoly.one()
    powers = _loop_delta_powers(max(l for _, l in hist))
    total = LaurentPoly.zero()
    for (n_b, loops), count in sorted(hist.items()):
        total = total + (powers[loops - 1] * count).shift(n_cross - 2 * n_b)
    return total


def _smoothing_pairs(diagram: ClosureDiagram):
    """Per crossing, the edge pairs joined by its A- and B-smoothing."""
    out = []
    for c in diagram.crossings:
        vertical = ((c.top_left, c.bottom_left), (c.top_right, c.bottom_right))
        horizontal = ((c.top_left, c.top_right), (c.bottom_left, c.bottom_right))
        out.append((vertical, horizontal) if c.sign > 0 else (horizontal, vertical))
    return out


def _bracket_naive(diagram: ClosureDiagram) -> dict[tuple[int, int], int]:
    pairs = _smoothing_pairs(diagram)
    n = len(pairs)
    n_edges = diagram.n_edges
    hist: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        parent = list(range(n_edges))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        loops = n_edges
        n_b = 0
        for k in range(n):
            bit = (state >> k) & 1
            n_b += bit
            for u, v in pairs[k][bit]:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    loops -= 1
        key = (n_b, loops)
        hist[key] = hist.get(key, 0) + 1
    return hist


def _end_arrays(diagram: ClosureDiagram):
    # edge e has an outgoing end 2e (where it leaves a crossing) and an
    # incoming end 2e+1 (where it enters the next crossing)
    n = len(diagram.crossings)
    ends_a = np.empty((n, 4), dtype=np.int64)
    ends_b = np.empty((n, 4), dtype=np.int64)
    for k, c in enumerate(diagram.crossings):
        tl, tr = 2 * c.top_left + 1, 2 * c.top_right + 1
        bl, br = 2 * c.bottom_left, 2 * c.bottom_right
        vertical = (tl, bl, tr, br)
        horizontal = (tl, tr, bl, br)
        a, b = (vertical, horizontal) if c.sign > 0 else (horizontal, vertical)
        ends_a[k] = a
        ends_b[k] = b
    return ends_a, ends_b


def _bracket_vectorized(diagram: ClosureDiagram) -> dict[tuple[int, int], int]:
    n = len(diagram.crossings)
    n_half = 2 * diagram.n_edges
    ends_a, ends_b = _end_arrays(diagram)
    other_end = np.arange(n_half) ^ 1
    rounds = max(1, int(np.ceil(np.log2(n_half))))
    block = 1 << min(n, _BLOCK_BITS)
    counts = np.zeros((n + 1) * (n_half + 1), dtype=np.int64)
    weights = 1 << np.arange(n, dtype=np.int64)
    ident = np.arange(n_half, dtype=np.int32)
    offsets = (np.arange(block, dtype=np.int32) * n_half)[:, None]
    for start in range(0, 1 << n, block):
        states = np.arange(start, start + block, dtype=np.int64)
        bits = (states[:, None] & weights[None, :]) != 0
        ends = np.where(bits[:, :, None], ends_b[None], ends_a[None])
        u = ends[:, :, 0::2].reshape(block, -1) + offsets
        v = ends[:, :, 1::2].reshape(block, -1) + offsets
        match = np.empty(block * n_half, dtype=np.int32)
        match[u] = v
        match[v] = u
        # flat permutation: follow the edge to its other end, then the smoothing
        perm = match.reshape(block, n_half)[:, other_end].ravel()
        label = np.tile(ident, block)
        for _ in range(rounds):
            np.minimum(label, label[perm], out=label)
            perm = perm[perm]
        cycles = (label.reshape(block, n_half) == ident).sum(axis=1)
        n_b = bits.sum(axis=1)
        counts += np.bincount(n_b * (n_half + 1) + cycles // 2, minlength=counts.size)
    counts = counts.reshape(n + 1, n_half + 1)
    nz = np.nonzero(counts)
    return {(int(b), int(l)): int(counts[b, l]) for b, l in zip(*nz)}


def kauffman_bracket(
    diagram: ClosureDiagram,
    cap: int = DEFAULT_CROSSING_CAP,
    engine: str = "vectorized",
) -> LaurentPoly:
    """Kauffman bracket in the variable ``A`` of a closed-braid diagram."""
    n = len(diagram.crossings)
    if n > cap:
        raise CrossingCapExceeded(f"{n} crossings exceeds the state-sum cap {cap}")
    if n == 0:
        return _assemble({(0, diagram.components): 1}, 0)
    if engine == "naive":
        hist = _bracket_naive(diagram)
    elif engine == "vectorized":
        hist = _bracket_vectorized(diagram)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return _assemble(hist, n)


@dataclass(frozen=True)
class JonesPolynomial:
    """Jones polynomial stored in ``s = t^(1/2)``: ``doubled`` has the exponents
    of ``t`` multiplied by two.  ``half_integer`` flags odd doubled exponents,
    which occur only for links with an even number of components."""

    doubled: LaurentPoly

    @property
    def half_integer(self) -> bool:
        return any(e % 2 for e in self.doubled.terms())

    def as_t(self) -> LaurentPoly:
        if self.half_integer:
            raise ValueError("half-integer exponents; use .doubled")
        return LaurentPoly.from_dict({e // 2: c for e, c in self.doubled.terms().items()})

    def terms(self) -> dict[Fraction, int]:
        return {Fraction(e, 2): c for e, c in self.doubled.terms().items()}

    def value_at_one(self) -> int:
        return self.doubled.evaluate(1)

    def mirror(self) -> "JonesPolynomial":
        return JonesPolynomial(self.doubled.substitute_power(-1))

    def to_json(self) -> dict:
        return {"encoding": "doubled-exponent", "half_integer": self.half_integer, **self.doubled.to_json()}

    def __str__(self) -> str:
        if not self.half_integer:
            return str(self.as_t())
        parts = []
        for e, c in sorted(self.doubled.terms().items(), reverse=True):
            exp = Fraction(e, 2)
            mono = "t" if exp == 1 else f"t^({exp})"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def jones_polynomial(
    params: SpiralParams,
    cap: int = DEFAULT_CROSSING_CAP,
    engine: str = "vectorized",
) -> JonesPolynomial:
    diagram = build_diagram(params)
    bracket = kauffman_bracket(diagram, cap=cap, engine=engine)
    w = params.writhe
    # (-A)^(-3w)
    norm = LaurentPoly.monomial(-1 if (3 * w) % 2 else 1, -3 * w)
    v_a = norm * bracket
    doubled = {}
    for e, c in v_a.terms().items():
        if e % 2:
            raise AssertionError(f"odd A-exponent {e} in normalized bracket")
        # t = A^-4, so A^e = t^(-e/4) = s^(-e/2)
        doubled[-e // 2] = c
    return JonesPolynomial(LaurentPoly.from_dict(doubled))
