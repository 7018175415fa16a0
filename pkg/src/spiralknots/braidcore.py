"""Spiral parameters, sign-vector statistics, braid words and the standard
closed-braid diagram.

A spiral knot or link ``S(p, q, eps)`` is the closure of the braid
``(s_1^eps_1 s_2^eps_2 ... s_{p-1}^eps_{p-1})^q`` on ``p`` strands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "SpiralParams",
    "EpsilonStats",
    "BraidWord",
    "Crossing",
    "ClosureDiagram",
    "make_params",
    "parse_epsilon",
    "format_epsilon",
    "epsilon_stats",
    "canonicalize_epsilon",
    "epsilon_orbit",
    "braid_word",
    "build_diagram",
    "diagram_from_word",
]

_MINUS_CHARS = {"-", "−", "–"}


def parse_epsilon(value: str | Iterable[int]) -> tuple[int, ...]:
    """Accept ``"+-+"`` style strings or integer sequences."""
    if isinstance(value, str):
        out = []
        for ch in value.strip():
            if ch == "+":
                out.append(1)
            elif ch in _MINUS_CHARS:
                out.append(-1)
            else:
                raise ValueError(f"invalid epsilon character {ch!r}; use '+' or '-'")
        return tuple(out)
    return tuple(int(v) for v in value)


def format_epsilon(eps: Sequence[int]) -> str:
    return "".join("+" if e > 0 else "-" for e in eps)


@dataclass(frozen=True)
class SpiralParams:
    p: int
    q: int
    epsilon: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "epsilon", tuple(int(e) for e in self.epsilon))
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if self.q < 1:
            raise ValueError(f"q must be at least 1, got {self.q}")
        if len(self.epsilon) != self.p - 1:
            raise ValueError(
                f"epsilon has length {len(self.epsilon)}, expected p-1 = {self.p - 1}"
            )
        bad = [e for e in self.epsilon if e not in (1, -1)]
        if bad:
            raise ValueError(f"epsilon entries must be +1 or -1, got {bad[0]}")

    @property
    def components(self) -> int:
        return gcd(self.p, self.q)

    def is_knot(self) -> bool:
        return self.components == 1

    @property
    def is_unknot(self) -> bool:
        return self.q == 1

    @property
    def span(self) -> int:
        return (self.p - 1) * (self.q - 1)

    @property
    def writhe(self) -> int:
        return self.q * sum(self.epsilon)

    def mirror(self) -> "SpiralParams":
        return SpiralParams(self.p, self.q, tuple(-e for e in self.epsilon))

    def reversed(self) -> "SpiralParams":
        return SpiralParams(self.p, self.q, self.epsilon[::-1])

    def __str__(self) -> str:
        return f"S({self.p},{self.q},{format_epsilon(self.epsilon)})"


def make_params(p: int, q: int, epsilon: str | Sequence[int]) -> SpiralParams:
    """Validated :class:`SpiralParams`; raises ValueError on bad input."""
    return SpiralParams(int(p), int(q), parse_epsilon(epsilon))


@dataclass(frozen=True)
class EpsilonStats:
    """Counts over the first ``k`` signs: ``alpha`` (+1 entries), ``beta``
    (-1 entries), ``blocks_pos``/``blocks_neg`` (maximal runs) and ``gamma``
    (sign changes)."""

    k: int
    alpha: int
    beta: int
    blocks_pos: int
    blocks_neg: int
    gamma: int


def epsilon_stats(epsilon: Sequence[int], k: int | None = None) -> EpsilonStats:
    eps = tuple(epsilon)
    if k is None:
        k = len(eps)
    if not 0 <= k <= len(eps):
        raise ValueError(f"k must lie in [0, {len(eps)}], got {k}")
    head = eps[:k]
    alpha = sum(1 for e in head if e == 1)
    beta = k - alpha
    pos = neg = 0
    prev = 0
    for e in head:
        if e != prev:
            if e == 1:
                pos += 1
            else:
                neg += 1
        prev = e
    gamma = pos + neg - 1 if k else 0
    return EpsilonStats(k, alpha, beta, pos, neg, gamma)


def epsilon_orbit(epsilon: Sequence[int], distinguish_mirrors: bool = False) -> set[tuple[int, ...]]:
    eps = tuple(epsilon)
    orbit = {eps, eps[::-1]}
    if not distinguish_mirrors:
        neg = tuple(-e for e in eps)
        orbit |= {neg, neg[::-1]}
    return orbit


def _lex_key(eps: tuple[int, ...]) -> tuple[int, ...]:
    # '+' sorts before '-'
    return tuple(0 if e == 1 else 1 for e in eps)


def canonicalize_epsilon(epsilon: Sequence[int], distinguish_mirrors: bool = False) -> tuple[int, ...]:
    """Least orbit representative under reversal (and negation unless
    ``distinguish_mirrors``), ordering ``+`` before ``-``."""
    eps = parse_epsilon(epsilon)
    if not eps:
        raise ValueError("epsilon must be nonempty")
    return min(epsilon_orbit(eps, distinguish_mirrors), key=_lex_key)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def braid_word(params: SpiralParams) -> BraidWord:
    block = tuple((i + 1, e) for i, e in enumerate(params.epsilon))
    return BraidWord(params.p, block * params.q)


@dataclass(frozen=True)
class Crossing:
    """One braid crossing of the closed diagram.

    Edges are the strand segments between consecutive crossings;
    ``top_left``/``top_right`` enter the crossing and ``bottom_left``/
    ``bottom_right`` leave it.  ``over_arc``, ``under_in`` and ``under_out``
    are arc identifiers.
    """

    index: int
    row: int
    column: int
    sign: int
    top_left: int
    top_right: int
    bottom_left: int
    bottom_right: int
    over_arc: tuple[int, int] = (0, 0)
    under_in: tuple[int, int] = (0, 0)
    under_out: tuple[int, int] = (0, 0)

    @property
    def over_edges(self) -> tuple[int, int]:
        if self.sign > 0:
            return self.top_left, self.bottom_right
        return self.top_right, self.bottom_left

    @property
    def under_edges(self) -> tuple[int, int]:
        if self.sign > 0:
            return self.top_right, self.bottom_left
        return self.top_left, self.bottom_right


@dataclass(frozen=True)
class ClosureDiagram:
    """Standard diagram of a closed braid.

    Closure strands run to the right of the braid without extra crossings.
    An arc is identified by the ``(row, column)`` of the crossing where it
    starts as the outgoing under-strand; a component with no under-crossing
    is a single arc labelled ``(0, position)``.
    """

    strands: int
    crossings: tuple[Crossing, ...]
    n_edges: int
    top_edges: tuple[int, ...]
    edge_arc: tuple[tuple[int, int], ...] = field(repr=False)
    arcs: tuple[tuple[int, int], ...]
    components: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def arc_of_edge(self, edge: int) -> tuple[int, int]:
        return self.edge_arc[edge]


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        parent = self.parent
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def diagram_from_word(strands: int, letters: Sequence[tuple[int, int]], row_len: int | None = None) -> ClosureDiagram:
    """Closed-braid diagram of an arbitrary braid word.

    ``letters`` are ``(generator, sign)`` pairs with generators in
    ``1..strands-1``.  ``row_len`` sets how letter indices map to
    ``(row, column)``; by default the row is the generator index and the
    column counts occurrences of that generator.
    """
    if strands < 1:
        raise ValueError("need at least one strand")
    current = list(range(strands))
    next_edge = strands
    raw = []
    seen: dict[int, int] = {}
    for idx, (gen, sign) in enumerate(letters):
        if not 1 <= gen < strands or sign not in (1, -1):
            raise ValueError(f"invalid letter {(gen, sign)!r}")
        a, b = gen - 1, gen
        tl, tr = current[a], current[b]
        bl, br = next_edge, next_edge + 1
        next_edge += 2
        current[a], current[b] = bl, br
        if row_len:
            row, col = idx % row_len + 1, idx // row_len + 1
        else:
            seen[gen] = seen.get(gen, 0) + 1
            row, col = gen, seen[gen]
        raw.append([idx, row, col, sign, tl, tr, bl, br])

    # closure: the last edge at each position is the first one
    relabel = list(range(next_edge))
    for pos in range(strands):
        relabel[current[pos]] = pos
    used = sorted(set(relabel))
    compact = {e: i for i, e in enumerate(used)}
    relabel = [compact[e] for e in relabel]
    n_edges = len(used)
    for r in raw:
        for k in range(4, 8):
            r[k] = relabel[r[k]]

    over = _DSU(n_edges)
    comp = _DSU(n_edges)
    for r in raw:
        _, _, _, sign, tl, tr, bl, br = r
        if sign > 0:
            over.union(tl, br)
        else:
            over.union(tr, bl)
        comp.union(tl, br)
        comp.union(tr, bl)

    arc_name: dict[int, tuple[int, int]] = {}
    for r in raw:
        _, row, col, sign, tl, tr, bl, br = r
        out_edge = bl if sign > 0 else br
        arc_name[over.find(out_edge)] = (row, col)
    for pos in range(strands):
        root = over.find(pos)
        if root not in arc_name:
            arc_name[root] = (0, pos)
    edge_arc = tuple(arc_name[over.find(e)] for e in range(n_edges))

    crossings = []
    for r in raw:
        idx, row, col, sign, tl, tr, bl, br = r
        if sign > 0:
            o, ui, uo = edge_arc[tl], edge_arc[tr], edge_arc[bl]
        else:
            o, ui, uo = edge_arc[tr], edge_arc[tl], edge_arc[br]
        crossings.append(Crossing(idx, row, col, sign, tl, tr, bl, br, o, ui, uo))

    n_comp = len({comp.find(e) for e in range(n_edges)})
    return ClosureDiagram(
        strands=strands,
        crossings=tuple(crossings),
        n_edges=n_edges,
        top_edges=tuple(range(strands)),
        edge_arc=edge_arc,
        arcs=tuple(sorted(set(edge_arc))),
        components=n_comp,
    )


def build_diagram(params: SpiralParams) -> ClosureDiagram:
    """Closed-braid diagram of ``S(p, q, eps)`` on the ``(p-1) x q`` grid."""
    return diagram_from_word(params.p, braid_word(params).letters, row_len=params.p - 1)
