"""Upper bounds on bridge number by seeded Wirtinger coloring.

Starting from a seed set of colored arcs, the coloring move colors the
remaining under-arc at any crossing whose over-arc and one under-arc are
already colored.  If the moves reach every arc, the seed count bounds the
bridge number from above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .braidcore import ClosureDiagram

__all__ = [
    "Q_SEED",
    "P_SEED",
    "FAILURE",
    "ColoringState",
    "seed_arcs",
    "propagate",
    "coloring_bound",
    "replay_moves",
]

Q_SEED = "q"
P_SEED = "p"
FAILURE = None

Arc = tuple[int, int]


@dataclass
class ColoringState:
    seeds: frozenset[Arc]
    colored: set[Arc] = field(default_factory=set)
    moves: list[tuple[int, Arc]] = field(default_factory=list)

    def complete(self, diagram: ClosureDiagram) -> bool:
        return self.colored >= set(diagram.arcs)


def seed_arcs(diagram: ClosureDiagram, strategy: str) -> frozenset[Arc]:
    """``Q_SEED``: at each row-1 crossing, the arc on its top-left edge (the
    strand that sweeps across the block).  ``P_SEED``: the arcs through the
    top level of the braid."""
    if strategy == Q_SEED:
        return frozenset(diagram.edge_arc[c.top_left] for c in diagram.crossings if c.row == 1)
    if strategy == P_SEED:
        return frozenset(diagram.edge_arc[e] for e in diagram.top_edges)
    raise ValueError(f"unknown seed strategy {strategy!r}")


def propagate(diagram: ClosureDiagram, seeds: Iterable[Arc]) -> ColoringState:
    """Apply coloring moves to a fixed point, sweeping crossings in index order."""
    state = ColoringState(frozenset(seeds))
    state.colored = set(state.seeds)
    changed = True
    while changed:
        changed = False
        for c in diagram.crossings:
            if c.over_arc not in state.colored:
                continue
            a, b = c.under_in, c.under_out
            if a in state.colored and b not in state.colored:
                state.colored.add(b)
                state.moves.append((c.index, b))
                changed = True
            elif b in state.colored and a not in state.colored:
                state.colored.add(a)
                state.moves.append((c.index, a))
                changed = True
    return state


def coloring_bound(diagram: ClosureDiagram, seeds: Iterable[Arc]) -> int | None:
    """``len(seeds)`` when the coloring reaches every arc, else ``FAILURE``."""
    seeds = frozenset(seeds)
    if not seeds:
        raise ValueError("seed set must be nonempty")
    state = propagate(diagram, seeds)
    return len(seeds) if state.complete(diagram) else FAILURE


def replay_moves(diagram: ClosureDiagram, state: ColoringState) -> bool:
    """Check that every logged move was legal when it was made."""
    colored = set(state.seeds)
    by_index = {c.index: c for c in diagram.crossings}
    for idx, arc in state.moves:
        c = by_index[idx]
        if c.over_arc not in colored or arc in colored:
            return False
        ends = {c.under_in, c.under_out}
        if arc not in ends or not (ends - {arc}) <= colored:
            return False
        colored.add(arc)
    return colored == state.colored
