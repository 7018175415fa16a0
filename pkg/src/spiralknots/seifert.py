"""Seifert matrix of the braid-closure ("cake") surface of a spiral knot."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braidcore import SpiralParams

__all__ = ["SeifertMatrix", "kl_blocks", "seifert_matrix"]


@dataclass(frozen=True, eq=False)
class SeifertMatrix:
    entries: np.ndarray
    p: int
    q: int
    epsilon: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    @property
    def genus_bound(self) -> int:
        return self.dimension // 2

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return (self.p, self.q, self.epsilon) == (other.p, other.q, other.epsilon) and np.array_equal(
            self.entries, other.entries
        )


def kl_blocks(epsilon) -> tuple[np.ndarray, np.ndarray]:
    """The ``(p-1) x (p-1)`` blocks ``K`` and ``L``.

    ``K[i, i] = -1`` where ``eps_i = -1``; ``L[i, i] = 1`` where ``eps_i = +1``
    and ``L[i, i+1] = -1``.
    """
    eps = tuple(epsilon)
    n = len(eps)
    if n == 0:
        raise ValueError("epsilon must be nonempty")
    K = np.zeros((n, n), dtype=np.int64)
    L = np.zeros((n, n), dtype=np.int64)
    for i, e in enumerate(eps):
        if e == -1:
            K[i, i] = -1
        elif e == 1:
            L[i, i] = 1
        else:
            raise ValueError(f"epsilon entries must be +1 or -1, got {e}")
        if i + 1 < n:
            L[i, i + 1] = -1
    return K, L


def seifert_matrix(params: SpiralParams) -> SeifertMatrix:
    """Block tri-diagonal Seifert matrix: ``-(K+L)`` on the diagonal, ``K``
    above it and ``L`` below, in ``(q-1) x (q-1)`` blocks."""
    K, L = kl_blocks(params.epsilon)
    m = params.p - 1
    nb = params.q - 1
    M = np.zeros((m * nb, m * nb), dtype=np.int64)
    for b in range(nb):
        s = slice(b * m, (b + 1) * m)
        M[s, s] = -(K + L)
        if b + 1 < nb:
            t = slice((b + 1) * m, (b + 2) * m)
            M[s, t] = K
            M[t, s] = L
    M.setflags(write=False)
    return SeifertMatrix(M, params.p, params.q, params.epsilon)
