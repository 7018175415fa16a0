"""Alexander polynomials of spiral knots and links, three ways.

* ``alexander_direct``: ``det(M - t M^T)`` of the block Seifert matrix.
* ``alexander_recursive``: the product of ``C_{p-1}(x, t)`` over the
  nontrivial ``q``-th roots of unity, evaluated exactly as a resultant
  against ``1 + x + ... + x^(q-1)``.
* ``alexander_molinari``: ``det(I + A + ... + A^(q-1))`` for the transfer
  matrix ``A``; slow, kept as an oracle.

All three are canonicalized with :func:`normalize_unit`, so their outputs
compare with ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .braidcore import SpiralParams, epsilon_stats
from .polynomial import BivarPoly, LaurentPoly, bareiss_det, normalize_unit, resultant_x
from .seifert import kl_blocks, seifert_matrix

__all__ = [
    "AlexanderPoly",
    "mu",
    "c_poly",
    "c_sequence",
    "c_closed_coeffs",
    "c_extracted_coeffs",
    "alexander_recursive",
    "alexander_direct",
    "alexander_molinari",
    "alexander",
    "alexander_all",
    "transfer_matrix_A",
    "transfer_inverse_D",
    "char_poly",
    "METHODS",
]

METHODS = ("direct", "recursive", "molinari")

_T = LaurentPoly.t()
_TINV = LaurentPoly.monomial(1, -1)
_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


@dataclass(frozen=True)
class AlexanderPoly:
    """Canonical Alexander polynomial: lowest exponent 0, positive constant term."""

    canonical: LaurentPoly

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "AlexanderPoly":
        return cls(normalize_unit(poly))

    @property
    def span(self) -> int:
        return self.canonical.span

    @property
    def leading(self) -> int:
        """Lowest coefficient (equals the highest up to sign)."""
        return self.canonical.coeff(0)

    @property
    def second(self) -> int:
        """Second-lowest coefficient."""
        return self.canonical.coeff(1)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.canonical.coeffs

    def evaluate(self, value):
        return self.canonical.evaluate(value)

    def is_symmetric(self) -> bool:
        return self.canonical.is_palindromic_up_to_sign()

    def to_json(self) -> dict:
        return self.canonical.to_json()

    def __str__(self) -> str:
        return str(self.canonical)


def mu(i: int, epsilon: Sequence[int]) -> LaurentPoly:
    """``1`` if ``eps_i = +1``, ``t`` if ``eps_i = -1``, ``0`` outside ``1..p-1``."""
    if not 1 <= i <= len(epsilon):
        return _ZERO
    return _ONE if epsilon[i - 1] == 1 else _T


@lru_cache(maxsize=4096)
def _c_sequence(eps: tuple[int, ...]) -> tuple[BivarPoly, ...]:
    x = BivarPoly.x()
    seq = [BivarPoly.constant(1)]
    if eps:
        seq.append(x + mu(1, eps) * mu(1, eps) * _TINV)
    for k in range(2, len(eps) + 1):
        mk, mk1 = mu(k, eps), mu(k - 1, eps)
        first = (x + mk * mk * _TINV) * seq[k - 1]
        second = (x * (mk1 * mk * _TINV)) * seq[k - 2]
        seq.append(first - second)
    return tuple(seq)


def c_sequence(epsilon: Sequence[int]) -> tuple[BivarPoly, ...]:
    """``(C_0, C_1, ..., C_{len(eps)})``."""
    return _c_sequence(tuple(epsilon))


def c_poly(k: int, epsilon: Sequence[int]) -> BivarPoly:
    """``C_k(x, t)`` from the three-term recursion."""
    eps = tuple(epsilon)
    if not 0 <= k <= len(eps):
        raise ValueError(f"k must lie in [0, {len(eps)}], got {k}")
    return _c_sequence(eps)[k]


def c_closed_coeffs(k: int, epsilon: Sequence[int]) -> tuple[BivarPoly, BivarPoly, BivarPoly]:
    """Closed forms for the lowest, second and highest ``t``-coefficients of ``C_k``.

    These multiply ``t^-alpha``, ``t^(1-alpha)`` and ``t^(k-alpha)`` and are
    ``x^beta``, ``(A x - gamma + B/x) x^beta`` and ``x^alpha``.
    """
    eps = tuple(epsilon)
    if not 1 <= k <= len(eps):
        raise ValueError(f"k must lie in [1, {len(eps)}], got {k}")
    st = epsilon_stats(eps, k)
    lowest = _x_monomial(st.beta)
    terms = {st.beta + 1: st.blocks_pos, st.beta: -st.gamma}
    if st.blocks_neg:
        terms[st.beta - 1] = terms.get(st.beta - 1, 0) + st.blocks_neg
    top = max(terms)
    coeffs = [0] * (top + 1)
    for e, c in terms.items():
        coeffs[e] += c
    return lowest, BivarPoly.from_x_ints(coeffs), _x_monomial(st.alpha)


def c_extracted_coeffs(k: int, epsilon: Sequence[int]) -> tuple[BivarPoly, BivarPoly, BivarPoly]:
    """The same three coefficients read off the recursively computed ``C_k``."""
    eps = tuple(epsilon)
    a = epsilon_stats(eps, k).alpha
    ck = c_poly(k, eps)
    return ck.t_coefficient(-a), ck.t_coefficient(1 - a), ck.t_coefficient(k - a)


def _x_monomial(n: int) -> BivarPoly:
    return BivarPoly.from_x_ints([0] * n + [1])


def alexander_recursive(params: SpiralParams) -> AlexanderPoly:
    if params.q == 1:
        return AlexanderPoly(_ONE)
    eps = params.epsilon
    alpha = epsilon_stats(eps).alpha
    # t^alpha clears every negative power of t in C_{p-1}
    g = c_poly(params.p - 1, eps).shift_t(alpha)
    psi = BivarPoly.from_x_ints([1] * params.q)
    return AlexanderPoly.from_poly(resultant_x(psi, g))


def alexander_direct(params: SpiralParams) -> AlexanderPoly:
    M = seifert_matrix(params).entries
    n = M.shape[0]
    rows = [
        [LaurentPoly((int(M[i, j]), -int(M[j, i])), 0) for j in range(n)]
        for i in range(n)
    ]
    return AlexanderPoly.from_poly(bareiss_det(rows))


def transfer_inverse_D(epsilon: Sequence[int]) -> list[list[LaurentPoly]]:
    """``D`` with ``d_ij = -(1/t) prod_{j<=l<=i} mu(l)`` for ``j <= i``; the
    inverse of ``K - t L^T``."""
    eps = tuple(epsilon)
    n = len(eps)
    D = [[_ZERO] * n for _ in range(n)]
    for j in range(1, n + 1):
        prod = -_TINV
        for i in range(j, n + 1):
            prod = prod * mu(i, eps)
            D[i - 1][j - 1] = prod
    return D


def _kl_laurent(epsilon, which: str) -> list[list[LaurentPoly]]:
    K, L = kl_blocks(epsilon)
    n = K.shape[0]
    if which == "B":  # K - t L^T
        return [[LaurentPoly((int(K[i, j]), -int(L[j, i]))) for j in range(n)] for i in range(n)]
    # C = L - t K^T
    return [[LaurentPoly((int(L[i, j]), -int(K[j, i]))) for j in range(n)] for i in range(n)]


def _matmul(X, Y):
    n, m, r = len(X), len(Y), len(Y[0]) if Y else 0
    out = []
    for i in range(n):
        row = []
        for j in range(r):
            acc = _ZERO
            for k in range(m):
                a = X[i][k]
                if a:
                    b = Y[k][j]
                    if b:
                        acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def transfer_matrix_A(params: SpiralParams) -> list[list[LaurentPoly]]:
    """``A = D C`` with ``C = L - t K^T``, a ``(p-1) x (p-1)`` Laurent matrix."""
    D = transfer_inverse_D(params.epsilon)
    C = _kl_laurent(params.epsilon, "C")
    return _matmul(D, C)


def char_poly(params: SpiralParams) -> BivarPoly:
    """``det(x I - A)`` computed by fraction-free elimination."""
    A = transfer_matrix_A(params)
    n = len(A)
    x = BivarPoly.x()
    rows = [
        [(x - A[i][j]) if i == j else BivarPoly.constant(-A[i][j]) for j in range(n)]
        for i in range(n)
    ]
    return bareiss_det(rows)


def alexander_molinari(params: SpiralParams, max_span: int = 20) -> AlexanderPoly:
    if params.span > max_span:
        raise ValueError(
            f"span {params.span} exceeds the transfer-matrix cap {max_span}; raise max_span to force"
        )
    A = transfer_matrix_A(params)
    n = len(A)
    ident = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    R = ident
    for _ in range(params.q - 1):
        AR = _matmul(A, R)
        R = [[AR[i][j] + ident[i][j] for j in range(n)] for i in range(n)]
    return AlexanderPoly.from_poly(bareiss_det(R))


_ENGINES = {
    "direct": alexander_direct,
    "recursive": alexander_recursive,
    "molinari": alexander_molinari,
}


def alexander(params: SpiralParams, method: str = "recursive") -> AlexanderPoly:
    try:
        engine = _ENGINES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}") from None
    return engine(params)


def alexander_all(params: SpiralParams, methods: Sequence[str] = METHODS) -> dict[str, AlexanderPoly]:
    return {m: alexander(params, m) for m in methods}
