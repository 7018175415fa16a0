"""Exact integer Laurent polynomials, bivariate polynomials over them,
fraction-free determinants and Sylvester resultants.

Everything here is exact: coefficients are Python integers and no
operation ever rounds.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

__all__ = [
    "LaurentPoly",
    "BivarPoly",
    "normalize_unit",
    "bareiss_det",
    "sylvester_matrix",
    "resultant_x",
]

Scalar = Union[int, "LaurentPoly"]


def _trim(coeffs: Sequence[int], minexp: int) -> tuple[tuple[int, ...], int]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return (), 0
    return tuple(coeffs[lo:hi]), minexp + lo


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return out


class LaurentPoly:
    """Laurent polynomial ``sum c_k t^(minexp + k)`` with integer coefficients.

    Instances are immutable and canonically trimmed, so equality and
    hashing are structural.  ``var`` only affects printing.
    """

    __slots__ = ("coeffs", "minexp")

    coeffs: tuple[int, ...]
    minexp: int

    def __init__(self, coeffs: Iterable[int] = (), minexp: int = 0):
        c, m = _trim([int(x) for x in coeffs], int(minexp))
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "minexp", m)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...], minexp: int) -> "LaurentPoly":
        # caller guarantees coeffs is already trimmed
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "minexp", minexp if coeffs else 0)
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw((), 0)

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw((1,), 0)

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls((coeff,), exp)

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls._raw((1,), 1)

    @classmethod
    def coerce(cls, value: Scalar) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls((value,), 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "LaurentPoly":
        if not terms:
            return cls.zero()
        lo, hi = min(terms), max(terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] += c
        return cls(coeffs, lo)

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        """Inverse of :meth:`to_json`; ``{"minexp": k, "coeffs": [...]}``."""
        if not isinstance(data, dict) or "coeffs" not in data:
            raise ValueError("polynomial JSON must be an object with 'coeffs'")
        coeffs = data["coeffs"]
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise ValueError("polynomial coefficients must be integers")
        return cls(coeffs, int(data.get("minexp", 0)))

    def to_json(self) -> dict:
        return {"minexp": self.minexp, "coeffs": list(self.coeffs)}

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def maxexp(self) -> int:
        return self.minexp + len(self.coeffs) - 1 if self.coeffs else 0

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def coeff(self, exp: int) -> int:
        k = exp - self.minexp
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> dict[int, int]:
        return {self.minexp + k: c for k, c in enumerate(self.coeffs) if c}

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_constant(self) -> bool:
        return not self.coeffs or (len(self.coeffs) == 1 and self.minexp == 0)

    def is_palindromic_up_to_sign(self) -> bool:
        rev = self.coeffs[::-1]
        return rev == self.coeffs or rev == tuple(-c for c in self.coeffs)

    # -- arithmetic -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.minexp == other.minexp

    def __hash__(self) -> int:
        return hash((self.coeffs, self.minexp))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(tuple(-c for c in self.coeffs), self.minexp)

    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, BivarPoly):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.minexp, other.minexp)
        hi = max(self.maxexp, other.maxexp)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.minexp - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.minexp - lo + k] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, BivarPoly):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, BivarPoly):
            return NotImplemented
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly._raw(tuple(c * other for c in self.coeffs), self.minexp)
        other = LaurentPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        return LaurentPoly._raw(
            tuple(_poly_mul(self.coeffs, other.coeffs)), self.minexp + other.minexp
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial() or abs(self.coeffs[0]) != 1:
                raise ValueError("negative powers only exist for units ±t^k")
            return LaurentPoly._raw((self.coeffs[0] ** -n,), n * self.minexp)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly._raw(self.coeffs, self.minexp + k) if self.coeffs else self

    def exquo(self, other: Scalar) -> "LaurentPoly":
        """Exact quotient ``self / other``; raises ValueError if not exact."""
        other = LaurentPoly.coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.coeffs:
            return self
        shift = self.minexp - other.minexp
        den = other.coeffs
        if len(den) == 1:
            d = den[0]
            out = []
            for c in self.coeffs:
                q, r = divmod(c, d)
                if r:
                    raise ValueError("inexact division")
                out.append(q)
            return LaurentPoly._raw(tuple(out), shift)
        num = list(self.coeffs)
        nq = len(num) - len(den) + 1
        if nq <= 0:
            raise ValueError("inexact division")
        lead = den[-1]
        quot = [0] * nq
        for k in range(nq - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c:
                q, r = divmod(c, lead)
                if r:
                    raise ValueError("inexact division")
                quot[k] = q
                for j, d in enumerate(den):
                    num[k + j] -= q * d
        if any(num):
            raise ValueError("inexact division")
        return LaurentPoly(quot, shift)

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Return ``f(t**k)`` for a nonzero integer ``k``."""
        if k == 0:
            raise ValueError("k must be nonzero")
        return LaurentPoly.from_dict({e * k: c for e, c in self.terms().items()})

    def evaluate(self, value):
        """Evaluate at an int, Fraction, complex, or LaurentPoly value."""
        if not self.coeffs:
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        if self.minexp >= 0:
            return acc * value**self.minexp
        if isinstance(value, LaurentPoly):
            return acc * value ** self.minexp
        if isinstance(value, int):
            from fractions import Fraction

            return Fraction(acc) / Fraction(value) ** (-self.minexp)
        return acc / value ** (-self.minexp)

    __call__ = evaluate

    def normalized(self) -> "LaurentPoly":
        return normalize_unit(self)

    # -- printing -------------------------------------------------------

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            e = self.minexp + k
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format("t")

    def __repr__(self) -> str:
        return f"LaurentPoly({list(self.coeffs)!r}, minexp={self.minexp})"


def normalize_unit(f: LaurentPoly) -> LaurentPoly:
    """The associate ``±t^k f`` with lowest exponent 0 and positive constant term."""
    if not f.coeffs:
        raise ValueError("cannot normalize the zero polynomial")
    c = f.coeffs if f.coeffs[0] > 0 else tuple(-x for x in f.coeffs)
    return LaurentPoly._raw(c, 0)


class BivarPoly:
    """Polynomial in ``x`` whose coefficients are Laurent polynomials in ``t``.

    ``x_coeffs[k]`` is the coefficient of ``x**k``.
    """

    __slots__ = ("x_coeffs",)

    x_coeffs: tuple[LaurentPoly, ...]

    def __init__(self, x_coeffs: Iterable[Scalar] = ()):
        cs = [LaurentPoly.coerce(c) for c in x_coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "x_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Scalar) -> "BivarPoly":
        return cls([c])

    @classmethod
    def coerce(cls, value) -> "BivarPoly":
        if isinstance(value, BivarPoly):
            return value
        return cls([value])

    @classmethod
    def from_x_ints(cls, coeffs: Sequence[int]) -> "BivarPoly":
        """Polynomial in ``x`` alone from integer coefficients (lowest first)."""
        return cls([LaurentPoly.coerce(c) for c in coeffs])

    @property
    def degree(self) -> int:
        return len(self.x_coeffs) - 1

    def leading(self) -> LaurentPoly:
        return self.x_coeffs[-1] if self.x_coeffs else LaurentPoly.zero()

    def coeff(self, k: int) -> LaurentPoly:
        if 0 <= k < len(self.x_coeffs):
            return self.x_coeffs[k]
        return LaurentPoly.zero()

    def __bool__(self) -> bool:
        return bool(self.x_coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = BivarPoly.coerce(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.x_coeffs == other.x_coeffs

    def __hash__(self) -> int:
        return hash(self.x_coeffs)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly([-c for c in self.x_coeffs])

    def __add__(self, other) -> "BivarPoly":
        other = BivarPoly.coerce(other)
        n = max(len(self.x_coeffs), len(other.x_coeffs))
        return BivarPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "BivarPoly":
        return self + (-BivarPoly.coerce(other))

    def __rsub__(self, other) -> "BivarPoly":
        return BivarPoly.coerce(other) + (-self)

    def __mul__(self, other) -> "BivarPoly":
        if isinstance(other, (int, LaurentPoly)):
            return BivarPoly([c * other for c in self.x_coeffs])
        other = BivarPoly.coerce(other)
        if not self.x_coeffs or not other.x_coeffs:
            return BivarPoly()
        out = [LaurentPoly.zero()] * (len(self.x_coeffs) + len(other.x_coeffs) - 1)
        for i, a in enumerate(self.x_coeffs):
            if not a:
                continue
            for j, b in enumerate(other.x_coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return BivarPoly(out)

    __rmul__ = __mul__

    def exquo(self, other) -> "BivarPoly":
        """Exact quotient in ``Z[t, 1/t][x]``; raises ValueError if not exact."""
        other = BivarPoly.coerce(other)
        if not other.x_coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.x_coeffs:
            return self
        if other.degree == 0:
            d = other.x_coeffs[0]
            return BivarPoly([c.exquo(d) for c in self.x_coeffs])
        num = list(self.x_coeffs)
        den = other.x_coeffs
        nq = len(num) - len(den) + 1
        if nq <= 0:
            raise ValueError("inexact division")
        lead = den[-1]
        quot = [LaurentPoly.zero()] * nq
        for k in range(nq - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c:
                q = c.exquo(lead)
                quot[k] = q
                for j, d in enumerate(den):
                    if d:
                        num[k + j] = num[k + j] - q * d
        if any(num):
            raise ValueError("inexact division")
        return BivarPoly(quot)

    def evaluate_x(self, value) -> LaurentPoly:
        """Substitute ``x = value`` (an int or LaurentPoly) by Horner's rule."""
        acc = LaurentPoly.zero()
        for c in reversed(self.x_coeffs):
            acc = acc * value + c
        return acc

    def substitute_t(self, value) -> "BivarPoly":
        """Substitute ``t = value`` (int) in every coefficient; result has integer coefficients."""
        return BivarPoly([LaurentPoly.coerce(_as_int(c.evaluate(value))) for c in self.x_coeffs])

    def t_coefficient(self, exp: int) -> "BivarPoly":
        """The polynomial in ``x`` multiplying ``t**exp``."""
        return BivarPoly([c.coeff(exp) for c in self.x_coeffs])

    def shift_t(self, k: int) -> "BivarPoly":
        return BivarPoly([c.shift(k) for c in self.x_coeffs])

    def min_t_exp(self) -> int:
        exps = [c.minexp for c in self.x_coeffs if c]
        return min(exps) if exps else 0

    def format(self) -> str:
        if not self.x_coeffs:
            return "0"
        parts = []
        for k in range(len(self.x_coeffs) - 1, -1, -1):
            c = self.x_coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                parts.append(f"({c})" if len(c.coeffs) > 1 else str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c}){mono}")
        return " + ".join(parts)

    __str__ = format

    def __repr__(self) -> str:
        return f"BivarPoly({list(self.x_coeffs)!r})"


def _as_int(value) -> int:
    if isinstance(value, int):
        return value
    if getattr(value, "denominator", None) == 1:
        return int(value)
    raise ValueError(f"expected an integer value, got {value!r}")


def _exquo(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ValueError("inexact division")
        return q
    if isinstance(a, int):
        a = type(b).coerce(a)
    return a.exquo(b)


def _bareiss(rows: list[list], one):
    n = len(rows)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0 * one
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                if lead:
                    val = row_i[j] * pivot - lead * row_k[j]
                else:
                    val = row_i[j] * pivot
                row_i[j] = _exquo(val, prev) if val else val
            row_i[k] = 0 * one
        prev = pivot
    return rows[n - 1][n - 1] if sign > 0 else -rows[n - 1][n - 1]


def bareiss_det(matrix: Sequence[Sequence]) -> LaurentPoly | BivarPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Entries may be ints, :class:`LaurentPoly` or :class:`BivarPoly`.  Laurent
    rows are first multiplied by powers of ``t`` so that every entry is an
    ordinary polynomial; the accumulated power is divided out at the end.
    A zero pivot column is handled by a row swap; a singular matrix gives 0.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if any(isinstance(e, BivarPoly) for row in matrix for e in row):
        rows = [[BivarPoly.coerce(e) for e in row] for row in matrix]
        if n == 0:
            return BivarPoly.constant(1)
        return _bareiss(rows, BivarPoly.constant(1))
    rows = [[LaurentPoly.coerce(e) for e in row] for row in matrix]
    if n == 0:
        return LaurentPoly.one()
    total = 0
    for r, row in enumerate(rows):
        nz = [e.minexp for e in row if e]
        if nz:
            s = -min(nz)
            total += s
            rows[r] = [e.shift(s) for e in row]
    det = _bareiss(rows, LaurentPoly.one())
    return det.shift(-total)


def sylvester_matrix(f: BivarPoly, g: BivarPoly) -> list[list[LaurentPoly]]:
    """Sylvester matrix of ``f`` and ``g`` with respect to ``x``.

    Rows hold coefficients from the highest power of ``x`` down, so that its
    determinant is ``lc(f)**deg(g) * prod g(root)`` over the roots of ``f``.
    """
    m, n = f.degree, g.degree
    size = m + n
    zero = LaurentPoly.zero()
    fc = list(reversed(f.x_coeffs))
    gc = list(reversed(g.x_coeffs))
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant_x(f: BivarPoly, g: BivarPoly) -> LaurentPoly:
    """Resultant of ``f`` and ``g`` in ``x``: ``det`` of their Sylvester matrix."""
    f, g = BivarPoly.coerce(f), BivarPoly.coerce(g)
    if not f or not g:
        raise ValueError("resultant of a zero polynomial is undefined")
    if f.degree == 0 and g.degree == 0:
        return LaurentPoly.one()
    return bareiss_det(sylvester_matrix(f, g))
