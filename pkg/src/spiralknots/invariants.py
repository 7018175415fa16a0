"""Genus, determinant, torus-knot closed forms and the spiral obstruction."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .alexander import AlexanderPoly, alexander
from .braidcore import SpiralParams
from .polynomial import LaurentPoly, normalize_unit

__all__ = [
    "genus",
    "knot_determinant",
    "torus_alexander",
    "torus_determinant",
    "CandidateCheck",
    "ObstructionReport",
    "obstruct_spiral",
    "SPIRAL_POSSIBLE",
    "NOT_SPIRAL",
    "RULES",
]

SPIRAL_POSSIBLE = "SPIRAL_POSSIBLE"
NOT_SPIRAL = "NOT_SPIRAL"
RULES = ("monic", "second_coefficient", "determinant")


def genus(params: SpiralParams) -> Fraction:
    """Seifert genus; for links, the minimal genus of a connected Seifert surface."""
    if params.q == 1:
        return Fraction(0)
    d = params.components
    return Fraction(params.span - (d - 1), 2)


def knot_determinant(params: SpiralParams, delta: AlexanderPoly | None = None) -> int:
    if delta is None:
        delta = alexander(params)
    return abs(delta.canonical.evaluate(-1))


def _t_power_minus_one(n: int) -> LaurentPoly:
    return LaurentPoly([-1] + [0] * (n - 1) + [1])


def torus_alexander(p: int, q: int) -> AlexanderPoly:
    """``(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`` by exact division."""
    if p < 2 or q < 2:
        raise ValueError("torus knot parameters must be at least 2")
    if gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is a link: gcd is {gcd(p, q)}")
    num = _t_power_minus_one(p * q) * _t_power_minus_one(1)
    den = _t_power_minus_one(p) * _t_power_minus_one(q)
    return AlexanderPoly.from_poly(num.exquo(den))


def torus_determinant(p: int, q: int) -> int:
    if p % 2 and q % 2:
        return 1
    return p if p % 2 else q


@dataclass
class CandidateCheck:
    p: int
    q: int
    gamma: Fraction | None
    second_coeff_ok: bool
    det_divisibility_ok: bool | None  # None when p is odd

    @property
    def ok(self) -> bool:
        return self.second_coeff_ok and self.det_divisibility_ok is not False

    def failed_rules(self) -> list[str]:
        out = []
        if not self.second_coeff_ok:
            out.append("second_coefficient")
        if self.det_divisibility_ok is False:
            out.append("determinant")
        return out


@dataclass
class ObstructionReport:
    polynomial: LaurentPoly
    monic_ok: bool | None
    span: int
    candidates: list[CandidateCheck] = field(default_factory=list)
    verdict: str = SPIRAL_POSSIBLE
    violated: list[str] = field(default_factory=list)

    @property
    def surviving(self) -> list[CandidateCheck]:
        return [c for c in self.candidates if c.ok and self.monic_ok is not False]

    @property
    def torus_compatible(self) -> bool:
        return any(c.gamma == 0 for c in self.surviving)

    def to_json(self) -> dict:
        return {
            "polynomial": self.polynomial.to_json(),
            "verdict": self.verdict,
            "violated": self.violated,
            "monic_ok": self.monic_ok,
            "span": self.span,
            "torus_compatible": self.torus_compatible,
            "candidates": [
                {
                    "p": c.p,
                    "q": c.q,
                    "gamma": None if c.gamma is None else str(c.gamma),
                    "second_coeff_ok": c.second_coeff_ok,
                    "det_divisibility_ok": c.det_divisibility_ok,
                }
                for c in self.candidates
            ],
        }


def _factorizations(span: int, q_hint: int | None) -> list[tuple[int, int]]:
    out = []
    for a in range(1, span + 1):
        if span % a:
            continue
        p, q = a + 1, span // a + 1
        if gcd(p, q) != 1:
            continue
        if q_hint is not None and q != q_hint:
            continue
        out.append((p, q))
    return out


def obstruct_spiral(
    delta: LaurentPoly,
    q_hint: int | None = None,
    rules: tuple[str, ...] = RULES,
) -> ObstructionReport:
    """Test the necessary conditions for ``delta`` to be a spiral knot's
    Alexander polynomial.

    Candidates are all coprime ``(p, q)`` with ``(p-1)(q-1) = span``.  For each
    one the second coefficient must equal ``-(q*gamma + 1)`` times the lowest
    one for an integer ``0 <= gamma <= p-2``, and for even ``p``, ``q`` must
    divide ``delta(-1)``.  The verdict is NOT_SPIRAL only when every candidate
    fails; SPIRAL_POSSIBLE never claims that a realization exists.
    """
    if q_hint is not None and q_hint < 2:
        raise ValueError("q_hint must be at least 2")
    f = normalize_unit(delta)
    lead = f.coeff(0)
    second = f.coeff(1)
    span = f.span
    det = f.evaluate(-1)

    monic_ok = abs(lead) == 1 if "monic" in rules else None
    report = ObstructionReport(polynomial=f, monic_ok=monic_ok, span=span)

    pairs = _factorizations(span, q_hint) if span >= 1 else []
    for p, q in pairs:
        gamma = None
        sec_ok = True
        if "second_coefficient" in rules:
            ratio = Fraction(-second, lead)
            gamma = (ratio - 1) / q
            sec_ok = gamma.denominator == 1 and 0 <= gamma <= p - 2
        det_ok = None
        if "determinant" in rules and p % 2 == 0:
            det_ok = det % q == 0
        report.candidates.append(CandidateCheck(p, q, gamma, sec_ok, det_ok))

    violated = []
    if monic_ok is False:
        violated.append("monic")
    if not pairs:
        violated.append("degree")
    elif not any(c.ok for c in report.candidates):
        for c in report.candidates:
            for r in c.failed_rules():
                if r not in violated:
                    violated.append(r)
    report.violated = violated
    report.verdict = NOT_SPIRAL if violated else SPIRAL_POSSIBLE
    return report
