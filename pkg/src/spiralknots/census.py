"""Exhaustive enumeration of spiral knots and links with invariant
fingerprints, collision detection and table output."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence

from .alexander import AlexanderPoly, alexander
from .braidcore import SpiralParams, build_diagram, canonicalize_epsilon, epsilon_stats, format_epsilon
from .bridge import P_SEED, Q_SEED, coloring_bound, seed_arcs
from .invariants import genus, knot_determinant
from .jones import JonesPolynomial, jones_polynomial
from .polynomial import LaurentPoly, normalize_unit

__all__ = [
    "InvariantViolation",
    "CensusRecord",
    "CollisionGroup",
    "canonical_epsilons",
    "census_params",
    "make_record",
    "check_record",
    "enumerate_census",
    "find_collisions",
    "load_match_table",
    "render_table",
    "emit_table",
    "CSV_COLUMNS",
    "FORMATS",
    "DEFAULT_JONES_CAP",
]

CSV_COLUMNS = (
    "p", "q", "epsilon", "is_knot", "span", "genus", "determinant", "gamma",
    "second_coeff", "torus", "alexander_minexp", "alexander_coeffs",
    "jones_coeffs2x", "bridge_q", "bridge_p", "matched_name",
)
FORMATS = ("json", "csv", "md")

# 2^20 states keeps a single Jones evaluation in the tens of seconds
DEFAULT_JONES_CAP = 20


class InvariantViolation(AssertionError):
    """A closed-form property failed on a computed record."""


@dataclass(frozen=True)
class CensusRecord:
    params: SpiralParams
    mirrors_distinguished: bool
    is_knot: bool
    span: int
    alexander: AlexanderPoly
    determinant: int
    genus: Fraction
    gamma: int
    second_coeff: int
    torus: bool
    jones: JonesPolynomial | None = None
    bridge_q: int | None = None
    bridge_p: int | None = None
    matched_name: str | None = None

    @property
    def key(self) -> tuple:
        p = self.params
        return (p.p, p.q, p.epsilon, self.mirrors_distinguished)

    def sort_key(self) -> tuple:
        p = self.params
        return (p.p, p.q, tuple(0 if e == 1 else 1 for e in p.epsilon))

    @property
    def bridge_bound(self) -> int | None:
        found = [b for b in (self.bridge_q, self.bridge_p) if b is not None]
        return min(found) if found else None

    def to_json(self) -> dict:
        p = self.params
        return {
            "p": p.p,
            "q": p.q,
            "epsilon": format_epsilon(p.epsilon),
            "is_knot": self.is_knot,
            "components": p.components,
            "span": self.span,
            "genus": str(self.genus),
            "determinant": self.determinant,
            "gamma": self.gamma,
            "second_coeff": self.second_coeff,
            "torus": self.torus,
            "alexander": self.alexander.to_json(),
            "jones": None if self.jones is None else self.jones.to_json(),
            "bridge_q": self.bridge_q,
            "bridge_p": self.bridge_p,
            "matched_name": self.matched_name,
        }

    def to_csv_row(self) -> dict:
        p = self.params
        j = ""
        if self.jones is not None:
            d = self.jones.doubled
            j = f"{d.minexp}:" + " ".join(map(str, d.coeffs))
        return {
            "p": p.p,
            "q": p.q,
            "epsilon": format_epsilon(p.epsilon),
            "is_knot": int(self.is_knot),
            "span": self.span,
            "genus": str(self.genus),
            "determinant": self.determinant,
            "gamma": self.gamma,
            "second_coeff": self.second_coeff,
            "torus": int(self.torus),
            "alexander_minexp": self.alexander.canonical.minexp,
            "alexander_coeffs": " ".join(map(str, self.alexander.coeffs)),
            "jones_coeffs2x": j,
            "bridge_q": "" if self.bridge_q is None else self.bridge_q,
            "bridge_p": "" if self.bridge_p is None else self.bridge_p,
            "matched_name": self.matched_name or "",
        }


def canonical_epsilons(p: int, distinguish_mirrors: bool = False) -> list[tuple[int, ...]]:
    """One representative per symmetry class of sign vectors of length ``p-1``,
    sorted with ``+`` before ``-``."""
    reps = {canonicalize_epsilon(e, distinguish_mirrors) for e in product((1, -1), repeat=p - 1)}
    return sorted(reps, key=lambda e: tuple(0 if x == 1 else 1 for x in e))


def census_params(
    max_span: int,
    links: bool = False,
    distinguish_mirrors: bool = False,
    p: int | None = None,
    q: int | None = None,
) -> list[SpiralParams]:
    if max_span < 1:
        raise ValueError("max_span must be at least 1")
    out = []
    for pp in range(2, max_span + 2):
        if p is not None and pp != p:
            continue
        for qq in range(2, max_span // (pp - 1) + 2):
            if q is not None and qq != q:
                continue
            if not links and gcd(pp, qq) != 1:
                continue
            for eps in canonical_epsilons(pp, distinguish_mirrors):
                out.append(SpiralParams(pp, qq, eps))
    return out


def make_record(
    params: SpiralParams,
    distinguish_mirrors: bool = False,
    with_jones: bool = False,
    with_bridge: bool = False,
    jones_cap: int = DEFAULT_JONES_CAP,
    match_table: dict[LaurentPoly, str] | None = None,
) -> CensusRecord:
    delta = alexander(params)
    stats = epsilon_stats(params.epsilon)
    jones = None
    if with_jones and params.p - 1 and (params.p - 1) * params.q <= jones_cap:
        jones = jones_polynomial(params, cap=jones_cap)
    bq = bp = None
    if with_bridge:
        diagram = build_diagram(params)
        bq = coloring_bound(diagram, seed_arcs(diagram, Q_SEED))
        bp = coloring_bound(diagram, seed_arcs(diagram, P_SEED))
    name = None
    if match_table:
        hit = match_table.get(delta.canonical)
        if hit is not None:
            name = f"Δ-compatible with {hit}"
    return CensusRecord(
        params=params,
        mirrors_distinguished=distinguish_mirrors,
        is_knot=params.is_knot(),
        span=delta.span,
        alexander=delta,
        determinant=knot_determinant(params, delta),
        genus=genus(params),
        gamma=stats.gamma,
        second_coeff=delta.second,
        torus=stats.gamma == 0,
        jones=jones,
        bridge_q=bq,
        bridge_p=bp,
        matched_name=name,
    )


def check_record(rec: CensusRecord) -> None:
    """Raise :class:`InvariantViolation` if any closed-form property fails."""
    p, q = rec.params.p, rec.params.q
    expected_span = (p - 1) * (q - 1)
    problems = []
    if rec.span != expected_span:
        problems.append(f"span {rec.span} != {expected_span}")
    lead = rec.alexander.leading
    if abs(lead) != 1:
        problems.append(f"leading coefficient {lead} is not a unit")
    if rec.second_coeff != -lead * (q * rec.gamma + 1):
        problems.append(f"second coefficient {rec.second_coeff} != -{lead}*({q}*{rec.gamma}+1)")
    if p % 2 == 0 and rec.determinant % q:
        problems.append(f"determinant {rec.determinant} not divisible by q={q}")
    d = rec.params.components
    if rec.genus != Fraction(rec.span - (d - 1), 2):
        problems.append(f"genus {rec.genus} inconsistent with span {rec.span}")
    if rec.torus != (rec.gamma == 0):
        problems.append("torus flag disagrees with gamma")
    if rec.bridge_q is None and rec.bridge_p is None:
        pass
    elif rec.bridge_q != q or rec.bridge_p is None or rec.bridge_p > p:
        problems.append(f"coloring bounds q:{rec.bridge_q} p:{rec.bridge_p}")
    if rec.jones is not None and rec.jones.value_at_one() != (-2) ** (d - 1):
        problems.append(f"Jones value at 1 is {rec.jones.value_at_one()}")
    if problems:
        raise InvariantViolation(f"{rec.params}: " + "; ".join(problems))


def enumerate_census(
    max_span: int,
    links: bool = False,
    distinguish_mirrors: bool = False,
    with_jones: bool = False,
    with_bridge: bool = False,
    match_table: dict[LaurentPoly, str] | None = None,
    p: int | None = None,
    q: int | None = None,
    jones_cap: int = DEFAULT_JONES_CAP,
    check: bool = True,
) -> list[CensusRecord]:
    """All spiral knots (and links, with ``links``) of span at most
    ``max_span``, one record per canonical sign vector.  Every record is run
    through :func:`check_record` unless ``check`` is false."""
    records = []
    for params in census_params(max_span, links, distinguish_mirrors, p, q):
        rec = make_record(params, distinguish_mirrors, with_jones, with_bridge, jones_cap, match_table)
        if check:
            check_record(rec)
        records.append(rec)
    records.sort(key=CensusRecord.sort_key)
    return records


@dataclass(frozen=True)
class CollisionGroup:
    alexander: AlexanderPoly
    records: tuple[CensusRecord, ...]
    # None when some member lacks a Jones polynomial
    jones_agree: bool | None

    def __len__(self) -> int:
        return len(self.records)


def _identity(rec: CensusRecord) -> tuple:
    # torus knots T(p,q) and T(q,p) coincide, so they are not a collision
    if rec.torus:
        return ("torus", frozenset((rec.params.p, rec.params.q)))
    return rec.key


def find_collisions(records: Iterable[CensusRecord]) -> list[CollisionGroup]:
    """Groups of records with equal Alexander polynomial that are not
    already known to be the same knot."""
    by_delta: dict[LaurentPoly, list[CensusRecord]] = {}
    for rec in records:
        by_delta.setdefault(rec.alexander.canonical, []).append(rec)
    groups = []
    for recs in by_delta.values():
        if len({_identity(r) for r in recs}) < 2:
            continue
        recs = sorted(recs, key=CensusRecord.sort_key)
        if any(r.jones is None for r in recs):
            agree = None
        else:
            agree = len({r.jones for r in recs}) == 1
        groups.append(CollisionGroup(recs[0].alexander, tuple(recs), agree))
    groups.sort(key=lambda g: g.records[0].sort_key())
    return groups


def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(v) for v in json.loads(text)]
    return [int(v) for v in text.replace(",", " ").replace(";", " ").split()]


def load_match_table(path: str | Path) -> dict[LaurentPoly, str]:
    """Read a CSV with columns ``name`` and ``alexander_coeffs`` (lowest
    degree first; space, semicolon or JSON-list separated) into a map from
    canonical polynomial to name.  An optional ``alexander_minexp`` column
    is accepted; it does not affect the canonical form."""
    table: dict[LaurentPoly, str] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or not {"name", "alexander_coeffs"} <= set(reader.fieldnames):
            raise ValueError("match table needs 'name' and 'alexander_coeffs' columns")
        for row in reader:
            coeffs = _parse_int_list(row["alexander_coeffs"])
            minexp = int(row.get("alexander_minexp") or 0)
            poly = normalize_unit(LaurentPoly(coeffs, minexp))
            name = row["name"].strip()
            if poly in table and table[poly] != name:
                table[poly] = f"{table[poly]}/{name}"
            else:
                table[poly] = name
    return table


def _render_json(records: Sequence[CensusRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2, ensure_ascii=False) + "\n"


def _render_csv(records: Sequence[CensusRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.to_csv_row())
    return buf.getvalue()


def _eps_label(eps: Sequence[int]) -> str:
    return "(" + ",".join(str(e) for e in eps) + ")"


def _cell(rec: CensusRecord) -> str:
    if rec.matched_name:
        return rec.matched_name.removeprefix("Δ-compatible with ")
    coeffs = " ".join(map(str, rec.alexander.coeffs))
    return f"[{coeffs}] det {rec.determinant}"


def _render_md(records: Sequence[CensusRecord], max_span: int | None = None) -> str:
    """One table per ``p``: rows are sign vectors, columns are ``q``.  Cells
    beyond the span bound stay blank, non-coprime cells without a record
    show ``--``."""
    by_p: dict[int, list[CensusRecord]] = {}
    for r in records:
        by_p.setdefault(r.params.p, []).append(r)
    lines = []
    for p in sorted(by_p):
        recs = by_p[p]
        qs = sorted({r.params.q for r in recs})
        q_hi = max(qs) if max_span is None else max(max(qs), max_span // (p - 1) + 1)
        cols = list(range(2, q_hi + 1))
        cells = {(r.params.epsilon, r.params.q): _cell(r) for r in recs}
        rows = sorted({r.params.epsilon for r in recs}, key=lambda e: tuple(0 if x == 1 else 1 for x in e))
        lines.append(f"### p = {p}")
        lines.append("")
        lines.append("| ε \\ q | " + " | ".join(map(str, cols)) + " |")
        lines.append("|---" * (len(cols) + 1) + "|")
        for eps in rows:
            out = []
            for q in cols:
                if (eps, q) in cells:
                    out.append(cells[(eps, q)])
                elif max_span is not None and (p - 1) * (q - 1) > max_span:
                    out.append("")
                elif gcd(p, q) != 1:
                    out.append("--")
                else:
                    out.append("")
            lines.append(f"| {_eps_label(eps)} | " + " | ".join(out) + " |")
        lines.append("")
    return "\n".join(lines)


def render_table(records: Sequence[CensusRecord], fmt: str, max_span: int | None = None) -> str:
    if fmt == "json":
        return _render_json(records)
    if fmt == "csv":
        return _render_csv(records)
    if fmt == "md":
        return _render_md(records, max_span)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def emit_table(
    records: Sequence[CensusRecord],
    fmt: str,
    out: str | Path,
    max_span: int | None = None,
) -> Path:
    """Write the rendered table; ``OSError`` propagates for unwritable paths."""
    text = render_table(sorted(records, key=CensusRecord.sort_key), fmt, max_span)
    path = Path(out)
    path.write_text(text, encoding="utf-8")
    return path
