"""Command-line entry point ``spiral``.

Exit codes: 0 on success, 1 on a usage or input error, 2 when a computed
result fails one of the built-in property checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .alexander import METHODS, alexander
from .braidcore import build_diagram, format_epsilon, make_params
from .bridge import P_SEED, Q_SEED, coloring_bound, seed_arcs
from .census import FORMATS, InvariantViolation, emit_table, enumerate_census, load_match_table
from .invariants import RULES, genus, knot_determinant, obstruct_spiral
from .jones import DEFAULT_CROSSING_CAP, jones_polynomial
from .polynomial import LaurentPoly
from .seifert import seifert_matrix

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2

MOLINARI_SPAN_CAP = 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _params(args):
    try:
        return make_params(args.p, args.q, args.e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _head(params) -> dict:
    return {"p": params.p, "q": params.q, "epsilon": format_epsilon(params.epsilon)}


def cmd_seifert(args) -> int:
    params = _params(args)
    m = seifert_matrix(params)
    _dump({**_head(params), "dimension": m.dimension, "matrix": m.tolist()})
    return EXIT_OK


def cmd_alexander(args) -> int:
    params = _params(args)
    methods = METHODS if args.method == "all" else (args.method,)
    results, skipped = {}, []
    for m in methods:
        if m == "molinari" and params.span > MOLINARI_SPAN_CAP:
            if args.method == "molinari":
                raise UsageError(f"span {params.span} exceeds the transfer-matrix cap {MOLINARI_SPAN_CAP}")
            skipped.append(m)
            continue
        results[m] = alexander(params, m)
    first = next(iter(results.values()))
    agree = {m: r == first for m, r in results.items()}
    if not all(agree.values()):
        _dump({**_head(params), "methods": {m: r.to_json() for m, r in results.items()}})
        raise InvariantViolation(f"{params}: Alexander engines disagree")
    _dump({
        **_head(params),
        "alexander": first.to_json(),
        "text": str(first),
        "span": first.span,
        "second_coeff": first.second,
        "agreement": agree,
        "skipped": skipped,
    })
    return EXIT_OK


def cmd_info(args) -> int:
    params = _params(args)
    delta = alexander(params)
    g = genus(params)
    det = knot_determinant(params, delta)
    if args.json:
        _dump({
            **_head(params),
            "is_knot": params.is_knot(),
            "components": params.components,
            "genus": str(g),
            "determinant": det,
            "alexander": delta.to_json(),
        })
    else:
        kind = "knot" if params.is_knot() else f"{params.components}-component link"
        print(f"{params}  ({kind})")
        print(f"genus        {g}")
        print(f"determinant  {det}")
        print(f"alexander    {delta}")
    return EXIT_OK


def cmd_obstruct(args) -> int:
    try:
        poly = LaurentPoly.from_json(json.loads(args.poly))
        rules = tuple(r for r in RULES if r not in (args.disable or []))
        report = obstruct_spiral(poly, q_hint=args.q, rules=rules)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad polynomial: {exc}") from None
    _dump(report.to_json())
    return EXIT_OK


def cmd_jones(args) -> int:
    params = _params(args)
    try:
        v = jones_polynomial(params, cap=args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _dump({**_head(params), "jones": v.to_json(), "text": str(v)})
    return EXIT_OK


def cmd_bridge(args) -> int:
    params = _params(args)
    diagram = build_diagram(params)
    bq = coloring_bound(diagram, seed_arcs(diagram, Q_SEED))
    bp = coloring_bound(diagram, seed_arcs(diagram, P_SEED))
    found = [b for b in (bq, bp) if b is not None]
    _dump({**_head(params), "bound_q_seed": bq, "bound_p_seed": bp, "min": min(found) if found else None})
    return EXIT_OK


def cmd_census(args) -> int:
    table = None
    if args.match_table:
        try:
            table = load_match_table(args.match_table)
        except (OSError, ValueError) as exc:
            raise UsageError(f"match table: {exc}") from None
    if args.max_span < 1:
        raise UsageError("--max-span must be at least 1")
    records = enumerate_census(
        args.max_span,
        links=args.links,
        distinguish_mirrors=args.distinguish_mirrors,
        with_jones=args.with_jones,
        with_bridge=args.with_bridge,
        match_table=table,
        p=args.p,
        q=args.q,
    )
    try:
        filtered = args.p is not None or args.q is not None
        path = emit_table(records, args.format, args.out, max_span=None if filtered else args.max_span)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    print(f"{len(records)} records -> {path}", file=sys.stderr)
    return EXIT_OK


def _add_pqe(sp):
    sp.add_argument("-p", type=int, required=True, help="number of strands")
    sp.add_argument("-q", type=int, required=True, help="number of braid repetitions")
    sp.add_argument("-e", required=True, metavar="EPS", help='sign vector such as "+-+"')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spiral", description="Invariants of spiral knots and links.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("seifert", help="Seifert matrix as JSON")
    _add_pqe(sp)
    sp.set_defaults(func=cmd_seifert)

    sp = sub.add_parser("alexander", help="Alexander polynomial")
    _add_pqe(sp)
    sp.add_argument("--method", choices=METHODS + ("all",), default="recursive")
    sp.set_defaults(func=cmd_alexander)

    sp = sub.add_parser("info", help="genus, determinant and Alexander polynomial")
    _add_pqe(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("obstruct", help="test whether a polynomial can belong to a spiral knot")
    sp.add_argument("--poly", required=True, help='JSON such as {"minexp":0,"coeffs":[2,-3,2]}')
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--disable", action="append", choices=RULES, help="skip a rule (repeatable)")
    sp.set_defaults(func=cmd_obstruct)

    sp = sub.add_parser("jones", help="Jones polynomial (doubled-exponent JSON)")
    _add_pqe(sp)
    sp.add_argument("--cap", type=int, default=DEFAULT_CROSSING_CAP, help="maximum crossings for the state sum")
    sp.set_defaults(func=cmd_jones)

    sp = sub.add_parser("bridge", help="coloring upper bounds on bridge number")
    _add_pqe(sp)
    sp.set_defaults(func=cmd_bridge)

    sp = sub.add_parser("census", help="enumerate and tabulate")
    sp.add_argument("--max-span", type=int, required=True)
    sp.add_argument("--links", action="store_true")
    sp.add_argument("--distinguish-mirrors", action="store_true")
    sp.add_argument("--with-jones", action="store_true")
    sp.add_argument("--with-bridge", action="store_true")
    sp.add_argument("--match-table", metavar="FILE.csv")
    sp.add_argument("--p", type=int, default=None, help="restrict to one strand count")
    sp.add_argument("--q", type=int, default=None, help="restrict to one repetition count")
    sp.add_argument("--format", choices=FORMATS, required=True)
    sp.add_argument("--out", required=True, metavar="PATH")
    sp.set_defaults(func=cmd_census)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"spiral: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"spiral: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
