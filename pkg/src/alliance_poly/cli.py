"""Command-line entry point: ``alliance-poly {compute,closed-form,verify}``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input,
3 brute-force cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import closed_forms, verify
from .engine import CapExceeded, alliance_polynomial, default_cap
from .graph import MAX_ORDER, Family, GraphFormatError, generate, parse_edge_list, parse_graph6
from .poly import AlliancePolynomial, degrees, eval_at_one, to_text

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def poly_record(p: AlliancePolynomial) -> dict:
    deg_max, deg_min = degrees(p) if p else (None, None)
    return {
        "order": p.order,
        "max_degree": deg_max,
        "min_degree": deg_min,
        "coeffs": [[e, str(c)] for e, c in p.terms],
        "eval_at_one": str(eval_at_one(p)),
        "polynomial": to_text(p),
    }


def render(p: AlliancePolynomial, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        return json.dumps({**poly_record(p), **(extra or {})}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["exponent", "alliance_index", "coefficient"])
        for e, c in p.terms:
            writer.writerow([e, e - p.order, c])
        return buf.getvalue()
    lines = [to_text(p), f"A(1) = {eval_at_one(p)}"]
    for name, table in (extra or {}).get("table", {}).items():
        if isinstance(table, dict):
            lines.append(f"{name}: " + ", ".join(f"{k}={v}" for k, v in table.items()))
        else:
            lines.append(f"{name}: {table}")
    return "\n".join(lines) + "\n"


def load_graph(args):
    sources = [s for s in (args.family, args.g6, args.edges) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of --family, --g6, --edges")
    try:
        if args.family is not None:
            if args.n is None:
                raise InputError("--family needs --n")
            return generate(args.family, args.n)
        if args.g6 is not None:
            with open(args.g6, "rb") as fh:
                records = [ln for ln in fh if ln.strip()]
            if len(records) != 1:
                raise InputError(f"{args.g6}: expected one graph6 record, found {len(records)}")
            return parse_graph6(records[0])
        text = sys.stdin.read() if args.edges == "-" else open(args.edges).read()
        return parse_edge_list(text)
    except (GraphFormatError, ValueError, OSError) as exc:
        raise InputError(str(exc)) from exc


def resolve_cap(args) -> int:
    if args.cap is None:
        return default_cap()
    if not 0 <= args.cap <= MAX_ORDER:
        raise InputError(f"--cap must lie in 0..{MAX_ORDER}")
    return args.cap


def cmd_compute(args) -> int:
    g = load_graph(args)
    p = alliance_polynomial(g, cap=resolve_cap(args), workers=args.threads)
    sys.stdout.write(render(p, args.format))
    return EXIT_OK


def cmd_closed_form(args) -> int:
    if args.n is None and args.family != "e1":
        raise InputError("--n is required")
    try:
        if args.family == "wheel":
            p = closed_forms.wheel_polynomial(args.n)
            t = closed_forms.wheel_table(args.n)
            extra = {"table": {"xi": t.xi,
                               "a": {str(k): str(v) for k, v in t.a.items()},
                               "b": {str(k): str(v) for k, v in t.b.items()}}}
        elif args.family == "cycle":
            p, extra = closed_forms.cycle_polynomial(args.n), None
        elif args.family == "complete":
            p, extra = closed_forms.complete_polynomial(args.n), None
        else:
            p, extra = closed_forms.e1_polynomial(), None
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    sys.stdout.write(render(p, args.format, extra))
    return EXIT_OK


def cmd_verify(args) -> int:
    what = args.check
    if what == "join":
        reports = [verify.join_suite(args.pairs, args.max_total, args.wheel_max, args.seed)]
    elif what == "lemma":
        reports = [verify.lemma_suite(args.random, args.max_order, args.family_max, args.seed),
                   verify.disjoint_cycles_suite(args.family_max)]
    elif what == "unimodal":
        path = verify.CheckReport("path-unimodality")
        for n, flag in verify.path_unimodality(10).items():
            path.add(f"P_{n}", flag == (2 <= n <= 4), unimodal=flag)
        reports = [verify.check_wheel_unimodality(args.max),
                   verify.injection_suite(args.max), path]
    elif what == "bcoeff":
        if args.max_n > closed_forms.ORACLE_MAX_N:
            raise InputError(f"--max-n must be <= {closed_forms.ORACLE_MAX_N}")
        reports = [verify.bcoeff_suite(args.max_n)]
    else:
        reports = [_characterize(args)]
    out = {"ok": all(r.ok for r in reports), "reports": [r.to_dict() for r in reports]}
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK if out["ok"] else EXIT_FAIL


def _characterize(args):
    n = args.order
    if n < 4:
        raise InputError("--order must be >= 4 (wheel target)")
    if args.g6:
        try:
            corpus = list(verify.iter_corpus(args.g6))
        except (GraphFormatError, OSError) as exc:
            raise InputError(str(exc)) from exc
        target = closed_forms.wheel_polynomial(n)
        col = verify.characterize(corpus, target, cap=resolve_cap(args))
        rep = verify.CheckReport("characterize-corpus")
        matched = set(col.target_matches)
        non_wheels = [i for i, g in corpus if i in matched and not verify.is_wheel_labeling(g)]
        rep.add(f"W_{n}", not non_wheels, matches=[str(i) for i in col.target_matches],
                non_wheels=[str(i) for i in non_wheels], groups=len(col.groups),
                skipped=[str(i) for i, _ in col.skipped])
        return rep
    lo = n if args.from_order is None else args.from_order
    if n > 6 and not args.allow_order_7:
        raise InputError("order 7 sweeps ~2.1M graphs; pass --allow-order-7")
    if n > verify.LABELED_MAX_ORDER or lo < 1:
        raise InputError(f"labelled sweeps support orders 1..{verify.LABELED_MAX_ORDER}")
    return verify.characterization_suite([n], range(lo, n + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alliance-poly",
                                     description="Alliance polynomials of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "text", "csv"], default="json")
        p.add_argument("--cap", type=int, help="brute-force order cap (default $ALLIANCE_CAP or 24)")
        p.add_argument("--threads", type=int, default=1, help="worker processes (0 = auto)")

    p = sub.add_parser("compute", help="brute-force alliance polynomial of one graph")
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--n", type=int)
    p.add_argument("--g6", help="file holding one graph6 record")
    p.add_argument("--edges", help="edge-list file, or - for stdin")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("closed-form", help="closed-form polynomial of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("verify", help="run a verification harness")
    p.add_argument("check", choices=["join", "lemma", "characterize", "unimodal", "bcoeff"])
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--pairs", type=int, default=100)
    p.add_argument("--max-total", type=int, default=12)
    p.add_argument("--wheel-max", type=int, default=12)
    p.add_argument("--random", type=int, default=500)
    p.add_argument("--max-order", type=int, default=10)
    p.add_argument("--family-max", type=int, default=12)
    p.add_argument("--max", type=int, default=24, help="largest even wheel order")
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--order", type=int, default=6, help="wheel order to characterise")
    p.add_argument("--from-order", type=int, help="smallest corpus order in the sweep")
    p.add_argument("--allow-order-7", action="store_true")
    p.add_argument("--g6", nargs="+", help="graph6 corpus files instead of a labelled sweep")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "closed-form" and args.family not in ("wheel", "cycle", "complete", "e1"):
        print(f"error: unsupported family {args.family!r}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
