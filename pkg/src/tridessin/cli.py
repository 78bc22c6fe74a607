"""Command-line front end.

Subcommands:

    analyze    p0 p1 p2         reduced triple, invariants, dessin stats
    verify     p0 p1 p2         full brute-force structure check (JSON report)
    survey     --max-n N        one row per reduced triple up to n = N
    export-dot p0 p1 p2         write the bicolored graph as a DOT file

Exit codes: 0 success / all checks passed, 1 a verification check failed,
2 usage or invalid-triple error, 3 closure size limit exceeded, 4 I/O
failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from dataclasses import dataclass, fields
from pathlib import Path

from .dessin import export_dot, stats
from .errors import InvalidTripleError, SizeLimitExceeded
from .groups import DEFAULT_LIMIT, verify_theorem
from .triples import Triple, enumerate_triples, predicted_orders, reduce

__all__ = ["SurveyRow", "main", "main_entry"]


@dataclass(frozen=True)
class SurveyRow:
    p0: int
    p1: int
    p2: int
    n: int
    alpha: int
    order_G: int
    order_N: int
    exponent_N: int
    d2: int
    faces: int
    genus: int
    structure: str
    verified: bool


SURVEY_FIELDS = [f.name for f in fields(SurveyRow)]


def _format_cycle_type(lengths: tuple[int, ...]) -> str:
    """Multiset of cycle lengths as '10 5^2 2^5'."""
    counts = Counter(lengths)
    return " ".join(
        f"{length}^{mult}" if mult > 1 else str(length)
        for length, mult in sorted(counts.items(), reverse=True)
    )


def cmd_analyze(args: argparse.Namespace) -> int:
    t = reduce(args.p0, args.p1, args.p2)
    order_n, order_g = predicted_orders(t)
    ds = stats(t)
    s0_type, s1_type, face_type = ds.passport
    print(f"triple: {t}")
    print(f"n: {t.n}")
    print(f"alpha: {t.alpha}")
    print(f"predicted order of N (n^2/alpha): {order_n}")
    print(f"predicted order of G (3n^2/alpha): {order_g}")
    print(f"black vertices: {ds.black_vertices}")
    print(f"white vertices: {ds.white_vertices}")
    print(f"edges: {ds.edges}")
    print(f"faces: {ds.faces}")
    print(f"euler characteristic: {ds.euler_characteristic}")
    print(f"genus: {ds.genus}")
    print(
        "passport: sigma0 = {} | sigma1 = {} | sigma0*sigma1 = {}".format(
            _format_cycle_type(s0_type),
            _format_cycle_type(s1_type),
            _format_cycle_type(face_type),
        )
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    t = reduce(args.p0, args.p1, args.p2)
    report = verify_theorem(t, limit=args.limit)
    print(report.to_json())
    return 0 if report.all_pass else 1


def _survey_rows(max_n: int, brute_max: int, limit: int) -> list[SurveyRow]:
    rows = []
    for t in enumerate_triples(max_n):
        ds = stats(t)
        if t.n <= brute_max:
            report = verify_theorem(t, limit=limit)
            row = SurveyRow(
                p0=t.p0,
                p1=t.p1,
                p2=t.p2,
                n=t.n,
                alpha=t.alpha,
                order_G=report.order_G,
                order_N=report.order_N,
                exponent_N=report.exponent_N,
                d2=report.invariant_factors_N[1],
                faces=ds.faces,
                genus=ds.genus,
                structure=report.structure_string,
                verified=report.all_pass,
            )
        else:
            order_n, order_g = predicted_orders(t)
            d1, d2 = t.n, t.n // t.alpha
            row = SurveyRow(
                p0=t.p0,
                p1=t.p1,
                p2=t.p2,
                n=t.n,
                alpha=t.alpha,
                order_G=order_g,
                order_N=order_n,
                exponent_N=d1,
                d2=d2,
                faces=ds.faces,
                genus=ds.genus,
                structure=f"(C{d1} x C{d2}) : C3",
                verified=False,
            )
        rows.append(row)
    return rows


def cmd_survey(args: argparse.Namespace) -> int:
    if args.max_n < 3:
        print(f"error: --max-n must be at least 3, got {args.max_n}", file=sys.stderr)
        return 2
    if args.brute_force_max < 0:
        print("error: --brute-force-max must be nonnegative", file=sys.stderr)
        return 2
    rows = _survey_rows(args.max_n, args.brute_force_max, args.limit)

    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(SURVEY_FIELDS)
        for row in rows:
            writer.writerow(
                [
                    row.p0, row.p1, row.p2, row.n, row.alpha,
                    row.order_G, row.order_N, row.exponent_N, row.d2,
                    row.faces, row.genus, row.structure,
                    "true" if row.verified else "false",
                ]
            )
    else:
        payload = [
            {name: getattr(row, name) for name in SURVEY_FIELDS} for row in rows
        ]
        print(json.dumps(payload, indent=2))

    if args.plot_dir is not None:
        from .plots import save_survey_figures

        for path in save_survey_figures(rows, Path(args.plot_dir)):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    t = reduce(args.p0, args.p1, args.p2)
    text = export_dot(t)
    out = Path(args.out) if args.out else Path(f"dessin_{t.p0}_{t.p1}_{t.p2}.dot")
    out.write_text(text, encoding="utf-8")
    print(f"wrote {out} ({2 * t.n} nodes, {3 * t.n} edges)")
    return 0


def _add_triple_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("p0", type=int)
    sub.add_argument("p1", type=int)
    sub.add_argument("p2", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tridessin",
        description="Dessins on rational triangular billiards surfaces and their monodromy groups.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_analyze = subparsers.add_parser(
        "analyze", help="invariants and dessin statistics for one triple"
    )
    _add_triple_args(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = subparsers.add_parser(
        "verify", help="brute-force structure verification (JSON report)"
    )
    _add_triple_args(p_verify)
    p_verify.add_argument(
        "--limit", type=int, default=DEFAULT_LIMIT,
        help="abort closure past this many elements (default %(default)s)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_survey = subparsers.add_parser(
        "survey", help="tabulate every reduced triple with n <= N"
    )
    p_survey.add_argument("--max-n", type=int, required=True)
    p_survey.add_argument("--format", choices=("csv", "json"), default="csv")
    p_survey.add_argument(
        "--brute-force-max", type=int, default=30,
        help="run brute-force verification only for n up to this bound (default %(default)s)",
    )
    p_survey.add_argument(
        "--limit", type=int, default=DEFAULT_LIMIT,
        help="closure element limit for verified rows (default %(default)s)",
    )
    p_survey.add_argument(
        "--plot-dir", default=None,
        help="also render summary figures (PNG) into this directory",
    )
    p_survey.set_defaults(func=cmd_survey)

    p_export = subparsers.add_parser(
        "export-dot", help="write the bicolored edge graph in DOT format"
    )
    _add_triple_args(p_export)
    p_export.add_argument(
        "--out", default=None,
        help="output path (default dessin_P0_P1_P2.dot)",
    )
    p_export.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidTripleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def main_entry() -> None:
    sys.exit(main())
