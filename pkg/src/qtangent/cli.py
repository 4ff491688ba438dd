"""Command-line front end.

    qtangent series tanq --order 8
    qtangent continuants --max-n 4
    qtangent extract --depth 6
    qtangent verify --format json --out report.json

Exit codes: 0 all checks pass, 1 an identity failed, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cfrac import extract_cf_coeffs, minus_z_tan
from .continuants import continuant_pairs, partial_denominators
from .exact import render, render_rf
from .qseries import cos_q, sin_q, tan_q
from .verify import SuiteConfig, VerifyReport, all_passed, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SERIES = {"sinq": sin_q, "cosq": cos_q, "tanq": tan_q}


def report_to_dict(rep: VerifyReport, timing: bool = True) -> dict:
    return {
        "identity": rep.identity_id,
        "params": dict(rep.parameters),
        "passed": rep.passed,
        "witness": rep.witness,
        "elapsed_ms": round(rep.elapsed * 1000, 3) if timing else 0,
    }


def dumps_reports(items: list[dict]) -> str:
    return json.dumps(items, indent=2, ensure_ascii=False) + "\n"


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def format_text(reports: list[VerifyReport]) -> str:
    lines = []
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        line = f"{status} {rep.identity_id} {_params_text(rep.parameters)}".rstrip()
        if rep.witness is not None:
            line += f"  witness: {rep.witness}"
        lines.append(line)
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def _zpoly_text(p) -> str:
    if not p:
        return "0"
    parts = []
    for m, c in enumerate(p):
        if c.is_zero():
            continue
        coeff = render(c)
        zp = "" if m == 0 else ("z" if m == 1 else f"z^{m}")
        if not zp:
            parts.append(f"({coeff})")
        else:
            parts.append(f"({coeff})*{zp}")
    return " + ".join(parts)


def cmd_series(args) -> int:
    if args.order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    series = SERIES[args.kind](args.order)
    rows = [(m, c) for m, c in enumerate(series.coeffs) if not c.is_zero()]
    if args.format == "json":
        sys.stdout.write(dumps_reports([{"power": m, "coeff": render_rf(c)} for m, c in rows]))
    else:
        for m, c in rows:
            print(f"z^{m}: {render_rf(c)}")
    return EXIT_OK


def cmd_continuants(args) -> int:
    if args.max_n < -1:
        print("error: --max-n must be >= -1", file=sys.stderr)
        return EXIT_USAGE
    pairs = continuant_pairs(args.max_n)
    if args.format == "json":
        items = [
            {"n": p.n, "A": [render(c) for c in p.A], "B": [render(c) for c in p.B]} for p in pairs
        ]
        sys.stdout.write(dumps_reports(items))
    else:
        for p in pairs:
            print(f"A_{p.n} = {_zpoly_text(p.A)}")
            print(f"B_{p.n} = {_zpoly_text(p.B)}")
    return EXIT_OK


def cmd_extract(args) -> int:
    depth = args.depth
    if depth < 1:
        print("error: --depth must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    order = args.order if args.order is not None else 2 * depth + 2
    if order < 2 * depth + 2:
        print(f"error: --order {order} < 2*depth + 2 = {2 * depth + 2}", file=sys.stderr)
        return EXIT_USAGE
    extracted = extract_cf_coeffs(minus_z_tan(order), depth)
    expected = partial_denominators(depth, args.corrupt_b)
    ok = True
    rows = []
    for i, (got, want) in enumerate(zip(extracted, expected), start=1):
        match = got == want
        ok &= match
        rows.append({"n": i, "extracted": render(got), "formula": render(want), "match": match})
    if args.format == "json":
        sys.stdout.write(dumps_reports(rows))
    else:
        for r in rows:
            tag = "MATCH" if r["match"] else "MISMATCH"
            print(f"b_{r['n']} = {r['extracted']}    formula: {r['formula']}    {tag}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        config = SuiteConfig(
            max_n=args.max_n,
            max_k=args.max_k,
            max_N=args.max_N,
            max_x=args.max_x,
            max_depth=args.depth,
            series_order=args.order if args.order is not None else max(26, 2 * args.depth + 2),
            corrupt_b=args.corrupt_b,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    reports = run_suite(config, jobs=args.jobs)
    if args.format == "json":
        text = dumps_reports([report_to_dict(r, timing=not args.no_timing) for r in reports])
    else:
        text = format_text(reports)
    if args.out:
        out = Path(args.out)
        out.write_text(text, encoding="utf-8")
        failed = [r for r in reports if not r.passed]
        if failed:
            dump = "".join(
                f"{r.identity_id} {_params_text(r.parameters)}\n{r.witness_full or r.witness}\n\n" for r in failed
            )
            out.with_name(out.name + ".witness.txt").write_text(dump, encoding="utf-8")
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} checks passed; report written to {out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK if all_passed(reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtangent",
        description="Exact q-series and continued-fraction checks for the q-tangent function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("series", help="print sin_q, cos_q or tan_q coefficients")
    p.add_argument("kind", choices=sorted(SERIES))
    p.add_argument("--order", type=int, default=8, help="truncation order in z")
    add_format(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("continuants", help="print the continuant polynomials A_n, B_n")
    p.add_argument("--max-n", type=int, default=4)
    add_format(p)
    p.set_defaults(func=cmd_continuants)

    p = sub.add_parser("extract", help="recover partial denominators from -z tan_q")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--order", type=int, default=None, help="series order (default 2*depth+2)")
    p.add_argument("--corrupt-b", type=int, default=None, metavar="N", help=argparse.SUPPRESS)
    add_format(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-k", type=int, default=10)
    p.add_argument("--max-N", type=int, default=8)
    p.add_argument("--max-x", type=int, default=8)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--order", type=int, default=None, help="series order for extraction (default 26)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for byte-stable output")
    p.add_argument("--corrupt-b", type=int, default=None, metavar="N", help="perturb b_N (negative control)")
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
