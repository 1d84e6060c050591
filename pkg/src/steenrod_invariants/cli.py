"""Command-line interface.

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Sequence

from . import report as rep
from .action import coaction, generator_total_square, sq_n, sq_via_coaction
from .checks import run_checks
from .errors import ParseError, ResourceLimitError, SemanticError
from .invariants import DEFAULT_MAX_AMBIENT_DIM, invariant_subspace, scan
from .limit import compare_with_closed_form
from .parser import parse_rpoly
from .ring import Bidegree

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

ENV_MAX_DIM = "STEENROD_INV_MAX_DIM"
ENV_MAX_DEGREE = "STEENROD_INV_MAX_DEGREE"
DEFAULT_MAX_DEGREE = 2000


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise SystemExit(f"error: {name} must be an integer, got {value!r}")


class _Limits:
    def __init__(self, args):
        self.max_dim = args.max_dim if args.max_dim is not None else _env_int(ENV_MAX_DIM, DEFAULT_MAX_AMBIENT_DIM)
        self.max_degree = _env_int(ENV_MAX_DEGREE, DEFAULT_MAX_DEGREE)

    def check_degree(self, d: int) -> None:
        if d > self.max_degree:
            raise ResourceLimitError(f"internal degree {d} exceeds cap {self.max_degree} (set {ENV_MAX_DEGREE})")


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _format_report(r) -> str:
    lines = [f"bidegree {r.bidegree}: ambient {r.ambient_dim}, invariant {r.invariant_dim}"]
    lines += [f"  {p}" for p in r.invariant_basis]
    return "\n".join(lines) + "\n"


def cmd_invariants(args) -> int:
    limits = _Limits(args)
    limits.check_degree(args.d)
    start = time.perf_counter()
    r = invariant_subspace(Bidegree(args.sigma, args.d), max_ambient_dim=limits.max_dim)
    if args.json:
        _write(args, rep.dumps(rep.finish(rep.invariant_report_dict(r), _ms(start))))
    else:
        _write(args, _format_report(r))
    return EXIT_OK


def cmd_scan(args) -> int:
    limits = _Limits(args)
    limits.check_degree(args.d_max)
    start = time.perf_counter()
    config = {"max_dim": limits.max_dim}
    cache = rep.ReportCache(args.cache) if args.cache else None
    bidegrees = [
        (s, d) for s in range(args.sigma_min, args.sigma_max + 1) for d in range(args.d_min, args.d_max + 1)
    ]
    items: dict[tuple[int, int], dict] = {}
    if cache:
        for s, d in bidegrees:
            hit = cache.get(cache.key(s, d, config))
            if hit is not None:
                items[(s, d)] = hit
    missing = [bd for bd in bidegrees if bd not in items]
    if missing:
        jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
        s_lo = min(s for s, _ in missing)
        s_hi = max(s for s, _ in missing)
        d_lo = min(d for _, d in missing)
        d_hi = max(d for _, d in missing)
        wanted = set(missing)
        for r in scan(s_hi, d_hi, sigma_min=s_lo, d_min=d_lo, jobs=jobs, max_ambient_dim=limits.max_dim):
            bd = tuple(r.bidegree)
            if bd in wanted:
                items[bd] = rep.scan_item(r)
                if cache:
                    cache.put(cache.key(bd[0], bd[1], config), items[bd])
    if cache:
        cache.save()
    rows = [items[bd] for bd in bidegrees]
    if args.format == "csv":
        _write(args, rep.reports_csv(rows))
    elif args.format == "json":
        payload = rep.header("scan")
        payload["window"] = {
            "sigma_min": args.sigma_min,
            "sigma_max": args.sigma_max,
            "d_min": args.d_min,
            "d_max": args.d_max,
        }
        payload["reports"] = rows
        _write(args, rep.dumps(rep.finish(payload, _ms(start))))
    else:
        out = []
        for row in rows:
            if row["invariant_dim"] or args.all:
                bd = row["bidegree"]
                out.append(f"({bd['sigma']},{bd['d']})\tambient {row['ambient_dim']}\tinvariant {row['invariant_dim']}")
        _write(args, "\n".join(out) + ("\n" if out else ""))
    return EXIT_OK


def cmd_act(args) -> int:
    p = parse_rpoly(args.elem)
    for bd in p.degrees():
        _Limits(args).check_degree(bd.d)
    result = sq_via_coaction(args.op, p) if args.via == "coaction" else sq_n(args.op, p)
    _write(args, f"{result}\n")
    return EXIT_OK


def cmd_coact(args) -> int:
    start = time.perf_counter()
    p = parse_rpoly(args.elem)
    for bd in p.degrees():
        _Limits(args).check_degree(bd.d)
    value = coaction(p)
    if args.json:
        payload = rep.header("coact")
        payload["result"] = {"element": str(p), "terms": str(value).split(" + ") if len(value) else []}
        _write(args, rep.dumps(rep.finish(payload, _ms(start))))
    else:
        _write(args, f"{value}\n")
    return EXIT_OK


def cmd_limit_compare(args) -> int:
    start = time.perf_counter()
    verdict = compare_with_closed_form(Bidegree(args.sigma, args.d))
    if args.json:
        _write(args, rep.dumps(rep.finish(rep.verdict_dict(verdict), _ms(start))))
    else:
        _write(args, f"{verdict.bidegree}: {verdict}\n")
    return EXIT_OK if verdict.iso else EXIT_FAILED


def cmd_verify_paper(args) -> int:
    start = time.perf_counter()
    results = run_checks()
    failed = [r for r in results if not r.ok]
    if args.json:
        payload = rep.header("verify-paper")
        payload["checks"] = [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]
        payload["verdict"] = "pass" if not failed else "fail"
        _write(args, rep.dumps(rep.finish(payload, _ms(start))))
    else:
        lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + (f"  [{r.detail}]" if r.detail else "") for r in results]
        lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
        _write(args, "\n".join(lines) + "\n")
    return EXIT_FAILED if failed else EXIT_OK


def action_graph(t_max: int) -> str:
    """Graphviz DOT text: nodes h_ts (t <= t_max), one arrow per nonzero Sq^(2^k)."""
    lines = ["digraph steenrod_action {", "  rankdir=LR;"]
    for t in range(1, t_max + 1):
        for s in range(t):
            lines.append(f'  "h[{t},{s}]";')
    for t in range(1, t_max + 1):
        for s in range(t):
            for n, (tt, ss) in generator_total_square(t, s):
                if n and n & (n - 1) == 0:
                    k = n.bit_length() - 1
                    lines.append(f'  "h[{t},{s}]" -> "h[{tt},{ss}]" [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> int:
    _write(args, action_graph(args.t_max))
    return EXIT_OK


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="steenrod-inv", description=__doc__.splitlines()[0])
    parser.add_argument("--max-dim", type=_nonneg, default=None, help=f"ambient dimension cap (env {ENV_MAX_DIM})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariant subspace in one bidegree")
    p.add_argument("--sigma", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("scan", help="invariant subspaces over a window of bidegrees")
    p.add_argument("--sigma-max", type=_nonneg, required=True)
    p.add_argument("--d-max", type=_nonneg, required=True)
    p.add_argument("--sigma-min", type=_nonneg, default=0)
    p.add_argument("--d-min", type=_nonneg, default=0)
    p.add_argument("--jobs", type=_nonneg, default=0, help="worker processes (default: all cores)")
    p.add_argument("--cache", help="JSON file memoizing per-bidegree reports")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--all", action="store_true", help="list zero-dimensional bidegrees too")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("act", help="apply Sq^n to an element")
    p.add_argument("--op", type=_nonneg, required=True, help="n in Sq^n")
    p.add_argument("--elem", required=True)
    p.add_argument("--via", choices=["cartan", "coaction"], default="cartan")
    p.add_argument("--out")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("coact", help="expand the A_*-coaction of an element")
    p.add_argument("--elem", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_coact)

    p = sub.add_parser("limit-compare", help="compare the inverse limit with R in one bidegree")
    p.add_argument("--sigma", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_limit_compare)

    p = sub.add_parser("verify-paper", help="run the built-in suite of published statements")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("graph", help="export the generator action graph as DOT")
    p.add_argument("--t-max", type=_nonneg, default=5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, SemanticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except OverflowError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
