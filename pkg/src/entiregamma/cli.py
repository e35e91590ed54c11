"""Command-line interface.

Subcommands:
    eval    evaluate one function at one point (text or JSON)
    grid    sample functions over a range into a CSV file
    zeros   scan a range for sign changes and refine each root
    verify  run the self-check suites (fast or slow tier)
    figure  emit the data (and rendering) for either figure panel

Exit codes: 0 success, 1 verification failure, 2 pole/domain error,
64 usage error, 73 output file not writable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, core, entire, grids
from .errors import DomainError, PoleError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 64
EXIT_CANTCREAT = 73


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 64, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="entiregamma", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evaluate a function at a point")
    p_eval.add_argument("--fn", required=True,
                        help="one of: " + ", ".join(grids.FUNCTION_IDS) + "; family(a0,a1,...) inlines g")
    p_eval.add_argument("--z", required=True, type=float)
    p_eval.add_argument("--g", default=None,
                        help="comma-separated polynomial coefficients g(z) for --fn family")
    p_eval.add_argument("--format", choices=("text", "json"), default="text")

    p_grid = sub.add_parser("grid", help="sample functions over a range into CSV")
    p_grid.add_argument("--fn", required=True, help="comma-separated function ids")
    p_grid.add_argument("--from", dest="lo", required=True, type=float)
    p_grid.add_argument("--to", dest="hi", required=True, type=float)
    p_grid.add_argument("--points", required=True, type=int)
    p_grid.add_argument("--out", required=True)

    p_zeros = sub.add_parser("zeros", help="scan for zeros and refine them")
    p_zeros.add_argument("--fn", required=True, help="one of: " + ", ".join(sorted(analysis.EVALUATORS)))
    p_zeros.add_argument("--from", dest="lo", required=True, type=float)
    p_zeros.add_argument("--to", dest="hi", required=True, type=float)
    p_zeros.add_argument("--step", required=True, type=float)
    p_zeros.add_argument("--normalized", action="store_true",
                         help="scan k/gamma instead of k (large arguments)")

    p_verify = sub.add_parser("verify", help="run the self-check suites")
    p_verify.add_argument("--tier", choices=("fast", "slow"), default="fast")

    p_fig = sub.add_parser("figure", help="emit figure panel data (CSV + PNG)")
    p_fig.add_argument("--panel", choices=("left", "right"), required=True)
    p_fig.add_argument("--out", required=True, help="CSV path; the PNG lands next to it")
    p_fig.add_argument("--no-render", action="store_true", help="skip the PNG")

    return parser


def _eval_path(fid: str, z: float) -> str:
    if fid in ("k", "kprime", "hadamard", "q") or fid.startswith("family"):
        kind = core.classify(z).kind
        return {core.PoleKind.REGULAR: "direct",
                core.PoleKind.NEAR_POLE: "nearpole",
                core.PoleKind.AT_POLE: "limit"}[kind]
    return "direct"


def _cmd_eval(args) -> int:
    coeffs = [] if not args.g else [float(p) for p in args.g.split(",") if p.strip()]
    try:
        fn = grids.resolve_function(args.fn, coeffs)
        value = fn(args.z)
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        payload = {"function": args.fn, "z": args.z, "value": value,
                   "path": _eval_path(args.fn, args.z)}
        print(json.dumps(payload))
    else:
        print("%.17g" % value)
    return EXIT_OK


def _cmd_grid(args) -> int:
    fids = tuple(f.strip() for f in args.fn.split(",") if f.strip())
    try:
        spec = grids.GridSpec(function_ids=fids, lo=args.lo, hi=args.hi,
                              points=args.points, output_path=args.out)
        for fid in fids:
            grids.resolve_function(fid)  # fail fast on unknown ids
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        grids.write_grid_csv(spec)
    except OSError as exc:
        print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return EXIT_CANTCREAT
    return EXIT_OK


def _cmd_zeros(args) -> int:
    fid = "normalized_k" if args.normalized else args.fn
    try:
        report = analysis.scan_zeros(fid, args.lo, args.hi, args.step)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not report.roots:
        print(f"no zeros found for {report.function_id} in [{args.lo:g}, {args.hi:g}]")
        return EXIT_OK
    print(f"{len(report.roots)} zero(s) of {report.function_id} in [{args.lo:g}, {args.hi:g}]:")
    for r in report.roots:
        print("  root = %.17g  residual = %.3e  bracket = [%.17g, %.17g]  iterations = %d"
              % (r.root, r.residual, r.bracket.lo, r.bracket.hi, r.iterations))
    return EXIT_OK


def _cmd_verify(args) -> int:
    from . import verify  # imports the oracle (numba); keep it off the other paths

    results, ok = verify.run_verify(args.tier)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.name:<{width}}  {status}  worst {r.worst:.3e} (bound {r.bound:.1e})"
        if r.detail:
            line += f"  [{r.detail}]"
        print(line)
    print(f"verify[{args.tier}]: {'all suites passed' if ok else 'FAILURES detected'}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_figure(args) -> int:
    try:
        spec = grids.figure_spec(args.panel, args.out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        grids.write_grid_csv(spec)
    except OSError as exc:
        print(f"error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return EXIT_CANTCREAT
    if not args.no_render:
        from . import plotting

        png = args.out[:-4] + ".png" if args.out.endswith(".csv") else args.out + ".png"
        try:
            plotting.render_panel(args.panel, list(grids.sample_grid(spec)),
                                  spec.function_ids, png)
        except OSError as exc:
            print(f"error: cannot write {png!r}: {exc}", file=sys.stderr)
            return EXIT_CANTCREAT
        print(f"wrote {args.out} and {png}")
    else:
        print(f"wrote {args.out}")
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "grid": _cmd_grid,
    "zeros": _cmd_zeros,
    "verify": _cmd_verify,
    "figure": _cmd_figure,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
