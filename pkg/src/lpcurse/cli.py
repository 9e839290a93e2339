"""Command-line entry point: ``lpcurse <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 resource cap exceeded.
Errors are reported as a single ``error: <kind>: <message>`` line on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import List, Optional, Sequence

import numpy as np

from . import analytic, certifier, discrepancy, pointsets
from .errors import ConvergenceError, DomainError, ResourceError

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def _exponent(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _fmt(v) -> str:
    """Shortest round-trip representation for CSV/JSON outputs."""
    return repr(float(v))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lpcurse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("constants", help="curse constants C_p and C~_p")
    s.add_argument("--p", type=_float_list, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")

    s = sub.add_parser("figure", help="curve data for plotting constants against p")
    s.add_argument("--curve", default="cp,cptilde")
    s.add_argument("--p-min", type=float, default=1.001)
    s.add_argument("--p-max", type=float, default=50.0)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--out", default="-")

    s = sub.add_parser("gen", help="generate a point set")
    s.add_argument("--kind", choices=("random", "grid", "centered-grid", "halton"), required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--m", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", default="-")

    s = sub.add_parser("disc", help="discrepancy of a point/rule file")
    s.add_argument("--points", required=True)
    s.add_argument("--p", type=_exponent, required=True)
    s.add_argument("--method", choices=("exact", "cellwise", "mc"), default="exact")
    s.add_argument("--samples", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--nodes", type=int, default=discrepancy.DEFAULT_NODES)
    s.add_argument("--cap", type=int, default=discrepancy.DEFAULT_CAP)
    s.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("reflect", help="map every coordinate x to 1 - x")
    s.add_argument("--points", required=True)
    s.add_argument("--out", default="-")

    s = sub.add_parser("certify", help="certified worst-case error lower bound for a rule")
    s.add_argument("--rule", required=True)
    s.add_argument("--p", type=float, required=True)
    s.add_argument("--method", choices=("decomposition", "spline", "best"), default="best")
    s.add_argument("--mode", choices=certifier.MODES, default="sharp")
    s.add_argument("--format", choices=("text", "json"), default="text")

    s = sub.add_parser("bound", help="lower/upper bounds on the inverse of discrepancy")
    s.add_argument("--p", type=float, default=None)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--eps", type=float, required=True)
    s.add_argument("--method", choices=("cp", "cptilde", "l2-known", "star-known"), default="cp")
    return parser


def _emit(text: str, out: str, stdout) -> None:
    if out == "-":
        stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _csv(rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_constants(args, stdout):
    rows = []
    for p in args.p:
        pair = analytic.holder_conjugate(p)
        rows.append((p, analytic.decomposition_constants(pair).c_p,
                     analytic.spline_constants(pair).c_tilde))
    if args.format == "json":
        stdout.write(json.dumps([{"p": p, "C_p": c, "C_tilde_p": ct} for p, c, ct in rows]) + "\n")
    else:
        stdout.write(_csv([("p", "C_p", "C_tilde_p")] + [tuple(map(_fmt, r)) for r in rows]))


def cmd_figure(args, stdout):
    curves = [c.strip() for c in args.curve.split(",") if c.strip()]
    for c in curves:
        if c not in ("cp", "cptilde"):
            raise UsageError(f"unknown curve {c!r}; expected cp or cptilde")
    if args.samples < 1:
        raise DomainError(f"--samples must be positive, got {args.samples}")
    if not 1.0 < args.p_min <= args.p_max < math.inf:
        raise DomainError(f"need 1 < p-min <= p-max < inf, got [{args.p_min}, {args.p_max}]")
    ps = np.geomspace(args.p_min, args.p_max, args.samples)
    rows = [("p",) + tuple(curves)]
    for p in ps:
        pair = analytic.holder_conjugate(p)
        rows.append((_fmt(p),) + tuple(_fmt(analytic.curse_constant(pair, c)) for c in curves))
    _emit(_csv(rows), args.out, stdout)


def cmd_gen(args, stdout):
    if args.kind in ("grid", "centered-grid"):
        if args.m is None:
            raise UsageError("--m is required for grid kinds")
        ps = pointsets.gen_grid(args.d, args.m, centered=args.kind == "centered-grid")
    else:
        if args.n is None:
            raise UsageError("--n is required for random and halton kinds")
        if args.kind == "random":
            ps = pointsets.gen_random(args.d, args.n, args.seed)
        else:
            ps = pointsets.gen_halton(args.d, args.n)
    _emit(pointsets.format_rule(ps, weighted=False), args.out, stdout)


def cmd_disc(args, stdout):
    rule = pointsets.read_rule(args.points)
    if math.isinf(args.p):
        if args.method != "exact":
            raise DomainError("p=inf is supported by the exact method only")
    elif args.p < 1.0:
        raise DomainError(f"p must be >= 1, got {args.p}")
    if args.samples < 2 or args.nodes < 1 or args.cap < 1:
        raise DomainError("--samples >= 2, --nodes >= 1 and --cap >= 1 are required")
    est = discrepancy.estimate_discrepancy(rule, args.p, args.method, samples=args.samples,
                                  seed=args.seed, nodes=args.nodes, cap=args.cap)
    if args.format == "json":
        stdout.write(json.dumps({"value": est.value, "p": _fmt(est.p) if math.isinf(est.p) else est.p,
                                 "method": est.method, "uncertainty": est.uncertainty}) + "\n")
    else:
        stdout.write(f"value: {est.value:.10g}\nuncertainty: {est.uncertainty:.10g}\n"
                     f"method: {est.method}\np: {est.p:g}\n")


def cmd_reflect(args, stdout):
    rule, weighted = pointsets.read_rule(args.points, with_flag=True)
    out = discrepancy.reflect_rule(rule)
    _emit(pointsets.format_rule(out, weighted=weighted), args.out, stdout)


def cmd_certify(args, stdout):
    pair = analytic.holder_conjugate(args.p)
    rule = pointsets.read_rule(args.rule)
    cert = certifier.certify(rule, pair, args.method, args.mode)
    stdout.write(cert.to_json() + "\n" if args.format == "json" else cert.to_text())


def cmd_bound(args, stdout):
    if args.method in ("cp", "cptilde"):
        if args.p is None:
            raise UsageError("--p is required for methods cp and cptilde")
        pair = analytic.holder_conjugate(args.p)
        n = analytic.inverse_lower_bound(pair, args.d, args.eps, args.method)
        stdout.write(f"lower_bound: {n}\n")
    else:
        kind = "l2" if args.method == "l2-known" else "star"
        lower, upper = analytic.known_inverse_bounds(kind, args.d, args.eps)
        low = "none" if lower is None else f"{lower:.10g}"
        stdout.write(f"lower_bound: {low}\nupper_bound: {upper:.10g}\n")


COMMANDS = {
    "constants": cmd_constants,
    "figure": cmd_figure,
    "gen": cmd_gen,
    "disc": cmd_disc,
    "reflect": cmd_reflect,
    "certify": cmd_certify,
    "bound": cmd_bound,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args, stdout)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        stderr.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    except ResourceError as exc:
        stderr.write(f"error: resource: {exc}\n")
        return EXIT_RESOURCE
    except (DomainError, ConvergenceError, OverflowError) as exc:
        stderr.write(f"error: domain: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        stderr.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
