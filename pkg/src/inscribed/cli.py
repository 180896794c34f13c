"""Command-line front end.

    inscribed eval p-contain --r 0.5
    inscribed table p-contain --r-min 0 --r-max 1 --steps 11 --out p.csv
    inscribed simulate triangle --r 0.5 --trials 1000000 --seed 42
    inscribed verify --suite all --json

Exit codes: 0 success, 1 failed verification, 2 usage or range error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import closed_forms, dilog, montecarlo
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """17 significant digits, enough to round-trip any double."""
    return f"{x:.17g}"


def _parse_tol(items: Sequence[str]) -> Dict[str, float]:
    out: Dict[str, float] = {}
    for item in items:
        suite, sep, value = item.rpartition("=")
        key = suite if sep else "*"
        if key != "*" and key not in SUITES:
            raise UsageError(f"--tol: unknown suite {key!r}")
        try:
            out[key] = float(value)
        except ValueError:
            raise UsageError(f"--tol: not a number: {value!r}") from None
    return out


def _parse_grid(values: Sequence[str]) -> List[float]:
    out = []
    for v in values:
        for part in v.split(","):
            if part.strip():
                out.append(float(part))
    return out


# -- commands -------------------------------------------------------------------


def cmd_eval(args: argparse.Namespace) -> int:
    target = args.target
    if target == "three-circles":
        if args.r is not None or args.x is not None:
            raise UsageError("three-circles takes no argument")
        value = closed_forms.three_circle_probability()
    elif target == "li2":
        if args.x is None:
            raise UsageError("li2 needs --x")
        value = dilog.li2(args.x)
    else:
        if args.r is None:
            raise UsageError(f"{target} needs --r")
        fn = closed_forms.p_contain if target == "p-contain" else closed_forms.chord_cdf
        value = fn(args.r)
    print(fmt(value))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    if not 0.0 <= args.r_min <= args.r_max <= 1.0:
        raise UsageError("need 0 <= r-min <= r-max <= 1")
    if args.steps < 2:
        raise UsageError("steps must be >= 2")
    fn = closed_forms.p_contain if args.what == "p-contain" else closed_forms.chord_cdf
    lines = ["r,value"]
    for r in np.linspace(args.r_min, args.r_max, args.steps):
        r = float(r)
        lines.append(f"{fmt(r)},{fmt(fn(r))}")
    text = "\n".join(lines) + "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    return EXIT_OK


def _record(est: montecarlo.McEstimate, closed: float) -> str:
    rec = {
        "experiment": est.experiment,
        "params": est.params,
        "trials": est.trials,
        "seed": est.seed,
        "p_hat": est.p_hat,
        "std_err": est.std_err,
        "closed_form": closed,
        "z_score": est.z_score(closed),
    }
    if "acceptance_rate" in est.diagnostics:
        rec["acceptance_rate"] = est.diagnostics["acceptance_rate"]
    return json.dumps(rec)


def cmd_simulate(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise UsageError("trials must be >= 1")
    if args.workers is not None and args.workers < 1:
        raise UsageError("workers must be >= 1")
    if args.experiment == "triangle":
        radii = _parse_grid(args.r or [])
        if len(radii) != 1:
            raise UsageError("triangle needs exactly one --r")
        r = radii[0]
        est = montecarlo.simulate_triangle(r, args.trials, args.seed, args.workers)
        print(_record(est, closed_forms.p_contain(r)))
    elif args.experiment == "chords":
        grid = _parse_grid(args.r) if args.r else [0.3, 0.6, 0.9]
        if any(not 0.0 <= r <= 1.0 for r in grid):
            raise UsageError("chord radii must lie in [0, 1]")
        for est in montecarlo.simulate_chords(grid, args.trials, args.seed, args.workers):
            print(_record(est, closed_forms.chord_cdf(est.params["r"])))
    else:
        if args.r:
            raise UsageError("three-circles takes no --r")
        p = closed_forms.three_circle_probability()
        for est in montecarlo.simulate_three_circles(args.trials, args.seed, args.workers):
            print(_record(est, p))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(
        args.suite,
        _parse_tol(args.tol),
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
    )
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        width = max(len(c.name) for c in report.checks)
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            print(
                f"{status}  {c.name:<{width}}  expected={fmt(c.expected)}  "
                f"actual={fmt(c.actual)}  tol={c.tolerance:.3g}"
            )
        n_fail = sum(not c.passed for c in report.checks)
        print(f"{len(report.checks) - n_fail}/{len(report.checks)} checks passed")
    return EXIT_OK if report.overall_pass else EXIT_FAIL


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inscribed",
        description="Inscribed-triangle containment probability and its cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a closed form")
    p.add_argument("target", choices=["p-contain", "li2", "chord-cdf", "three-circles"])
    p.add_argument("--r", type=float)
    p.add_argument("--x", type=float)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="write an r,value CSV table")
    p.add_argument("what", choices=["p-contain", "chord-cdf"])
    p.add_argument("--r-min", type=float, default=0.0)
    p.add_argument("--r-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_table)

    def add_mc_flags(p: argparse.ArgumentParser, trials: int) -> None:
        p.add_argument("--trials", type=int, default=trials)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=None, help="default: all cores")

    p = sub.add_parser("simulate", help="run a Monte Carlo experiment, one JSON line per estimate")
    p.add_argument("experiment", choices=["triangle", "chords", "three-circles"])
    p.add_argument(
        "--r",
        action="append",
        help="distance for triangle; radii (repeatable or comma-separated) for chords",
    )
    add_mc_flags(p, 10**6)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run the cross-verification suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument(
        "--tol",
        action="append",
        default=[],
        metavar="[SUITE=]VALUE",
        help="replace every tolerance in SUITE (or in all suites) by VALUE",
    )
    p.add_argument("--json", action="store_true")
    add_mc_flags(p, 10**6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"inscribed {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
