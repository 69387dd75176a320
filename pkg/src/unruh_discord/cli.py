"""Command-line front end.

Subcommands:
    sweep    CSV of every correlation measure over an r grid
    point    one evaluation, human-readable plus CSV
    verify   closed-form and ordering checks with PASS/FAIL lines
    figures  sweep CSVs plus rendered PNG figures in a directory

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 numeric failure (the offending r is named on stderr).
"""

from __future__ import annotations

import argparse
import math
import sys
from contextlib import nullcontext
from pathlib import Path

import numpy as np

from .optimizer import OptimizerConfig
from .rindler import Pair, R_MAX, acceleration_to_r
from .sweep import (
    CSV_HEADER,
    SweepConfig,
    SweepNumericError,
    evaluate_point,
    format_float,
    sweep_records,
    write_csv,
)

_ALL_PAIRS = (Pair.AI, Pair.AII, Pair.III)


def _optimizer_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--theta-grid", type=int, default=64,
                        help="coarse grid points for theta in [0, pi] (default 64)")
    parser.add_argument("--phi-grid", type=int, default=32,
                        help="coarse grid points for phi in [0, 2pi) (default 32)")
    parser.add_argument("--refine-tol", type=float, default=1e-8,
                        help="angle tolerance of the refinement stage (default 1e-8)")
    parser.add_argument("--max-refine-iters", type=int, default=200,
                        help="iteration cap per refinement pass (default 200)")


def _optimizer_config(args) -> OptimizerConfig:
    return OptimizerConfig(
        theta_grid=args.theta_grid,
        phi_grid=args.phi_grid,
        refine_tolerance=args.refine_tol,
        max_refine_iters=args.max_refine_iters,
    )


def _pairs(pair_flag: str) -> tuple[Pair, ...]:
    if pair_flag == "ALL":
        return _ALL_PAIRS
    return (Pair(pair_flag),)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruh-discord",
        description=("Correlation measures of the bipartite reductions of a "
                     "maximally entangled Dirac mode shared with a uniformly "
                     "accelerated observer."),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="CSV sweep over the acceleration parameter")
    p_sweep.add_argument("--pair", choices=["AI", "AII", "III", "ALL"], default="ALL")
    p_sweep.add_argument("--r-min", type=float, default=0.0)
    p_sweep.add_argument("--r-max", type=float, default=R_MAX)
    p_sweep.add_argument("--steps", type=int, default=101)
    p_sweep.add_argument("--out", default="-", help="output path, or - for stdout")
    _optimizer_flags(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_point = sub.add_parser("point", help="evaluate a single (pair, r) point")
    p_point.add_argument("--pair", choices=["AI", "AII", "III"], required=True)
    p_point.add_argument("--r", type=float, default=None)
    p_point.add_argument("--omega", type=float, default=None, help="mode frequency")
    p_point.add_argument("--a", type=float, default=None, help="proper acceleration")
    _optimizer_flags(p_point)
    p_point.set_defaults(func=cmd_point)

    p_verify = sub.add_parser("verify", help="run the built-in check suite")
    p_verify.add_argument("--grid-steps", type=int, default=50,
                          help="interior r points for the ordering checks (>= 10)")
    _optimizer_flags(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_fig = sub.add_parser("figures", help="write sweep CSVs and PNG figures")
    p_fig.add_argument("--out-dir", required=True)
    p_fig.add_argument("--steps", type=int, default=101)
    _optimizer_flags(p_fig)
    p_fig.set_defaults(func=cmd_figures)

    return parser


def cmd_sweep(args) -> int:
    try:
        config = SweepConfig(
            pairs=_pairs(args.pair),
            r_min=args.r_min,
            r_max=args.r_max,
            steps=args.steps,
            optimizer=_optimizer_config(args),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        sink = nullcontext(sys.stdout) if args.out == "-" else open(args.out, "w")
    except OSError as exc:
        print(f"error: cannot open output: {exc}", file=sys.stderr)
        return 2
    try:
        with sink as stream:
            write_csv(sweep_records(config), stream)
    except SweepNumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_point(args) -> int:
    has_r = args.r is not None
    has_physical = args.omega is not None or args.a is not None
    if has_r == has_physical or (has_physical and (args.omega is None or args.a is None)):
        print("error: give either --r, or both --omega and --a", file=sys.stderr)
        return 2

    try:
        optimizer = _optimizer_config(args)
        if has_r:
            r = float(args.r)
            origin = ""
        else:
            r = acceleration_to_r(args.omega, args.a).r
            origin = f"  (from omega={args.omega!r}, a={args.a!r})"
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        record = evaluate_point(r, args.pair, optimizer)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"error: numeric failure at r={r!r}: {exc}", file=sys.stderr)
        return 3

    print(f"pair: {record.pair.value}")
    print(f"r: {format_float(record.r)}{origin}")
    for name in ("mutual_information", "classical_correlation", "quantum_discord",
                 "log_negativity", "theta_opt", "phi_opt", "min_conditional_entropy"):
        print(f"{name}: {format_float(getattr(record, name))}")
    print()
    print(CSV_HEADER)
    print(record.csv_row())
    return 0


def cmd_verify(args) -> int:
    from .verify import run_verification

    try:
        config = _optimizer_config(args)
        if args.grid_steps < 10:
            raise ValueError(f"--grid-steps must be at least 10, got {args.grid_steps}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    report = run_verification(grid_steps=args.grid_steps, config=config)
    for line in report.lines():
        print(line)
    return 0 if report.all_hard_passed else 1


def cmd_figures(args) -> int:
    from . import figures
    from .rindler import reduced_state
    from .verify import conditional_entropy_grid

    try:
        optimizer = _optimizer_config(args)
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        if args.steps < 2:
            raise ValueError(f"--steps must be at least 2, got {args.steps}")
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    records_by_pair = {}
    try:
        for pair in _ALL_PAIRS:
            config = SweepConfig(pairs=(pair,), steps=args.steps, optimizer=optimizer)
            records = list(sweep_records(config))
            records_by_pair[pair.value] = records
            with open(out_dir / f"correlations_{pair.value}.csv", "w") as stream:
                write_csv(records, stream)
            figures.correlation_figure(records, out_dir / f"correlations_{pair.value}.png")
    except SweepNumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    figures.comparison_figure(records_by_pair, "quantum_discord",
                              "quantum discord (bits)", out_dir / "discord_comparison.png")
    figures.comparison_figure(records_by_pair, "classical_correlation",
                              "classical correlation (bits)",
                              out_dir / "classical_comparison.png")

    # theta-resolved conditional entropy of the accessible pair
    r_values = np.linspace(0.0, R_MAX, args.steps)
    thetas = np.linspace(0.0, math.pi, 181)
    surface = np.stack([
        conditional_entropy_grid(reduced_state(r, Pair.AI), thetas, np.array([0.0]))[:, 0]
        for r in r_values
    ])
    figures.conditional_entropy_surface(r_values, thetas, surface,
                                        out_dir / "conditional_entropy_AI.png")
    np.savetxt(out_dir / "conditional_entropy_AI.csv",
               np.column_stack([np.repeat(r_values, thetas.size),
                                np.tile(thetas, r_values.size),
                                surface.reshape(-1)]),
               delimiter=",", header="r,theta,conditional_entropy", comments="",
               fmt="%.12g")

    print(f"wrote figures and CSV data to {out_dir}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
