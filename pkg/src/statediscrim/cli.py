"""Command-line front end.

Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 inequality violated
in a random campaign.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .documents import load_problem, matrix_to_pairs
from .errors import DiscriminationError
from .experiments import SweepMode, SweepSpec, run_random_check, run_sweep, sweep_csv
from .minimum_error import helstrom_min_error
from .pure_vs_uniform import (
    PureVsUniformScenario,
    embed_scenario,
    failure_analytic,
    min_error_analytic,
)
from .unambiguous_bounds import check_half_inequality

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2, 3


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        return load_problem(path)
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot read {path}: {exc}") from None
    except DiscriminationError as exc:
        raise _Failure(EXIT_INVALID, f"{type(exc).__name__}: {exc}") from None


def _emit(report: dict, args, text_lines: list[str]) -> None:
    out = json.dumps(report, indent=2) if args.json else "\n".join(text_lines)
    print(out)
    if getattr(args, "output", None):
        _write(args.output, json.dumps(report, indent=2) + "\n")


def _write(path, text: str) -> None:
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot write {path}: {exc}") from None


def cmd_helstrom(args) -> int:
    p = _load(args.input)
    res = helstrom_min_error(p)
    report = {
        "p_error": res.p_error,
        "lambda_spectrum": res.lambda_spectrum.tolist(),
        "strategy": res.strategy.value,
        "pi1": matrix_to_pairs(res.detection.pi1),
        "pi2": matrix_to_pairs(res.detection.pi2),
    }
    lines = [
        f"p_error   {res.p_error:.17g}",
        f"strategy  {res.strategy.value}",
        "spectrum  " + " ".join(f"{x:.12g}" for x in res.lambda_spectrum),
        "pi1",
        np.array2string(res.detection.pi1, precision=6, suppress_small=True),
        "pi2",
        np.array2string(res.detection.pi2, precision=6, suppress_small=True),
    ]
    _emit(report, args, lines)
    return EXIT_OK


def cmd_bounds(args) -> int:
    p = _load(args.input)
    rep = check_half_inequality(p)
    report = {
        "fidelity": rep.fidelity,
        "q_lower_overall": rep.q_lower_overall,
        "q_lower_branch": rep.q_lower_branch,
        "branch": rep.branch.value,
        "p_error": rep.p_error,
        "half_inequality_margin": rep.half_inequality_margin,
    }
    lines = [f"{k:<24}{v:.17g}" if isinstance(v, float) else f"{k:<24}{v}" for k, v in report.items()]
    _emit(report, args, lines)
    return EXIT_OK


def cmd_filtering(args) -> int:
    try:
        s = PureVsUniformScenario(args.d, args.overlap, args.eta1)
    except ValueError as exc:
        raise _Failure(EXIT_INVALID, str(exc)) from None
    p_e = min_error_analytic(s)
    f = failure_analytic(s)
    residual = abs(p_e - helstrom_min_error(embed_scenario(s)).p_error)
    ratio = f.q_failure / p_e if p_e > 0.0 else math.inf
    report = {
        "d": s.d,
        "parallel_norm": s.parallel_norm,
        "eta1": s.eta1,
        "p_error": p_e,
        "q_failure": f.q_failure,
        "regime": f.regime.value,
        "ratio": "inf" if math.isinf(ratio) else ratio,
        "cross_check_residual": residual,
    }
    lines = [f"{k:<22}{v:.17g}" if isinstance(v, float) else f"{k:<22}{v}" for k, v in report.items()]
    _emit(report, args, lines)
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        if args.mode == "custom":
            if (args.eta1 is None) == (args.overlap is None):
                raise ValueError("custom mode needs exactly one of --eta1 (sweep overlap) or --overlap (sweep eta1)")
            fixed, over = (args.eta1, "overlap") if args.eta1 is not None else (args.overlap, "eta1")
            spec = SweepSpec.for_mode(
                "custom", args.steps, d=args.d, fixed=fixed, sweep_over=over,
                start=args.start, stop=args.stop,
            )
        else:
            spec = SweepSpec.for_mode(args.mode, args.steps, start=args.start, stop=args.stop)
        rows = run_sweep(spec)
    except ValueError as exc:
        raise _Failure(EXIT_INVALID, str(exc)) from None
    text = sweep_csv(rows)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_random_check(args) -> int:
    try:
        rep = run_random_check(args.trials, args.dim_min, args.dim_max, args.seed, pure=args.pure)
    except ValueError as exc:
        raise _Failure(EXIT_INVALID, str(exc)) from None
    report = rep.to_dict()
    lines = [
        f"trials             {rep.trials}",
        f"dims               {rep.dims[0]}..{rep.dims[1]}",
        f"seed               {rep.seed}",
        f"min_margin         {rep.min_margin:.17g}",
        f"violations         {rep.violations}",
        f"branch_violations  {rep.branch_violations}",
    ]
    _emit(report, args, lines)
    if rep.violations or rep.branch_violations:
        print("inequality violated; see worst_case", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="statediscrim",
        description="Minimum-error vs unambiguous discrimination of two quantum states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output_help="also write the JSON report to PATH"):
        p.add_argument("--json", action="store_true", help="machine-readable report on stdout")
        p.add_argument("--output", metavar="PATH", help=output_help)

    p = sub.add_parser("helstrom", help="minimum error probability and optimal detection operators")
    p.add_argument("--input", required=True, metavar="PATH", help="JSON problem document")
    common(p)
    p.set_defaults(func=cmd_helstrom)

    p = sub.add_parser("bounds", help="fidelity bounds on the unambiguous failure probability")
    p.add_argument("--input", required=True, metavar="PATH", help="JSON problem document")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("filtering", help="closed-form pure state vs uniform mixture")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--overlap", type=float, required=True, help="norm of the parallel component")
    p.add_argument("--eta1", type=float, required=True)
    common(p)
    p.set_defaults(func=cmd_filtering)

    p = sub.add_parser("sweep", help="CSV sweep reproducing the figure curves")
    p.add_argument("--mode", choices=[m.value for m in SweepMode], default="fig1")
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--d", type=int, default=3, help="custom mode only")
    p.add_argument("--eta1", type=float, help="custom mode: fix eta1, sweep the overlap")
    p.add_argument("--overlap", type=float, help="custom mode: fix the overlap, sweep eta1")
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=1.0)
    p.add_argument("--output", metavar="PATH", help="CSV destination (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("random-check", help="randomized check of P_E <= Q_L/2")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--dim-min", type=int, default=2)
    p.add_argument("--dim-max", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pure", action="store_true", help="rank-1 states only")
    common(p)
    p.set_defaults(func=cmd_random_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
