"""Command-line interface.

Subcommands::

    curveflow run <scenario.json | preset-name> [--out DIR] [--threads K] [--tol X]
    curveflow run-reduced --r R1,R2,... --z Z12,... --t-end T --output-dt DT
                          [--tol X] [--out DIR]
    curveflow validate-forces --ri RI --rj RJ --z Z --m-list M1,M2,...
    curveflow list-presets

Exit codes: 0 success, 2 validation/configuration error, 3 numerical
failure (singular kernel, step underflow, non-finite derivative).  The
environment variable ``CURVEFLOW_OUT`` overrides the default output
directory.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .errors import (
    DegenerateSegment,
    DomainError,
    NonFiniteRHS,
    ParseError,
    SingularEvaluation,
    StepUnderflow,
    ValidationError,
)
from .scenario import (
    PRESET_NOTES,
    PRESETS,
    load_scenario,
    run,
    run_reduced,
    validate_forces,
)

_CONFIG_ERRORS = (ParseError, ValidationError, DomainError, ValueError)
_NUMERICAL_ERRORS = (SingularEvaluation, StepUnderflow, NonFiniteRHS, DegenerateSegment)


def _float_list(text: str) -> list:
    try:
        return [float(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def _int_list(text: str) -> list:
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curveflow",
        description="Interacting closed space curves under curvature/binormal "
                    "flow with Biot-Savart coupling.",
    )
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario file or preset")
    p_run.add_argument("scenario", help="path to a scenario JSON file or a preset name")
    p_run.add_argument("--out", default=None, help="output directory")
    p_run.add_argument("--threads", type=int, default=1,
                       help="worker threads for the force kernel (default 1)")
    p_run.add_argument("--tol", type=float, default=None,
                       help="override the scenario's integrator tolerance")
    p_run.set_defaults(func=_cmd_run)

    p_red = sub.add_parser("run-reduced",
                           help="run the concentric-circle ODE reduction")
    p_red.add_argument("--n", type=int, default=None,
                       help="number of circles (inferred from --r when omitted)")
    p_red.add_argument("--r", type=_float_list, required=True,
                       help="comma-separated initial radii, e.g. 2,1")
    p_red.add_argument("--z", type=_float_list, default=[],
                       help="comma-separated consecutive gaps z12,z23,...")
    p_red.add_argument("--t-end", type=float, required=True)
    p_red.add_argument("--output-dt", type=float, required=True)
    p_red.add_argument("--tol", type=float, default=1e-3)
    p_red.add_argument("--out", default=None, help="output directory")
    p_red.set_defaults(func=_cmd_run_reduced)

    p_val = sub.add_parser("validate-forces",
                           help="polygonal force vs closed form convergence study")
    p_val.add_argument("--ri", type=float, required=True,
                       help="radius of the evaluation circle")
    p_val.add_argument("--rj", type=float, required=True,
                       help="radius of the source circle")
    p_val.add_argument("--z", type=float, required=True,
                       help="height of the evaluation circle above the source")
    p_val.add_argument("--m-list", type=_int_list, default=[100, 200, 400],
                       help="node counts, e.g. 100,200,400")
    p_val.set_defaults(func=_cmd_validate_forces)

    p_list = sub.add_parser("list-presets", help="list built-in scenarios")
    p_list.set_defaults(func=_cmd_list_presets)
    return parser


def _cmd_run(args) -> int:
    scenario = load_scenario(args.scenario)
    result = run(scenario, out_dir=args.out, threads=args.threads, tol=args.tol)
    print(f"wrote {len(result.frame_files)} frames to {result.out_dir} "
          f"({result.accepted} accepted / {result.rejected} rejected steps)")
    return 0


def _cmd_run_reduced(args) -> int:
    if args.n is not None and args.n != len(args.r):
        raise ValidationError(f"--n {args.n} does not match {len(args.r)} radii")
    if len(args.z) != len(args.r) - 1:
        raise ValidationError(
            f"{len(args.r)} circles need {len(args.r) - 1} gaps, got {len(args.z)}"
        )
    path = run_reduced(args.r, args.z, args.t_end, args.output_dt,
                       tol=args.tol, out_dir=args.out)
    print(f"wrote {path}")
    return 0


def _cmd_validate_forces(args) -> int:
    report = validate_forces(args.ri, args.rj, args.z, args.m_list)
    print(report.format_table())
    return 0


def _cmd_list_presets(args) -> int:
    for name in sorted(PRESETS):
        print(f"{name:18s} {PRESET_NOTES.get(name, '')}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(message)s")
    try:
        return args.func(args)
    except _NUMERICAL_ERRORS as exc:
        t_last = getattr(exc, "t_last", None)
        suffix = f" (last good time t = {t_last:.6g})" if t_last is not None else ""
        print(f"numerical failure: {exc}{suffix}", file=sys.stderr)
        return 3
    except _CONFIG_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
