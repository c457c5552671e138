# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
"""
Command-line entry point: `measures`, `sweep`, `dynamics`, `qpd` and `verify` subcommands
"""
import argparse
import shlex
import sys

import numpy as np

from .config import RunConfig, load_config
from .output import STATE_COLUMNS, MOMENT_COLUMNS, MEASURE_COLUMNS, state_record, open_output, write_csv
from .state_spec import parse_state_spec, parse_real, parse_complex, spec_tokens
from .sweep import SweepAxis, SweepSpec, run_sweep
from .. import __version__
from ..core import VACUUM
from ..dynamics import HamiltonianParams, evolve_trajectory
from ..qpd import QpdGrid, GridKind, DegenerateDistribution, qpd_grid
from ..verification import SUITES, VerificationRunner
from ..common import ConfigError
from ..types import Any, Dict, List, Optional, Sequence

USAGE_ERROR = 2
RUNTIME_ERROR = 1


def _shared_options() -> argparse.ArgumentParser:
    """
    Options accepted by every subcommand. They default to None so that the values of the
    configuration file are only overridden by explicit flags.
    """
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", default=None, help="Flat 'key = value' configuration file")
    parent.add_argument("--out", default=None, help="Output CSV path, standard output by default")
    parent.add_argument("--workers", default=None, type=int, help="Size of the sweep worker pool")
    parent.add_argument("--seed", default=None, type=int, help="Seed of the random states of verify")
    parent.add_argument("--samples", default=None, type=int, help="Random states per sampling check")
    parent.add_argument("--verbose", default=None, action="store_const", const=True,
                        help="Print progress on standard error")
    for key in ("tol_num", "tol_phys", "tol_region", "tol_ode", "tol_pd"):
        parent.add_argument(f"--{key.replace('_', '-')}", dest=key, default=None, type=float,
                            help=f"Override of the {key} tolerance")
    parent.add_argument("--tail-tol", dest="tail_tol", default=None, type=float,
                        help="Override of the Fock truncation tolerance")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """
    The argument parser of the `twomode` command
    """
    parser = argparse.ArgumentParser(prog="twomode",
                                     description="Nonclassicality and entanglement of two-mode Gaussian states")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    shared = _shared_options()

    measures = commands.add_parser("measures", parents=[shared],
                                   help="All quantifiers of one state, e.g. 'twin bp=1 T=0.5'")
    measures.add_argument("state", nargs="+", help="Family name followed by key=value parameters")

    sweep = commands.add_parser("sweep", parents=[shared], help="Grid scan of a state family")
    sweep.add_argument("--family", required=True, help="State family, or 'custom' for raw moments")
    sweep.add_argument("--axis", action="append", required=True, type=SweepAxis.parse,
                       help="Swept parameter 'name:min:max:count', repeatable up to 3 times")
    sweep.add_argument("--fixed", action="append", default=[], help="Fixed parameter 'key=value', repeatable")
    sweep.add_argument("--outputs", default="incl1,incl2,ient,incl_global",
                       help="Comma-separated output columns")

    dynamics = commands.add_parser("dynamics", parents=[shared], help="Time evolution of the moments")
    for name in ("g12", "g11", "g22"):
        dynamics.add_argument(f"--{name}", default=0j, type=parse_complex, help=f"Coupling {name}")
    for name in ("gamma1", "gamma2", "nd1"):
        dynamics.add_argument(f"--{name}", default=0.0, type=parse_real, help=f"Model parameter {name}")
    dynamics.add_argument("--nd2", default=None, type=parse_real, help="Reservoir occupation of mode 2, nd1 by default")
    dynamics.add_argument("--t-max", dest="t_max", default=1.0, type=parse_real, help="Final time")
    dynamics.add_argument("--points", default=101, type=int, help="Number of sampled times")
    dynamics.add_argument("--initial", default=None, help="Initial state specification, vacuum by default")

    qpd = commands.add_parser("qpd", parents=[shared], help="s-ordered quasidistribution on a grid")
    qpd.add_argument("state", nargs="+", help="Family name followed by key=value parameters")
    qpd.add_argument("--s", dest="s", default=0.0, type=parse_real, help="Ordering parameter in [-1, 1]")
    qpd.add_argument("--range", dest="grid_range", default="-5:5",
                     help="Range 'min:max' of every axis, written --range=-5:5 for negative bounds")
    qpd.add_argument("--points", default=64, type=int, help="Samples per axis")
    shape = qpd.add_mutually_exclusive_group()
    shape.add_argument("--slice", dest="slice_point", default=None, type=parse_complex,
                       help="Fixed value of alpha2 (the default slice is alpha2 = 0)")
    shape.add_argument("--marginal", default=None, type=int, choices=(1, 2), help="Keep only this mode")
    shape.add_argument("--full", action="store_true", help="Sample the full 4D phase space")

    verify = commands.add_parser("verify", parents=[shared], help="Run the verification suites")
    verify.add_argument("--suite", action="append", default=None, choices=list(SUITES),
                        help="Restrict the run to this suite, repeatable")
    verify.add_argument("--report", default=None, help="Path of the check,deviation,threshold,pass summary")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    overrides = {key: getattr(args, key) for key in
                 ("out", "workers", "seed", "samples", "verbose", "tol_num", "tol_phys", "tol_region",
                  "tol_ode", "tol_pd", "tail_tol")}
    return load_config(args.config, overrides)


def _progress(config: RunConfig, message: str):
    if config.verbose:
        print(f"[twomode] {message}", file=sys.stderr)


def _base_metadata(command: str) -> Dict[str, Any]:
    return {"tool": "twomode", "version": __version__, "command": command}


def cmd_measures(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Write every quantifier, moment and invariant of one state as a single CSV row
    """
    spec = parse_state_spec(args.state)
    record = state_record(spec.moments(), config.tol_region, config.tol_phys)
    metadata = {**_base_metadata("measures"), "state": " ".join(spec_tokens(spec))}
    with open_output(config.out) as stream:
        write_csv(stream, STATE_COLUMNS, [record], metadata)
    return 0


def parse_fixed(assignments: Sequence[str]) -> Dict[str, float]:
    """
    Values of the `--fixed key=value` options
    """
    fixed = {}
    for assignment in assignments:
        if assignment.count("=") != 1:
            raise ConfigError(f"Expected a fixed parameter 'key=value', got '{assignment}'")
        key, value = assignment.split("=")
        fixed[key.strip()] = parse_real(value)
    return fixed


def cmd_sweep(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Write one CSV row per grid point of a family scan
    """
    outputs = tuple(name.strip() for name in args.outputs.split(",") if name.strip())
    spec = SweepSpec(args.family, tuple(args.axis), parse_fixed(args.fixed), outputs)
    _progress(config, f"sweep of {len(spec.grid())} points with {config.workers} workers")
    rows = run_sweep(spec, config.workers, config.tol_region, config.tol_phys)
    with open_output(config.out) as stream:
        write_csv(stream, spec.columns, rows, {**_base_metadata("sweep"), **spec.metadata()})
    return 0


def cmd_dynamics(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Write the moments and quantifiers of the evolved state on a uniform time grid
    """
    if args.points < 2:
        raise ConfigError(f"The time grid needs at least 2 points, got {args.points}")
    params = HamiltonianParams(g12=args.g12, g11=args.g11, g22=args.g22, gamma1=args.gamma1,
                               gamma2=args.gamma2, nd1=args.nd1, nd2=args.nd2, t=args.t_max)
    initial = VACUUM if args.initial is None else parse_state_spec(shlex.split(args.initial)).moments()
    times = np.linspace(0.0, params.t, args.points)
    _progress(config, f"integrating up to t={params.t!r}")
    trajectory = evolve_trajectory(params, times, config.tol_ode, initial)
    rows = []
    for time, moments in zip(times, trajectory):
        row = state_record(moments, config.tol_region, config.tol_phys)
        row["t"] = float(time)
        rows.append(row)
    metadata = {**_base_metadata("dynamics"), "g12": params.g12, "g11": params.g11, "g22": params.g22,
                "gamma1": params.gamma1, "gamma2": params.gamma2, "nd1": params.nd1, "nd2": params.nd2}
    with open_output(config.out) as stream:
        write_csv(stream, ("t",) + MOMENT_COLUMNS + MEASURE_COLUMNS + ("physical",), rows, metadata)
    return 0


def _qpd_grid_spec(args: argparse.Namespace) -> QpdGrid:
    bounds = args.grid_range.split(":")
    if len(bounds) != 2:
        raise ConfigError(f"Expected a range 'min:max', got '{args.grid_range}'")
    lower, upper = (parse_real(bound) for bound in bounds)
    if args.full:
        return QpdGrid(lower, upper, args.points, GridKind.FULL)
    if args.marginal is not None:
        return QpdGrid(lower, upper, args.points, GridKind.MARGINAL, marginal_mode=args.marginal)
    return QpdGrid(lower, upper, args.points, GridKind.SLICE, slice_point=args.slice_point or 0j)


def _qpd_columns(grid: QpdGrid) -> List[str]:
    if grid.kind is GridKind.FULL:
        return ["re1", "im1", "re2", "im2"]
    mode = grid.marginal_mode if grid.kind is GridKind.MARGINAL else 1
    return [f"re{mode}", f"im{mode}"]


def cmd_qpd(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Write the samples of an s-ordered quasidistribution, one row per grid point, with the
    normalization in the header lines
    """
    spec = parse_state_spec(args.state)
    grid = _qpd_grid_spec(args)
    result = qpd_grid(spec.moments(), args.s, grid, config.tol_pd)
    metadata: Dict[str, Any] = {**_base_metadata("qpd"), "state": " ".join(spec_tokens(spec)), "s": args.s,
                                "kind": grid.kind.value}
    if grid.kind is GridKind.SLICE:
        metadata["slice"] = grid.slice_point
    columns = _qpd_columns(grid) + ["value"]
    rows: List[Dict[str, Any]] = []
    if isinstance(result, DegenerateDistribution):
        metadata["degenerate"] = True
        metadata["min_eigenvalue"] = result.min_eigenvalue
    else:
        metadata["normalization"] = result.normalization
        metadata["expected_normalization"] = result.expected_normalization
        mesh = np.meshgrid(*result.axes, indexing="ij")
        coordinates = np.stack([axis.ravel() for axis in mesh], axis=-1)
        for point, value in zip(coordinates, result.values.ravel()):
            row = dict(zip(columns, map(float, point)))
            row["value"] = float(value)
            rows.append(row)
    with open_output(config.out) as stream:
        write_csv(stream, columns, rows, metadata)
    return 0


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Run the verification suites, write one row per check and return the suite exit code
    """
    runner = VerificationRunner(config.thresholds, config.seed, config.samples, config.verbose)
    results = runner.run(args.suite)
    rows = [{"suite": name, "check": check.check, "deviation": check.deviation, "threshold": check.threshold,
             "pass": check.passed} for name, checks in results for check in checks]
    metadata = {**_base_metadata("verify"), "seed": config.seed, "samples": config.samples}
    with open_output(config.out) as stream:
        write_csv(stream, ("suite", "check", "deviation", "threshold", "pass"), rows, metadata)
    if args.report is not None:
        with open_output(args.report) as stream:
            stream.write("check,deviation,threshold,pass\n")
            for _, checks in results:
                for check in checks:
                    stream.write(check.as_row() + "\n")
    return VerificationRunner.exit_code(results)


COMMANDS = {
    "measures": cmd_measures,
    "sweep": cmd_sweep,
    "dynamics": cmd_dynamics,
    "qpd": cmd_qpd,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line.

    Parameters
    ----------
    argv
        Arguments without the program name, sys.argv[1:] when None.

    Returns
    -------
    status
        0 on success, 2 for invalid input, 1 for numerical or I/O failures, 10 + the index
        of the first failing suite for `verify`.
    """
    # argparse itself exits with status 2 on malformed options
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        return COMMANDS[args.command](args, config)
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return USAGE_ERROR
    except (ArithmeticError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return RUNTIME_ERROR
