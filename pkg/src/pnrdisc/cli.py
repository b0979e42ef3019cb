"""Command-line front end.

Amplitudes are given as mean photon numbers (``--alpha-sq``). Every
subcommand prints a table to stdout, or writes it to ``--output``, as CSV or
JSON. Numbers carry 12 significant digits.

Exit status: 0 on success, 2 on invalid arguments, 1 on computational failure.
"""
import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from .bounds import Alphabet, helstrom, idp_inconclusive, intermediate_bound
from .mc import OUTCOMES, STATES, simulate
from .optimizer import OptimizationError, optimize_displacement
from .quantum_core import DomainError
from .receiver import NoConclusiveResults, ReceiverParams, rates, rates_direct
from .sweeps import FIGURES, SweepKind, SweepSpec, SweepSpecError, figure_spec, run_sweep

SIG_DIGITS = 12
EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _fmt(value):
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), f".{SIG_DIGITS}g")
    return str(value)


def _json_value(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    x = float(_fmt(value))
    return x if math.isfinite(x) else None


def render(columns, rows, fmt):
    """Serialize ``rows`` (sequences aligned with ``columns``) as CSV or JSON text."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        return buf.getvalue()
    doc = {"columns": list(columns), "rows": [[_json_value(v) for v in row] for row in rows]}
    return json.dumps(doc) + "\n"


def _emit(columns, rows, args):
    text = render(columns, rows, args.format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dict_rows(rows):
    columns = list(rows[0]) if rows else []
    return columns, [[r[c] for c in columns] for r in rows]


# argument types --------------------------------------------------------------

def _count(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _positive_int(text):
    value = _count(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _finite(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _mean_photon_number(text):
    value = _finite(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"mean photon number must be >= 0, got {text!r}")
    return value


def _probability(text):
    value = _finite(text)
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {text!r}")
    return value


def _seed(text):
    value = _count(text)
    if value >= 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits, got {text!r}")
    return value


# subcommands -----------------------------------------------------------------

def cmd_bounds(args):
    a = Alphabet.from_mean_photon_number(args.alpha_sq, args.p1)
    sigma = a.sigma
    base = [args.alpha_sq, a.p1, sigma, helstrom(a), idp_inconclusive(a)]
    columns = ["alpha_sq", "p1", "sigma", "helstrom", "idp_inconclusive"]
    if a.p1 != 0.5:
        # the intermediate bound is only available for equal priors
        return columns, [base]
    columns += ["p_inc", "intermediate_bound"]
    grid = np.linspace(0.0, sigma, args.points) if sigma < 1 else np.zeros(1)
    return columns, [base + [float(p), float(intermediate_bound(p, sigma))] for p in grid]


def cmd_receiver(args):
    if args.p1 != 0.5 and not args.direct:
        raise UsageError("--p1: general priors require --direct (closed forms assume p1 = 0.5)")
    a = Alphabet.from_mean_photon_number(args.alpha_sq, args.p1)
    params = ReceiverParams(args.beta, args.m)
    direct = rates_direct(a.alpha, params, a.p1, a.p2)
    columns = ["alpha_sq", "beta", "m", "p1"]
    row = [args.alpha_sq, args.beta, args.m, a.p1]
    if a.p1 == 0.5:
        closed = rates(a.alpha, params)
        columns += ["p_error", "p_inc"]
        row += [closed.p_error, closed.p_inconclusive]
    columns += ["p_error_direct", "p_inc_direct"]
    row += [direct.p_error, direct.p_inconclusive]
    return columns, [row]


def cmd_optimize(args):
    if args.alpha_sq <= 0:
        raise UsageError("--alpha-sq: must be > 0 for optimization")
    columns = ["alpha_sq", "m", "beta_opt", "p_error", "p_inc", "matched_bound", "gap"]
    rows = []
    for m in args.m:
        r = optimize_displacement(math.sqrt(args.alpha_sq), m)
        rows.append([args.alpha_sq, m, r.beta_opt, r.rates.p_error,
                     r.rates.p_inconclusive, r.matched_bound, r.gap])
    return columns, rows


def cmd_mc(args):
    a = Alphabet.from_mean_photon_number(args.alpha_sq, args.p1)
    params = ReceiverParams(args.beta, args.m)
    tally = simulate(a, params, args.trials, args.seed, workers=args.workers)
    columns = ["alpha_sq", "beta", "m", "p1", "n_trials", "seed"]
    row = [args.alpha_sq, args.beta, args.m, a.p1, tally.n_trials, tally.seed]
    for i, s in enumerate(STATES):
        for j, o in enumerate(OUTCOMES):
            columns.append(f"count_{s}_{o.value}")
            row.append(int(tally.counts[i, j]))
    columns += ["p_error", "stderr_error", "p_inc", "stderr_inc"]
    er = tally.empirical_rates
    row += [er.p_error, tally.stderr_error, er.p_inconclusive, tally.stderr_inc]
    if a.p1 == 0.5:
        closed = rates(a.alpha, params)
        columns += ["p_error_closed", "p_inc_closed"]
        row += [closed.p_error, closed.p_inconclusive]
    return columns, [row]


def cmd_sweep(args):
    kwargs = dict(kind=SweepKind(args.kind), m_values=tuple(args.m))
    if args.alpha_sq_range is not None:
        kwargs["alpha_sq_range"] = tuple(args.alpha_sq_range)
    if args.beta_range is not None:
        kwargs["beta_range"] = tuple(args.beta_range)
    if args.fixed_alpha_sq is not None:
        kwargs["fixed_alpha_sq"] = args.fixed_alpha_sq
    if args.log_points is not None:
        kwargs["alpha_sq_log_points"] = args.log_points
    return _dict_rows(run_sweep(SweepSpec(**kwargs)))


def cmd_figures(args):
    which = sorted(FIGURES) if "all" in args.which else args.which
    if len(which) > 1 and not args.output_dir:
        raise UsageError("--which: several figures need --output-dir")
    for w in which:
        columns, rows = _dict_rows(run_sweep(figure_spec(w)))
        if args.output_dir:
            out = Path(args.output_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"fig{w}.{args.format}").write_text(
                render(columns, rows, args.format), encoding="utf-8")
        else:
            _emit(columns, rows, args)
    return None


def build_parser():
    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("--format", choices=("csv", "json"), default="csv")
    io_opts.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="pnrdisc",
        description="Displacement + photon-number-resolving receiver for BPSK coherent states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[io_opts], help="Helstrom, IDP and intermediate bounds")
    p.add_argument("--alpha-sq", type=_mean_photon_number, required=True)
    p.add_argument("--p1", type=_probability, default=0.5)
    p.add_argument("--points", type=_positive_int, default=21,
                   help="samples of p_inc over [0, sigma] for the intermediate bound")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("receiver", parents=[io_opts], help="error and inconclusive rates")
    p.add_argument("--alpha-sq", type=_mean_photon_number, required=True)
    p.add_argument("--beta", type=_finite, required=True)
    p.add_argument("--m", type=_count, required=True)
    p.add_argument("--direct", action="store_true", help="allow general priors via --p1")
    p.add_argument("--p1", type=_probability, default=0.5)
    p.set_defaults(func=cmd_receiver)

    p = sub.add_parser("optimize", parents=[io_opts], help="optimal displacement")
    p.add_argument("--alpha-sq", type=_mean_photon_number, required=True)
    p.add_argument("--m", type=_count, nargs="+", required=True)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("mc", parents=[io_opts], help="Monte Carlo simulation")
    p.add_argument("--alpha-sq", type=_mean_photon_number, required=True)
    p.add_argument("--beta", type=_finite, required=True)
    p.add_argument("--m", type=_count, required=True)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--p1", type=_probability, default=0.5)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("sweep", parents=[io_opts], help="custom sweep")
    p.add_argument("--kind", choices=[k.value for k in SweepKind], required=True)
    p.add_argument("--m", type=_count, nargs="+", default=[0, 1, 2, 3, 4])
    p.add_argument("--alpha-sq-range", type=_finite, nargs=3, metavar=("START", "STOP", "STEP"))
    p.add_argument("--beta-range", type=_finite, nargs=3, metavar=("START", "STOP", "STEP"))
    p.add_argument("--fixed-alpha-sq", type=_mean_photon_number)
    p.add_argument("--log-points", type=_positive_int)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figures", parents=[io_opts], help="data behind the figure panels")
    p.add_argument("--which", nargs="+", choices=sorted(FIGURES) + ["all"], required=True)
    p.add_argument("--output-dir", help="write fig<panel>.<format> files here")
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
        if result is not None:
            _emit(*result, args)
    except (UsageError, SweepSpecError, DomainError) as exc:
        print(f"pnrdisc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoConclusiveResults, OptimizationError, ArithmeticError) as exc:
        print(f"pnrdisc {args.command}: computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
