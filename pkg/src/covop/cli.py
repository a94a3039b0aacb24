"""Command-line surface: emits CSV matrices, densities, sweeps, and reports.

Every subcommand takes a family spec (the mini-language of
:func:`covop.structure.parse_family_spec`), is deterministic for a
fixed ``--seed`` (default 0, mirrored by the environment variable
``COVOP_SEED``), and writes 17-significant-digit CSV so emitted
matrices round-trip losslessly through the ``dense`` family.

Exit codes: 0 on success, 1 on numeric failures (the error name is
printed to stderr), 2 on usage errors.
"""

import argparse
import math
import os
import sys

import numpy as np

from . import io as _io
from .borel import TWO_PI
from .core import FiniteVector
from .diagnostics import (
    extensibility_report,
    first_moment_norm,
    multiplier_bounds,
    norm_report,
    observable_norm_estimate,
    render_report_csv,
    render_report_text,
    sup_entry,
)
from .errors import CovopError
from .gom import density, gom_matrix
from .moments import cyclic_moment, exp_transform, moment_matrix
from .reconstruct import cesaro_density, reconstruction_sweep
from .structure import parse_family_spec, realize


def _default_seed():
    env = os.environ.get("COVOP_SEED", "").strip()
    return int(env) if env else 0


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _int_list(text):
    return [int(tok) for tok in str(text).split(",") if tok.strip()]


DEFAULT_PAIR = FiniteVector({0: 1 / math.sqrt(2), 1: 1 / math.sqrt(2)})


def _vector_arg(path):
    return _io.read_vector_csv(path) if path else DEFAULT_PAIR


def _add_common(sub, window=True, out=True):
    sub.add_argument("--family", required=True, help="family spec, e.g. 'ones' or 'gram vectors=t.csv'")
    if window:
        sub.add_argument("--window", type=int, required=True, metavar="N")
    if out:
        sub.add_argument("--out", default=None, help="output file (default: stdout)")
    sub.add_argument("--seed", type=int, default=None, help="seed for randomized search (default: COVOP_SEED or 0)")


def build_parser():
    parser = argparse.ArgumentParser(prog="covop", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("matrix", help="emit the window realization of a family")
    _add_common(p)

    p = subs.add_parser("measure", help="emit the measure matrix of a Borel set")
    _add_common(p)
    p.add_argument("--set", dest="arcs", required=True, help="arc set, e.g. '0:1.5708,4:5.25', 'full', 'empty'")

    p = subs.add_parser("density", help="emit density samples for a vector pair")
    _add_common(p, window=False)
    p.add_argument("--phi", required=True, help="vector CSV for the first argument")
    p.add_argument("--psi", required=True, help="vector CSV for the second argument")
    p.add_argument("--cesaro", type=int, default=None, metavar="M", help="emit the Cesaro mean of order M instead")
    p.add_argument("--grid", type=int, default=720, help="sample count (default 720)")

    p = subs.add_parser("moment", help="emit a polynomial or cyclic moment matrix")
    _add_common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--s", type=int, default=None, help="polynomial moment order")
    group.add_argument("--cyclic", type=int, default=None, help="cyclic moment index")

    p = subs.add_parser("norm", help="print a norm of the family on a window")
    _add_common(p, out=False)
    p.add_argument("--norm", required=True, choices=("1inf", "m", "o", "f"))
    p.add_argument("--grid", type=int, default=256, help="arc grid for the observable norm")

    p = subs.add_parser("reconstruct", help="emit a Cesaro reconstruction-error sweep")
    _add_common(p)
    p.add_argument("--set", dest="arcs", required=True)
    p.add_argument("--M-sweep", dest="m_sweep", required=True, help="comma-separated Cesaro orders")
    p.add_argument("--phi", default=None, help="vector CSV (default: equal weights on indices 0 and 1)")
    p.add_argument("--psi", default=None)

    p = subs.add_parser("report", help="emit an extensibility report across a window sweep")
    _add_common(p, window=False, out=False)
    p.add_argument("--sweep", required=True, help="comma-separated increasing window radii")
    p.add_argument("--csv", default=None, help="also write the CSV rendering to this file")

    p = subs.add_parser("transform", help="emit the exponential transform at a point of the disk")
    _add_common(p)
    p.add_argument("--z", required=True, help="point as re,im")

    return parser


def _run(args):
    seed = args.seed if args.seed is not None else _default_seed()
    family = parse_family_spec(args.family)

    if args.command == "matrix":
        _emit(_io.format_matrix_csv(realize(family, args.window)), args.out)
    elif args.command == "measure":
        x = _io.parse_arcs(args.arcs)
        _emit(_io.format_matrix_csv(gom_matrix(family, x, args.window)), args.out)
    elif args.command == "density":
        phi = _io.read_vector_csv(args.phi)
        psi = _io.read_vector_csv(args.psi)
        if args.cesaro is not None:
            poly = cesaro_density(family, phi, psi, args.cesaro)
        else:
            poly = density(family, phi, psi)
        thetas = np.arange(args.grid) * (TWO_PI / args.grid)
        values = poly(thetas)
        _emit(_io.format_density_csv(zip(thetas, values)), args.out)
    elif args.command == "moment":
        if args.s is not None:
            wm = moment_matrix(family, args.s, args.window)
        else:
            wm = cyclic_moment(family, args.cyclic, args.window)
        _emit(_io.format_matrix_csv(wm), args.out)
    elif args.command == "norm":
        if args.norm == "1inf":
            print(f"{sup_entry(family, args.window):.17g}")
        elif args.norm == "f":
            print(f"{first_moment_norm(family, args.window):.17g}")
        elif args.norm == "m":
            lower, upper = multiplier_bounds(family, args.window, seed=seed)
            print(f"{lower:.17g},{upper:.17g}")
        else:
            value, witness = observable_norm_estimate(
                family, args.window, grid_size=args.grid, seed=seed
            )
            print(f"{value:.17g},{_io.format_arcs(witness)}")
    elif args.command == "reconstruct":
        x = _io.parse_arcs(args.arcs)
        rows = reconstruction_sweep(
            family,
            x,
            args.window,
            _int_list(args.m_sweep),
            _vector_arg(args.phi),
            _vector_arg(args.psi),
        )
        _emit(_io.format_sweep_csv(rows), args.out)
    elif args.command == "report":
        report = extensibility_report(family, _int_list(args.sweep), seed=seed)
        sys.stdout.write(render_report_text(report))
        if args.csv:
            with open(args.csv, "w", encoding="utf-8", newline="") as fh:
                fh.write(render_report_csv(report))
    elif args.command == "transform":
        re_part, _, im_part = args.z.partition(",")
        z = complex(float(re_part), float(im_part) if im_part else 0.0)
        _emit(_io.format_matrix_csv(exp_transform(family, z, args.window)), args.out)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except CovopError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
