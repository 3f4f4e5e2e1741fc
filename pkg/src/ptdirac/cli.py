"""Command line: inspect solutions, apply symmetries, emit dispersion tables.

Exit codes: 0 success, 1 verification failure, 2 argument or domain error,
3 I/O failure.  The environment variable PT_DIRAC_TOL overrides the default
tolerance of 1e-12.  All randomized commands print the effective seed, so
failures are replayable.
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import verify
from .clifford import Representation
from .kinematics import (
    MassNotZero,
    NonPhysicalMomentum,
    Species,
    ZeroMomentum,
    dispersion_table,
)
from .observables import MasslessSpecies, expectation_report
from .spinors import (
    NormalizationContext,
    PlaneWaveSpec,
    TranscendentDivision,
    amplitude,
    normalization_factor,
    solution_residual,
)
from .symmetries import DiscreteKind, apply_boost, apply_discrete

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

DEFAULT_TOL = 1e-12
DEFAULT_SEED = 42
DEFAULT_TRIALS = 1000
DEFAULT_PRECISION = 9

_SPECIES = {"bradyon": Species.BRADYON, "pt": Species.PSEUDOTACHYON,
            "pseudotachyon": Species.PSEUDOTACHYON, "luxon": Species.LUXON}
_SIGNS = {"+": 1, "-": -1, "+1": 1, "-1": -1}
_REPS = {"standard": Representation.STANDARD, "weyl": Representation.WEYL}


def _fmt(x: float, precision: int) -> str:
    return f"{float(x) + 0.0:.{precision}g}"


def _fmt_complex(z: complex, precision: int) -> str:
    re = _fmt(z.real, precision)
    im = _fmt(abs(z.imag), precision)
    sign = "-" if z.imag < 0 else "+"
    return f"{re}{sign}{im}i"


def _three_floats(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated values, got {text!r}")
    try:
        x, y, z = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return (x, y, z)


def _precision(text: str) -> int:
    value = int(text)
    if not 3 <= value <= 17:
        raise argparse.ArgumentTypeError(f"precision must be in [3, 17], got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive value, got {text}")
    return value


def _default_tol() -> float:
    raw = os.environ.get("PT_DIRAC_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        tol = -1.0
    if tol <= 0:
        print(f"error: PT_DIRAC_TOL must be a positive number, got {raw!r}",
              file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return tol


def _add_spec_arguments(sub: argparse.ArgumentParser):
    sub.add_argument("--species", required=True, choices=sorted(_SPECIES))
    sub.add_argument("--sign", default="+", choices=sorted(_SIGNS))
    sub.add_argument("--momentum", required=True, type=_three_floats,
                     metavar="PX,PY,PZ")
    sub.add_argument("--mass", required=True, type=float)
    sub.add_argument("--helicity", default="+1", choices=sorted(_SIGNS))
    sub.add_argument("--rep", default="standard", choices=sorted(_REPS))


def _spec_from_args(args) -> PlaneWaveSpec:
    return PlaneWaveSpec(
        species=_SPECIES[args.species],
        energy_sign=_SIGNS[args.sign],
        momentum=args.momentum,
        mass=args.mass,
        helicity=_SIGNS[args.helicity],
        rep=_REPS[args.rep],
    )


def build_parser(default_tol: float = DEFAULT_TOL) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptdirac",
        description="Plane-wave mechanics of spin-1/2 particles with negative "
                    "mass squared, side by side with the ordinary Dirac theory.")
    subs = parser.add_subparsers(dest="command", required=True)

    disp = subs.add_parser("dispersion", help="emit the energy-speed table as CSV")
    disp.add_argument("--mass", required=True, type=float)
    disp.add_argument("--eps-min", type=float, default=0.0)
    disp.add_argument("--eps-max", type=float, required=True)
    disp.add_argument("--steps", type=int, required=True)
    disp.add_argument("--out", default="-", help="output path, '-' for stdout")
    disp.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)
    disp.set_defaults(func=cmd_dispersion)

    spin = subs.add_parser("spinor", help="print one plane-wave amplitude")
    _add_spec_arguments(spin)
    spin.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)
    spin.add_argument("--volume", type=_positive_float, default=1.0)
    spin.set_defaults(func=cmd_spinor)

    exp = subs.add_parser("expect", help="print plane-wave expectation values")
    _add_spec_arguments(exp)
    exp.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)
    exp.set_defaults(func=cmd_expect)

    tr = subs.add_parser("transform", help="apply a discrete symmetry or a boost")
    _add_spec_arguments(tr)
    tr.add_argument("--op", required=True, choices=["P", "C", "T", "I", "boost"])
    tr.add_argument("--rapidity", type=float, default=None)
    tr.add_argument("--axis", type=_three_floats, default=(0.0, 0.0, 1.0),
                    metavar="NX,NY,NZ")
    tr.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)
    tr.add_argument("--tol", type=_positive_float, default=default_tol)
    tr.set_defaults(func=cmd_transform)

    ver = subs.add_parser("verify", help="run every invariant suite")
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    ver.add_argument("--tol", type=_positive_float, default=default_tol)
    ver.set_defaults(func=cmd_verify)
    return parser


def cmd_dispersion(args) -> int:
    rows = dispersion_table(args.mass, args.eps_min, args.eps_max, args.steps)
    p = args.precision
    lines = ["epsilon,u_bradyon,v_pt,w_tachyon"]
    for row in rows:
        u = "" if row.u is None else _fmt(row.u, p)
        w = "" if row.w is None else _fmt(row.w, p)
        lines.append(f"{_fmt(row.epsilon, p)},{u},{_fmt(row.v, p)},{w}")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="") as handle:
            handle.write(text)
    return EXIT_OK


def cmd_spinor(args) -> int:
    spec = _spec_from_args(args)
    w = amplitude(spec)
    p = args.precision
    norm = float(np.real(np.vdot(w, w)))
    n_factor = normalization_factor(spec, NormalizationContext(volume=args.volume))
    print("components " + " ".join(_fmt_complex(z, p) for z in w))
    print(f"norm {_fmt(norm, p)}")
    print(f"normalization {_fmt(n_factor, p)}")
    print(f"residual {solution_residual(spec, w):.3e}")
    return EXIT_OK


def cmd_expect(args) -> int:
    spec = _spec_from_args(args)
    report = expectation_report(spec)
    p = args.precision
    print("mean_velocity " + " ".join(_fmt(c, p) for c in report.mean_velocity))
    print("mean_four_velocity "
          + " ".join(_fmt(c, p) for c in report.mean_four_velocity.as_array()))
    print("mean_spin_four_vector "
          + " ".join(_fmt(c, p) for c in report.mean_spin_four_vector.as_array()))
    for label, value in report.constraint_residuals.items():
        print(f"residual {label} {value:.3e}")
    return EXIT_OK


def cmd_transform(args) -> int:
    spec = _spec_from_args(args)
    if args.op == "boost":
        if args.rapidity is None:
            raise ValueError("--rapidity is required for --op boost")
        transformed, residual = apply_boost(spec, args.axis, args.rapidity)
    else:
        transformed, residual = apply_discrete(DiscreteKind(args.op), spec)
    print("transformed " + " ".join(_fmt_complex(z, args.precision) for z in transformed))
    print(f"residual {residual:.3e}")
    return EXIT_OK if residual <= args.tol else EXIT_VERIFY_FAILED


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise ValueError(f"trials must be >= 1, got {args.trials}")
    report = verify.run_all(args.seed, args.trials, args.tol)
    print(verify.format_report(report))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser(_default_tol())
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NonPhysicalMomentum, MassNotZero, ZeroMomentum,
            TranscendentDivision, MasslessSpecies) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
