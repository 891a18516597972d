"""Command-line front end.

Exit codes: 0 success, 1 a check or computation failed, 2 bad configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import checks
from .dynamics import (
    atomic_inversion,
    basis_state,
    coherent_amplitudes,
    coherent_field_state,
    evolve_spectral,
)
from .eigensolver import ConvergenceError, hermitian_eigen
from .model import ModelParams, analytic_spectrum, build_hamiltonian


class ConfigError(ValueError):
    pass


def _fmt(x):
    if isinstance(x, float):
        return format(x, ".16e")
    return str(x)


def emit(config: dict, header: list[str], rows: list[list], fmt: str, out) -> None:
    if fmt == "json":
        payload = {"config": config, "rows": [dict(zip(header, r)) for r in rows]}
        out.write(json.dumps(payload, indent=2, sort_keys=False))
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(v) for v in r])


def _model(args) -> ModelParams:
    for name in ("omega", "omega0", "coupling"):
        if not math.isfinite(getattr(args, name)):
            raise ConfigError(f"--{name} must be finite")
    try:
        return ModelParams(args.k, args.omega, args.omega0, args.coupling, args.dim)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _config(args) -> dict:
    skip = {"func", "out", "format", "inject_literal"}
    cfg = {k: v for k, v in vars(args).items() if k not in skip}
    for k, v in cfg.items():
        if isinstance(v, complex):
            cfg[k] = [v.real, v.imag]
    return cfg


def cmd_spectrum(args):
    p = _model(args)
    n_max = p.n_safe_max if args.n_max is None else args.n_max
    if not 0 <= n_max <= p.n_safe_max:
        raise ConfigError(f"--n-max must lie in 0..{p.n_safe_max}")
    header = ["n", "branch", "sector", "detuning", "E_interaction", "E_total"]
    rows = [
        [e.n, "+" if e.branch > 0 else "-", e.sector, e.detuning, e.interaction_energy, e.total_energy]
        for e in analytic_spectrum(p, n_max)
    ]
    return header, rows, 0


def cmd_validate(args):
    p = _model(args)
    results = checks.run_all(p, tol=args.tolerance, literal=args.inject_literal)
    header = ["check", "passed", "value", "tolerance", "detail"]
    rows = [[r.name, str(r.passed).lower(), r.value, r.tolerance, r.detail] for r in results]
    failed = [r.name for r in results if not r.passed]
    for name in failed:
        print(f"FAILED: {name}", file=sys.stderr)
    return header, rows, 1 if failed else 0


def _alpha(text: str) -> complex:
    try:
        value = complex(text.replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise argparse.ArgumentTypeError("alpha must be finite")
    return value


def _initial_state(args, dim: int) -> np.ndarray:
    if args.alpha == 0:
        return basis_state(0, args.atom, dim)
    try:
        return coherent_field_state(args.alpha, args.atom, dim)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def cmd_evolve(args):
    p = _model(args)
    if not (math.isfinite(args.t_max) and args.t_max >= 0) or args.steps < 1:
        raise ConfigError("--t-max must be finite and non-negative, --steps at least 1")
    s0 = _initial_state(args, p.dim)
    times = args.t_max * np.arange(args.steps + 1) / args.steps
    eig = hermitian_eigen(build_hamiltonian(p))
    traj = evolve_spectral(eig, s0, times)
    inversion = atomic_inversion(traj)
    norm_err = np.abs(np.linalg.norm(traj, axis=1) - 1.0)
    header = ["t", "inversion", "norm_error"]
    rows = [[float(t), float(w), float(e)] for t, w, e in zip(times, inversion, norm_err)]
    return header, rows, 0


def cmd_coherent_state(args):
    if args.dim < 1:
        raise ConfigError("--dim must be positive")
    if abs(args.alpha) ** 2 > args.dim / 4:
        raise ConfigError(f"|alpha|^2 exceeds dim/4 = {args.dim / 4:g}")
    amps, _ = coherent_amplitudes(args.alpha, args.dim)
    header = ["n", "atom", "amplitude_re", "amplitude_im", "probability"]
    rows = [[n, args.atom, float(a.real), float(a.imag), float(abs(a) ** 2)] for n, a in enumerate(amps)]
    return header, rows, 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default: stdout)")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--k", type=int, default=2, help="photon order")
    model.add_argument("--omega", type=float, default=1.0, help="field frequency")
    model.add_argument("--omega0", type=float, default=2.0, help="atomic frequency")
    model.add_argument("--coupling", type=float, default=0.1, help="coupling constant lambda")
    model.add_argument("--dim", type=int, default=32, help="Fock truncation dimension")

    parser = argparse.ArgumentParser(
        prog="kphoton-jc", description="k-photon Jaynes-Cummings spectra, checks and dynamics"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common, model], help="closed-form spectrum")
    sp.add_argument("--n-max", type=int, default=None)
    sp.set_defaults(func=cmd_spectrum)

    vp = sub.add_parser("validate", parents=[common, model], help="run the consistency suite")
    vp.add_argument("--tolerance", type=float, default=1e-9)
    vp.add_argument("--inject-literal", action="store_true", help=argparse.SUPPRESS)
    vp.set_defaults(func=cmd_validate)

    ep = sub.add_parser("evolve", parents=[common, model], help="atomic inversion over time")
    ep.add_argument("--alpha", type=_alpha, default=0j, help="coherent amplitude (0: vacuum)")
    ep.add_argument("--atom", choices=("e", "g"), default="e")
    ep.add_argument("--t-max", type=float, default=10.0)
    ep.add_argument("--steps", type=int, default=100)
    ep.set_defaults(func=cmd_evolve)

    cp = sub.add_parser("coherent-state", parents=[common], help="truncated coherent field amplitudes")
    cp.add_argument("--alpha", type=_alpha, default=1 + 0j)
    cp.add_argument("--atom", choices=("e", "g"), default="e")
    cp.add_argument("--dim", type=int, default=32)
    cp.set_defaults(func=cmd_coherent_state)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        header, rows, code = args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    buf = io.StringIO()
    emit(_config(args), header, rows, args.format, buf)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
