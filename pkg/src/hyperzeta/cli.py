"""Command-line front end: sweeps, data emission, figure recipes.

Every command writes a flat table (CSV, RFC-4180, or a JSON object with
``meta`` and ``rows``) with a fixed column schema, so the gnuplot recipes
and the tests are schema-stable.  Exit codes: 0 success, 1 domain or
usage errors, 2 convergence/quadrature/truncation failures, 3 I/O errors.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from . import __version__
from ._backend import BACKEND
from .accel import AccelConfig
from .errors import (ConvergenceError, DomainError, EvaluationError,
                     HyperzetaError, QuadratureError, SchemaError, StepError,
                     TruncationError)
from .figures import FigureId, emit_figure_recipe
from .hyperbolic import (Axis, GridSpec, QuadConfig, WaveGrid,
                         default_eta_spec, mellin_critical, renormalized,
                         to_eta_representation)
from .specialfn import LerchParams, gamma_complex, lerch_phi, zeta_critical
from .zetawave import (LerchWave, PotentialProfile, SigmaWave,
                       chi_momentum_closed, g_mellin_closed, potential_eval,
                       psi_lerch_eval, psi_zeta_momentum_closed,
                       psi_zeta_wave, sigma_unnormalized, sigma_wavefunction,
                       zero_scan)
from .wigner import wigner_from_state
from .dposim import DpoConfig, dpo_init, dpo_integrate

_SQRT_2PI = math.sqrt(2.0 * math.pi)

DEFAULT_TOL = 1e-12
TOL_ENV_VAR = "HYPERZETA_TOL"


class UsageError(ValueError):
    """Bad command line or parameter set."""


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output_path: str = "-"
    format: OutputFormat = OutputFormat.CSV
    emit_plot_script: str | None = None
    tol: float = DEFAULT_TOL
    seed: int = 42


# recognized parameter keys per command; anything else is a hard error
_PARAM_KEYS = {
    "transform": {"input", "phi", "z", "u", "p_max", "eta_min", "eta_max",
                  "n", "self_check"},
    "wavefn": {"state", "z", "u", "phi", "x_min", "x_max", "n", "phi_grid"},
    "potential": {"kind", "z", "u", "x_max", "n"},
    "zeros": {"state", "phi", "t_min", "t_max", "coarse_step"},
    "wigner": {"state", "phi", "z", "u", "eta_min", "eta_max", "n_eta",
               "p_min", "p_max", "n_p"},
    "dpo": {"xs", "ps", "tend", "dt", "stride"},
    "lerch": {"z", "u", "t_min", "t_max", "n", "g_mellin", "n_phi"},
}

_SCHEMAS = {
    "transform": ("p_eta", "re", "im", "abs"),
    "wavefn": ("x", "value"),
    "wavefn_grid": ("x", "phi", "value"),
    "potential": ("x", "value"),
    "zeros": ("t_zero",),
    "wigner": ("eta", "p_eta", "w_value"),
    "dpo": ("tau", "x_pb", "v", "w", "u_dpo", "p_pb", "conserved"),
    "lerch": ("t", "re", "im", "abs"),
    "lerch_grid": ("t", "phi", "abs"),
}


def _accel(tol: float) -> AccelConfig:
    return AccelConfig(abs_tol=max(tol, 2.3e-14))


def _quad(tol: float) -> QuadConfig:
    t = max(tol, 1e-12)
    return QuadConfig(abs_tol=t, rel_tol=t)


def _transform_state(params: dict, tol: float):
    """Callable x-representation plus its closed-form momentum profile."""
    kind = params.get("input", "psi-zeta")
    accel, quad = _accel(tol), _quad(tol)
    if kind == "exp":
        return (lambda x: np.exp(-x)), \
            (lambda p: gamma_complex(complex(0.5, -p)) / _SQRT_2PI)
    if kind == "psi-zeta":
        wave = psi_zeta_wave(quad)
        return (lambda x: psi_lerch_eval(wave, x)), \
            (lambda p: psi_zeta_momentum_closed(p, accel))
    if kind == "sigma":
        wave = SigmaWave.create(params.get("phi", 3.0), accel, quad)
        return sigma_wavefunction(wave), \
            (lambda p: chi_momentum_closed(p, wave.phi, accel, wave=wave))
    if kind == "lerch-wave":
        z, u = params.get("z", 0.5), params.get("u", 2.0)
        wave = LerchWave.create(z, u, quad)

        def closed(p):
            s = complex(0.5, -p)
            phi_val = lerch_phi(LerchParams(wave.z, s, wave.u), accel)
            return wave.norm * gamma_complex(s) * phi_val
        return (lambda x: psi_lerch_eval(wave, x)), closed
    raise UsageError(f"unknown transform input {kind!r}")


def _cmd_transform(params: dict, tol: float):
    f, closed = _transform_state(params, tol)
    spec = default_eta_spec(params.get("eta_min", -40.0),
                            params.get("eta_max", 40.0),
                            int(params.get("n", 2 ** 16)))
    out = mellin_critical(to_eta_representation(f, spec))
    p = out.spec.points()
    mask = np.abs(p) <= params.get("p_max", 40.0)
    p, vals = p[mask], out.values[mask]
    rows = np.column_stack([p, vals.real, vals.imag, np.abs(vals)])
    meta = {}
    if params.get("self_check"):
        ref = np.array([closed(pp) for pp in p])
        metric = float(np.max(np.abs(vals - ref)))
        meta["self_check_sup_abs_err"] = metric
        print(f"self-check: sup abs deviation from closed form = "
              f"{metric:.6e}", file=sys.stderr)
    return _SCHEMAS["transform"], rows, meta


def _cmd_wavefn(params: dict, tol: float):
    state = params.get("state", "psi-zeta")
    accel, quad = _accel(tol), _quad(tol)
    n = int(params.get("n", 2001))
    phi_grid = int(params.get("phi_grid", 0))
    if phi_grid:
        if state != "sigma":
            raise UsageError("--phi-grid only applies to the sigma state")
        x = np.linspace(max(params.get("x_min", 1e-3), 1e-6),
                        params.get("x_max", 4.0), n)
        rows = []
        for xv in x:
            for phi in np.linspace(0.0, 3.0, phi_grid):
                rows.append((xv, phi, float(sigma_unnormalized(phi, xv))))
        return _SCHEMAS["wavefn_grid"], np.array(rows), {}
    if state == "psi-zeta":
        wave = psi_zeta_wave(quad)
        x = np.linspace(params.get("x_min", 0.0), params.get("x_max", 20.0), n)
        vals = np.real(psi_lerch_eval(wave, x))
    elif state == "lerch":
        wave = LerchWave.create(params.get("z", 0.5), params.get("u", 2.0),
                                quad)
        x = np.linspace(params.get("x_min", 0.0), params.get("x_max", 20.0), n)
        vals = np.real(psi_lerch_eval(wave, x))
    elif state == "sigma":
        swave = SigmaWave.create(params.get("phi", 3.0), accel, quad)
        x = np.linspace(max(params.get("x_min", 1e-3), 1e-6),
                        params.get("x_max", 20.0), n)
        vals = sigma_wavefunction(swave)(x)
    else:
        raise UsageError(f"unknown state {state!r}")
    return _SCHEMAS["wavefn"], np.column_stack([x, vals]), {}


def _cmd_potential(params: dict, tol: float):
    kind = params.get("kind", "v-zeta")
    if kind == "v-zeta":
        prof = PotentialProfile.v_zeta()
    elif kind == "vbar":
        prof = PotentialProfile.vbar(params.get("z", -1.0),
                                     params.get("u", 1.0))
    else:
        raise UsageError(f"unknown potential kind {kind!r}")
    x = np.linspace(0.0, params.get("x_max", 20.0),
                    int(params.get("n", 2001)))
    vals = potential_eval(prof, x)
    return _SCHEMAS["potential"], np.column_stack([x, np.real(vals)]), {}


def _cmd_zeros(params: dict, tol: float):
    state = params.get("state", "psi-zeta")
    accel = _accel(tol)
    if state == "zeta":
        f = lambda t: abs(zeta_critical(t, accel))
    elif state == "psi-zeta":
        f = lambda t: abs(psi_zeta_momentum_closed(-t, accel))
    elif state == "chi":
        wave = SigmaWave.create(params.get("phi", 3.0), accel)
        f = lambda t: abs(chi_momentum_closed(-t, wave.phi, accel, wave=wave))
    else:
        raise UsageError(f"unknown zeros state {state!r}")
    zeros = zero_scan(f, (params.get("t_min", 10.0), params.get("t_max", 30.0)),
                      params.get("coarse_step", 0.02))
    rows = np.array(zeros).reshape(-1, 1)
    return _SCHEMAS["zeros"], rows, {"count": len(zeros)}


def _cmd_wigner(params: dict, tol: float):
    state = params.get("state", "psi-zeta")
    accel, quad = _accel(tol), _quad(tol)
    eta_spec = GridSpec(params.get("eta_min", -12.0),
                        params.get("eta_max", 8.0),
                        int(params.get("n_eta", 1024)), Axis.ETA_LINE)
    p_spec = GridSpec(params.get("p_min", -45.0), params.get("p_max", 45.0),
                      int(params.get("n_p", 1024)), Axis.P_ETA_LINE)
    if state == "gaussian":
        eta = eta_spec.points()
        psi_bar = WaveGrid.tagged(eta_spec,
                                  math.pi ** -0.25 * np.exp(-eta ** 2 / 2.0))
    elif state == "psi-zeta":
        wave = psi_zeta_wave(quad)
        psi_bar = to_eta_representation(lambda x: psi_lerch_eval(wave, x),
                                        eta_spec)
    elif state == "sigma":
        swave = SigmaWave.create(params.get("phi", 3.0), accel, quad)
        psi_bar = to_eta_representation(sigma_wavefunction(swave), eta_spec)
    else:
        raise UsageError(f"unknown wigner state {state!r}")
    grid = wigner_from_state(renormalized(psi_bar), p_spec)
    eta = eta_spec.points()
    p = p_spec.points()
    rows = np.column_stack([np.repeat(eta, p_spec.n),
                            np.tile(p, eta_spec.n),
                            grid.values.ravel()])
    return _SCHEMAS["wigner"], rows, {"mass": grid.mass(),
                                      "imag_residue": grid.imag_residue}


def _cmd_dpo(params: dict, tol: float):
    cfg = DpoConfig(dt=params.get("dt", 1e-4), t_end=params.get("tend", 1.0))
    traj = dpo_integrate(dpo_init(params.get("xs", 1.0),
                                  params.get("ps", 1.0)), cfg)
    stride = max(1, int(params.get("stride", 1)))
    sel = slice(None, None, stride)
    rows = np.column_stack([traj.tau[sel], traj.data[sel],
                            traj.conserved()[sel]])
    w_lo, w_hi = traj.w_range()
    return _SCHEMAS["dpo"], rows, {"w_min": w_lo, "w_max": w_hi}


def _cmd_lerch(params: dict, tol: float):
    accel = _accel(tol)
    t = np.linspace(params.get("t_min", 0.0), params.get("t_max", 30.0),
                    int(params.get("n", 121)))
    if params.get("g_mellin"):
        phis = np.linspace(0.0, 3.0, int(params.get("n_phi", 61)))
        rows = []
        for tv in t:
            for phi in phis:
                rows.append((tv, phi,
                             abs(g_mellin_closed(complex(0.5, tv), phi))))
        return _SCHEMAS["lerch_grid"], np.array(rows), {}
    z, u = params.get("z", -1.0), params.get("u", 1.0)
    rows = []
    for tv in t:
        val = lerch_phi(LerchParams(z, complex(0.5, tv), u), accel)
        rows.append((tv, val.real, val.imag, abs(val)))
    return _SCHEMAS["lerch"], np.array(rows), {}


_DISPATCH = {
    "transform": _cmd_transform,
    "wavefn": _cmd_wavefn,
    "potential": _cmd_potential,
    "zeros": _cmd_zeros,
    "wigner": _cmd_wigner,
    "dpo": _cmd_dpo,
    "lerch": _cmd_lerch,
}


def _auto_figure(cfg: RunConfig) -> FigureId:
    p = cfg.params
    if cfg.command == "transform":
        kind = p.get("input", "psi-zeta")
        if kind == "psi-zeta":
            return FigureId.FIG1_I
        if kind == "sigma":
            return FigureId.FIG1_II
    if cfg.command == "wavefn" and p.get("phi_grid"):
        return FigureId.FIG2A
    if cfg.command == "lerch" and p.get("g_mellin"):
        return FigureId.FIG2B
    if cfg.command == "wigner":
        return FigureId.FIG9 if p.get("state") == "sigma" else FigureId.FIG7
    raise UsageError(f"no default figure for this {cfg.command} invocation; "
                     "pass an explicit figure id")


def _write_output(cfg: RunConfig, columns, rows, meta_extra: dict) -> None:
    meta = {"command": cfg.command, "params": cfg.params,
            "columns": list(columns), "tol": cfg.tol, "seed": cfg.seed,
            "format": cfg.format.value, "version": __version__,
            "backend": BACKEND}
    meta.update(meta_extra)
    out = sys.stdout if cfg.output_path == "-" else open(cfg.output_path, "w",
                                                         newline="")
    try:
        if cfg.format is OutputFormat.CSV:
            out.write(",".join(columns) + "\r\n")
            for row in rows:
                out.write(",".join(repr(float(v)) for v in row) + "\r\n")
        else:
            doc = {"meta": meta,
                   "rows": [[float(v) for v in row] for row in rows]}
            json.dump(doc, out, indent=1)
            out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()


def run(cfg: RunConfig) -> int:
    """Execute one command; deterministic output for identical configs."""
    try:
        if cfg.command not in _DISPATCH:
            raise UsageError(f"unknown command {cfg.command!r}")
        unknown = set(cfg.params) - _PARAM_KEYS[cfg.command]
        if unknown:
            raise UsageError(f"unrecognized parameters for {cfg.command}: "
                             f"{sorted(unknown)}")
        columns, rows, meta_extra = _DISPATCH[cfg.command](cfg.params, cfg.tol)
        _write_output(cfg, columns, rows, meta_extra)
        if cfg.emit_plot_script:
            if cfg.output_path == "-":
                raise UsageError("figure emission needs a real output file")
            fid = _auto_figure(cfg) if cfg.emit_plot_script == "auto" \
                else FigureId(cfg.emit_plot_script)
            script = emit_figure_recipe(fid, Path(cfg.output_path))
            print(f"wrote {script}", file=sys.stderr)
        return 0
    except (UsageError, DomainError, EvaluationError, SchemaError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConvergenceError, QuadratureError, TruncationError,
            StepError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperzeta",
                     description="hyperbolic-momentum transform toolkit")
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", default="-",
                        help="output file ('-' = stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--tol", type=float, default=None,
                        help=f"tolerance threaded into series acceleration "
                             f"and quadrature (default {DEFAULT_TOL:g}, or "
                             f"${TOL_ENV_VAR})")
    common.add_argument("--seed", type=int, default=42,
                        help="seed recorded in metadata for sweep commands")
    common.add_argument("--emit-plot-script", nargs="?", const="auto",
                        default=None, metavar="FIGURE",
                        help="also write a gnuplot recipe "
                             "(fig1-i fig1-ii fig2a fig2b fig7 fig8 fig9 fig10)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common],
                       help="hyperbolic-momentum profile of a state")
    p.add_argument("--input", default="psi-zeta",
                   choices=["exp", "psi-zeta", "sigma", "lerch-wave"])
    p.add_argument("--phi", type=float, default=3.0)
    p.add_argument("--z", type=float, default=0.5)
    p.add_argument("--u", type=float, default=2.0)
    p.add_argument("--p-max", type=float, default=40.0)
    p.add_argument("--eta-min", type=float, default=-40.0)
    p.add_argument("--eta-max", type=float, default=40.0)
    p.add_argument("--n", type=int, default=2 ** 16)
    p.add_argument("--self-check", action="store_true",
                   help="report sup deviation from the closed form on stderr")

    p = sub.add_parser("wavefn", parents=[common],
                       help="x-representation samples")
    p.add_argument("--state", default="psi-zeta",
                   choices=["psi-zeta", "lerch", "sigma"])
    p.add_argument("--z", type=float, default=0.5)
    p.add_argument("--u", type=float, default=2.0)
    p.add_argument("--phi", type=float, default=3.0)
    p.add_argument("--x-min", type=float, default=0.0)
    p.add_argument("--x-max", type=float, default=20.0)
    p.add_argument("--n", type=int, default=2001)
    p.add_argument("--phi-grid", type=int, default=0,
                   help="emit an (x, phi) surface with this many phi samples")

    p = sub.add_parser("potential", parents=[common],
                       help="eigenpotential samples")
    p.add_argument("--kind", default="v-zeta", choices=["v-zeta", "vbar"])
    p.add_argument("--z", type=float, default=-1.0)
    p.add_argument("--u", type=float, default=1.0)
    p.add_argument("--x-max", type=float, default=20.0)
    p.add_argument("--n", type=int, default=2001)

    p = sub.add_parser("zeros", parents=[common],
                       help="locate nodes of a momentum profile")
    p.add_argument("--state", default="psi-zeta",
                   choices=["psi-zeta", "chi", "zeta"])
    p.add_argument("--phi", type=float, default=3.0)
    p.add_argument("--range", nargs=2, type=float, default=[10.0, 30.0],
                   metavar=("T0", "T1"))
    p.add_argument("--coarse-step", type=float, default=0.02)

    p = sub.add_parser("wigner", parents=[common],
                       help="phase-space quasi-probability grid")
    p.add_argument("--state", default="psi-zeta",
                   choices=["psi-zeta", "gaussian", "sigma"])
    p.add_argument("--phi", type=float, default=3.0)
    p.add_argument("--eta-min", type=float, default=-12.0)
    p.add_argument("--eta-max", type=float, default=8.0)
    p.add_argument("--n-eta", type=int, default=1024)
    p.add_argument("--p-min", type=float, default=-45.0)
    p.add_argument("--p-max", type=float, default=45.0)
    p.add_argument("--n-p", type=int, default=1024)

    p = sub.add_parser("dpo", parents=[common],
                       help="semiclassical probe trajectory")
    p.add_argument("--xs", type=float, default=1.0)
    p.add_argument("--ps", type=float, default=1.0)
    p.add_argument("--tend", type=float, default=1.0)
    p.add_argument("--dt", type=float, default=1e-4)
    p.add_argument("--stride", type=int, default=1)

    p = sub.add_parser("lerch", parents=[common],
                       help="transcendent sweeps on the critical line")
    p.add_argument("--z", type=float, default=-1.0)
    p.add_argument("--u", type=float, default=1.0)
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=30.0)
    p.add_argument("--n", type=int, default=121)
    p.add_argument("--g-mellin", action="store_true",
                   help="emit the |Mellin g|(1/2+it, phi) surface instead")
    p.add_argument("--n-phi", type=int, default=61)
    return parser


_NS_SKIP = {"command", "output", "format", "tol", "seed", "emit_plot_script"}


def _config_from_namespace(ns: argparse.Namespace) -> RunConfig:
    params = {}
    for key, val in vars(ns).items():
        if key in _NS_SKIP or val is None:
            continue
        if key == "range":
            params["t_min"], params["t_max"] = val
            continue
        default_sentinels = {"self_check": False, "g_mellin": False,
                             "phi_grid": 0, "stride": 1}
        if key in default_sentinels and val == default_sentinels[key]:
            continue
        params[key] = val
    tol = ns.tol
    if tol is None:
        tol = float(os.environ.get(TOL_ENV_VAR, DEFAULT_TOL))
    return RunConfig(command=ns.command, params=params,
                     output_path=ns.output,
                     format=OutputFormat(ns.format),
                     emit_plot_script=ns.emit_plot_script,
                     tol=tol, seed=ns.seed)


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(_config_from_namespace(ns))


if __name__ == "__main__":
    sys.exit(main())
