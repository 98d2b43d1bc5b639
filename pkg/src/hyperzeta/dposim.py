"""Semiclassical degenerate-parametric-oscillator probe dynamics.

The five dimensionless variables (x_pb, v, w, u_dpo, p_pb) close under a
bilinear flow whose off-diagonal couplings are the probe quadratures
themselves; v plays the role of the system's hyperbolic momentum and the
probe quadrature x_pb picks it up linearly at early times, which is what
makes the scheme an indirect measurement.  x_pb^2 + p_pb^2 + w is an exact
constant of the motion and doubles as the integration accuracy monitor.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

from . import _backend
from .errors import StepError

BLOWUP_GUARD = 1e12


@dataclass(frozen=True)
class DpoState:
    x_pb: float
    v: float
    w: float
    u_dpo: float
    p_pb: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x_pb, self.v, self.w, self.u_dpo, self.p_pb])

    @classmethod
    def from_array(cls, a) -> "DpoState":
        return cls(*(float(c) for c in a))

    def conserved(self) -> float:
        return self.x_pb ** 2 + self.p_pb ** 2 + self.w


class Method(Enum):
    RK4 = "rk4"


@dataclass(frozen=True)
class DpoConfig:
    dt: float
    t_end: float
    method: Method = Method.RK4

    def __post_init__(self):
        if not (self.dt > 0 and self.t_end > 0):
            raise ValueError("dt and t_end must be positive")
        if self.dt > 1e-3 * self.t_end:
            raise ValueError(f"dt = {self.dt:g} too coarse for "
                             f"t_end = {self.t_end:g} (need dt <= 1e-3 t_end)")


def dpo_init(x_s: float, p_s: float) -> DpoState:
    """Vacuum-probe initial condition from the system quadratures."""
    return DpoState(x_pb=0.0, v=x_s * p_s,
                    w=0.5 * (x_s ** 2 + p_s ** 2),
                    u_dpo=0.5 * (x_s ** 2 - p_s ** 2), p_pb=0.0)


def dpo_rhs(s: DpoState) -> DpoState:
    """Flow field; row-by-row product of the bilinear system matrix."""
    return DpoState(x_pb=0.5 * s.v,
                    v=-s.x_pb * s.w,
                    w=-s.x_pb * s.v + s.p_pb * s.u_dpo,
                    u_dpo=s.p_pb * s.w,
                    p_pb=-0.5 * s.u_dpo)


@dataclass(frozen=True)
class Trajectory:
    tau: np.ndarray
    data: np.ndarray       # shape (len(tau), 5)

    @property
    def x_pb(self) -> np.ndarray:
        return self.data[:, 0]

    @property
    def v(self) -> np.ndarray:
        return self.data[:, 1]

    @property
    def w(self) -> np.ndarray:
        return self.data[:, 2]

    @property
    def u_dpo(self) -> np.ndarray:
        return self.data[:, 3]

    @property
    def p_pb(self) -> np.ndarray:
        return self.data[:, 4]

    def conserved(self) -> np.ndarray:
        return self.data[:, 0] ** 2 + self.data[:, 4] ** 2 + self.data[:, 2]

    def w_range(self) -> tuple[float, float]:
        """Probe-energy bookkeeping diagnostic (w should stay >= 0)."""
        return float(self.w.min()), float(self.w.max())

    def state_at(self, i: int) -> DpoState:
        return DpoState.from_array(self.data[i])

    def __len__(self) -> int:
        return len(self.tau)

    def __iter__(self) -> Iterator[tuple[float, DpoState]]:
        for i in range(len(self.tau)):
            yield float(self.tau[i]), self.state_at(i)


def dpo_integrate(s0: DpoState, cfg: DpoConfig) -> Trajectory:
    """Fixed-step RK4 trajectory over tau in [0, t_end].

    Raises StepError if any component exceeds the blow-up guard (1e12);
    physical initializations cannot reach it since the conserved quantity
    bounds every variable.
    """
    n_steps = int(round(cfg.t_end / cfg.dt))
    data, status = _backend.rk4_trajectory(s0.as_array(), cfg.dt, n_steps,
                                           BLOWUP_GUARD)
    if status != -1:
        raise StepError(f"state exceeded {BLOWUP_GUARD:g} at "
                        f"tau = {status * cfg.dt:g}")
    tau = cfg.dt * np.arange(n_steps + 1)
    return Trajectory(tau=tau, data=data)


def central_potential_check(traj: Trajectory) -> float:
    """Consistency of the trajectory with its two-variable reduction.

    Along the flow, 2 x_pb'' = -x_pb [K - r^2] and likewise for p_pb, with
    r^2 = x_pb^2 + p_pb^2 and K the conserved x_pb^2 + p_pb^2 + w at tau=0.
    Second derivatives come from central differences on the uniform
    samples; returns the max over interior samples of the summed residuals.
    """
    if len(traj) < 5:
        raise ValueError("need at least 5 uniformly spaced samples")
    dt = float(traj.tau[1] - traj.tau[0])
    k_const = float(traj.conserved()[0])
    x, p = traj.x_pb, traj.p_pb
    r2 = x ** 2 + p ** 2
    ddx = (x[2:] - 2.0 * x[1:-1] + x[:-2]) / dt ** 2
    ddp = (p[2:] - 2.0 * p[1:-1] + p[:-2]) / dt ** 2
    force = k_const - r2[1:-1]
    resid = (np.abs(2.0 * ddx + x[1:-1] * force)
             + np.abs(2.0 * ddp + p[1:-1] * force))
    return float(resid.max())
