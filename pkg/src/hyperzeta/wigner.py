"""Phase-space quasi-probability on the (eta, p_eta) plane.

W(eta, p) = (1/2 pi) integral psi_bar(eta + y/2) conj(psi_bar(eta - y/2))
e^(i y p) dy.  The half-step offsets are taken on a doubled-resolution grid
(trigonometric interpolation by default, linear as a cheaper fallback); the
y integral is a discrete Fourier sum evaluated directly on the requested
momentum grid, so the p window need not be the FFT dual of the eta grid.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TruncationError
from .hyperbolic import Axis, GridSpec, WaveGrid, _check_edges

DEFAULT_WIGNER_EDGE_TOL = 1e-2


@dataclass(frozen=True)
class WignerGrid:
    """Real-valued W over the product grid; rows index eta, columns p."""

    eta_spec: GridSpec
    p_spec: GridSpec
    values: np.ndarray
    imag_residue: float = 0.0

    def __post_init__(self):
        vals = np.ascontiguousarray(self.values, dtype=np.float64)
        if vals.shape != (self.eta_spec.n, self.p_spec.n):
            raise ValueError(f"values shape {vals.shape} does not match grids")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def mass(self) -> float:
        """Total integral, trapezoid in both directions; ~1 for pure states."""
        inner = np.trapezoid(self.values, dx=self.p_spec.step, axis=1)
        return float(np.trapezoid(inner, dx=self.eta_spec.step))


def wigner_default_specs() -> tuple[GridSpec, GridSpec]:
    """1024 x 1024 window sized for the zeta state's support."""
    return (GridSpec(-12.0, 8.0, 1024, Axis.ETA_LINE),
            GridSpec(-45.0, 45.0, 1024, Axis.P_ETA_LINE))


def _upsample_fft(values: np.ndarray) -> np.ndarray:
    """Trigonometric interpolation onto the half-step grid (2n-1 points)."""
    n = len(values)
    spec = np.fft.fft(values)
    padded = np.zeros(2 * n, dtype=np.complex128)
    padded[: n // 2] = spec[: n // 2]
    padded[n // 2] = 0.5 * spec[n // 2]          # split the Nyquist bin
    padded[2 * n - n // 2] = 0.5 * spec[n // 2]
    padded[2 * n - n // 2 + 1:] = spec[n // 2 + 1:]
    fine = 2.0 * np.fft.ifft(padded)
    return fine[: 2 * n - 1]


def _upsample_linear(values: np.ndarray) -> np.ndarray:
    n = len(values)
    fine = np.empty(2 * n - 1, dtype=np.complex128)
    fine[0::2] = values
    fine[1::2] = 0.5 * (values[:-1] + values[1:])
    return fine


def wigner_from_state(psi_bar: WaveGrid, p_spec: GridSpec,
                      upsample: str = "fft",
                      edge_tol: float = DEFAULT_WIGNER_EDGE_TOL) -> WignerGrid:
    """Build W from a normalized eta-line state.

    Requires norm_tag = 1 within 1e-6 (pure-state normalization) and edge
    decay on the eta window.  The imaginary residue left after the
    construction is recorded on the grid; for exact arithmetic it would be
    zero by Hermiticity.
    """
    if psi_bar.spec.axis is not Axis.ETA_LINE:
        raise ValueError("wigner_from_state expects an ETA_LINE grid")
    if p_spec.axis is not Axis.P_ETA_LINE:
        raise ValueError("p_spec must be a P_ETA_LINE grid")
    if psi_bar.norm_tag is None or abs(psi_bar.norm_tag - 1.0) > 1e-6:
        raise ValueError(f"state must be normalized (norm_tag = "
                         f"{psi_bar.norm_tag}), within 1e-6")
    _check_edges(psi_bar, edge_tol)

    n = psi_bar.spec.n
    d_eta = psi_bar.spec.step
    if upsample == "fft":
        fine = _upsample_fft(psi_bar.values)
    elif upsample == "linear":
        fine = _upsample_linear(psi_bar.values)
    else:
        raise ValueError(f"unknown upsample mode {upsample!r}")

    # correlation row i: c_m = fine[2i+m] conj(fine[2i-m]), zero off-grid
    n_fine = len(fine)              # 2n - 1
    span = n - 1
    padded = np.zeros(n_fine + 2 * span, dtype=np.complex128)
    padded[span: span + n_fine] = fine
    m = np.arange(-span, span + 1)
    base = span + 2 * np.arange(n)
    idx_plus = base[:, None] + m[None, :]
    idx_minus = base[:, None] - m[None, :]
    corr = padded[idx_plus] * np.conj(padded[idx_minus])

    # y = m * d_eta, so the Fourier sum uses weights d_eta per lattice step
    p = p_spec.points()
    phases = np.exp(1j * (m[:, None] * d_eta) * p[None, :])
    w = (d_eta / (2.0 * math.pi)) * (corr @ phases)
    residue = float(np.max(np.abs(w.imag)))
    return WignerGrid(psi_bar.spec, p_spec, w.real, imag_residue=residue)


def marginal_eta(w: WignerGrid) -> np.ndarray:
    """integral W dp; equals |psi_bar(eta)|^2 for a faithful construction."""
    return np.trapezoid(w.values, dx=w.p_spec.step, axis=1)


def marginal_p(w: WignerGrid) -> np.ndarray:
    """integral W d eta; equals |<p_eta|psi>|^2 of the windowed state."""
    return np.trapezoid(w.values, dx=w.eta_spec.step, axis=0)
