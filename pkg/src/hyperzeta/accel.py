"""Alternating-series convergence acceleration.

The workhorse is the Cohen / Rodriguez Villegas / Zagier polynomial scheme:
an n-term weighted partial sum whose weights come from Chebyshev-polynomial
coefficients, turning a slowly convergent alternating series into one whose
error shrinks geometrically in n.  For totally monotone term sequences the
decay is ~5.8^-n; on the critical-line series used here it degrades to
roughly 1.85^-n, which still reaches double precision by n ~ 64-128.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import ConvergenceError

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class AccelConfig:
    """Budget and target for accelerated summation."""

    max_terms: int = 1_000_000
    abs_tol: float = 1e-12

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.abs_tol < 10 * _EPS:
            raise ValueError("abs_tol below 10*machine-epsilon is not certifiable")


DEFAULT_ACCEL = AccelConfig()

# Starting order; doubled on certification failure.
DEFAULT_ORDER = 64


@lru_cache(maxsize=32)
def cvz_weights(n: int) -> np.ndarray:
    """Weights w_k such that sum_k w_k * a_k approximates sum_k (-1)^k a_k.

    The recurrence is the published three-line algorithm; the returned
    weights carry the alternating signs, so callers pass the unsigned a_k.
    """
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    w = np.empty(n)
    for k in range(n):
        c = b - c
        w[k] = c
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
    w /= d
    w.setflags(write=False)
    return w


def cvz_sum(a: np.ndarray) -> complex:
    """Accelerated value of sum_k (-1)^k a[k] using all supplied terms."""
    return complex(np.dot(cvz_weights(len(a)), a))


def alternating_sum(term: Callable[[np.ndarray], np.ndarray],
                    cfg: AccelConfig | None = None,
                    order: int = DEFAULT_ORDER) -> complex:
    """Sum_{k>=0} (-1)^k term(k) with error control.

    ``term`` receives an integer index array and returns the unsigned terms.
    The order is raised (x1.5) until two successive accelerated values agree
    within abs_tol/2; the difference is the certificate.  Raises
    ConvergenceError once the total number of consumed terms would exceed
    ``cfg.max_terms``.
    """
    cfg = cfg or DEFAULT_ACCEL
    n = min(order, cfg.max_terms)
    prev = cvz_sum(np.asarray(term(np.arange(n))))
    used = n
    while True:
        n = max(n + 8, int(n * 1.5))
        if used + n > cfg.max_terms:
            raise ConvergenceError(
                f"no certificate at abs_tol={cfg.abs_tol:g} within "
                f"{cfg.max_terms} terms")
        cur = cvz_sum(np.asarray(term(np.arange(n))))
        used += n
        if abs(cur - prev) <= 0.5 * cfg.abs_tol:
            return cur
        prev = cur
