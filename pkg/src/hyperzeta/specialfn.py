"""Reference evaluations of the critical-line special functions.

Everything here is built from two primitives: a Lanczos approximation for
the complex Gamma function and accelerated alternating series (module
``accel``) for the eta/beta/zeta family and the three-parameter
transcendent Phi(z, s, u) = sum_n z^n / (u+n)^s.  These routines double as
the ground truth the transform engine is verified against.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .accel import DEFAULT_ACCEL, AccelConfig, alternating_sum
from .errors import ConvergenceError, DomainError, PoleError, SingularityError

_POLE_TOL = 1e-14          # absolute distance below which a pole is "hit"
_SQRT_2PI = math.sqrt(2.0 * math.pi)

# Lanczos g=7 with 9 coefficients; uniformly ~1e-13 relative over the
# strip needed here (|Im s| <= 60) once paired with the reflection formula.
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


@dataclass(frozen=True)
class ComplexSample:
    """A complex value tagged with the (real) abscissa it was computed at."""

    abscissa: float
    value: complex

    @property
    def is_finite(self) -> bool:
        return bool(np.isfinite(self.value.real) and np.isfinite(self.value.imag))


@dataclass(frozen=True)
class LerchParams:
    """Parameter triple (z, s, u) of the transcendent Phi(z, s, u)."""

    z: complex
    s: complex
    u: float

    def __post_init__(self):
        if not self.u > 0:
            raise DomainError(f"u must be positive, got {self.u}")
        az = abs(self.z)
        if az > 1 + 1e-15:
            raise DomainError(f"|z| must be <= 1, got {az}")
        if az >= 1 - 1e-15:
            if abs(self.z - (-1)) < 1e-15:
                if not self.s.real > 0:
                    raise DomainError("z = -1 requires Re(s) > 0")
            elif not self.s.real > 1:
                raise DomainError("|z| = 1 requires Re(s) > 1 (except z = -1)")


def gamma_complex(s: complex) -> complex:
    """Gamma(s) for complex s by the Lanczos approximation.

    The reflection formula handles Re(s) < 1/2, which keeps the relative
    error uniform on the critical line.  Raises PoleError within 1e-14 of
    the poles s = 0, -1, -2, ...
    """
    s = complex(s)
    if abs(s.imag) < _POLE_TOL:
        nearest = round(s.real)
        if nearest <= 0 and abs(s.real - nearest) < _POLE_TOL:
            raise PoleError(f"gamma pole at s = {nearest}")
    if s.real < 0.5:
        return math.pi / (cmath.sin(math.pi * s) * gamma_complex(1.0 - s))
    z = s - 1.0
    acc = _LANCZOS_P[0]
    for i, p in enumerate(_LANCZOS_P[1:], start=1):
        acc += p / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (z + 0.5) * cmath.exp(-t) * acc


def dirichlet_eta(s: complex, cfg: AccelConfig | None = None) -> complex:
    """Alternating zeta series sum_{k>=1} (-1)^(k-1) k^(-s), Re(s) > 0."""
    s = complex(s)
    if not s.real > 0:
        raise DomainError(f"dirichlet_eta requires Re(s) > 0, got {s}")

    def term(k: np.ndarray) -> np.ndarray:
        return np.exp(-s * np.log(k + 1.0))

    return alternating_sum(term, cfg)


def zeta_critical(t: float, cfg: AccelConfig | None = None) -> complex:
    """zeta(1/2 + i t) through the alternating series.

    The conversion factor (1 - 2^(1-s)) never vanishes on Re(s) = 1/2, so
    the whole critical line is reachable this way.
    """
    s = complex(0.5, t)
    return dirichlet_eta(s, cfg) / (1.0 - 2.0 ** (1.0 - s))


def dirichlet_beta(s: complex, cfg: AccelConfig | None = None) -> complex:
    """Beta series sum_{k>=0} (-1)^k (2k+1)^(-s), Re(s) > 0."""
    s = complex(s)
    if not s.real > 0:
        raise DomainError(f"dirichlet_beta requires Re(s) > 0, got {s}")

    def term(k: np.ndarray) -> np.ndarray:
        return np.exp(-s * np.log(2.0 * k + 1.0))

    return alternating_sum(term, cfg)


def lerch_integrand(z: complex, t: float, u: float) -> complex:
    """chi(z, t, u) = exp(-(u-1) t) / (exp(t) - z) for t >= 0."""
    et = math.exp(t)
    den = et - z
    if abs(den) < _POLE_TOL:
        raise SingularityError(f"exp(t) - z vanishes at t={t}, z={z}")
    return cmath.exp(-(u - 1.0) * t) / den


def _lerch_direct(z: complex, s: complex, u: float, cfg: AccelConfig) -> complex:
    """Direct series for |z| < 1 with a certified geometric tail bound."""
    az = abs(z)
    total = 0.0 + 0.0j
    zn = 1.0 + 0.0j
    growth = max(0.0, -s.real)
    n = 0
    while True:
        term = zn * (u + n) ** (-s)
        total += term
        # ratio bound |t_{n+1}/t_n| <= az * ((u+n+1)/(u+n))^max(0,-Re s)
        r = az * ((u + n + 1.0) / (u + n)) ** growth
        if r < 1.0 and abs(term) * r / (1.0 - r) <= cfg.abs_tol:
            return total
        n += 1
        if n > cfg.max_terms:
            raise ConvergenceError("direct series exceeded max_terms")
        zn *= z


def _hurwitz_em(s: complex, u: float, cfg: AccelConfig) -> complex:
    """sum_{n>=0} (u+n)^(-s) for Re(s) > 1 by Euler-Maclaurin."""
    # Bernoulli numbers B_2 .. B_16
    bern = (1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
            5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510)
    n_head = int(max(16, 2 * abs(s.imag)))
    n = np.arange(n_head)
    total = complex(np.sum(np.exp(-s * np.log(u + n))))
    a = u + n_head
    total += a ** (1.0 - s) / (s - 1.0) + 0.5 * a ** (-s)
    fact = s          # rising product s (s+1) ... */(2j)!
    power = a ** (-s - 1.0)
    last = math.inf
    for j, b in enumerate(bern, start=1):
        term = b / math.factorial(2 * j) * fact * power
        total += term
        mag = abs(term)
        if mag <= cfg.abs_tol / 10:
            return total
        if mag > last:   # asymptotic series started diverging
            break
        last = mag
        fact *= (s + 2 * j - 1) * (s + 2 * j)
        power /= a * a
    if last > cfg.abs_tol:
        raise ConvergenceError("Euler-Maclaurin tail did not reach abs_tol")
    return total


def lerch_phi(p: LerchParams, cfg: AccelConfig | None = None) -> complex:
    """Phi(z, s, u) on the closure of the unit disc where the series makes sense.

    Direct summation for |z| < 0.99; accelerated alternating series at
    z = -1; Euler-Maclaurin for z = +1 (needs Re(s) > 1).  The ring
    0.99 < |z| < 1 is rejected rather than evaluated with silent accuracy
    loss.
    """
    cfg = cfg or DEFAULT_ACCEL
    z, s, u = complex(p.z), complex(p.s), float(p.u)
    az = abs(z)
    if az < 0.99:
        return _lerch_direct(z, s, u, cfg)
    if abs(z - (-1.0)) < 1e-15:
        def term(k: np.ndarray) -> np.ndarray:
            return np.exp(-s * np.log(u + k))
        return alternating_sum(term, cfg)
    if abs(z - 1.0) < 1e-15:
        return _hurwitz_em(s, u, cfg)
    raise DomainError(
        f"|z| = {az:.6f} is inside the uncertified ring 0.99 < |z| < 1")


def dirichlet_partial_sum(s: complex, n_max: int) -> complex:
    """Truncated Dirichlet sum sum_{n=1}^{n_max} n^(-s).

    This is the hyperbolic-momentum profile of a truncated position-comb
    state.  On the critical line it does NOT converge to zeta as n_max
    grows (the full comb state is non-normalizable); the truncation is the
    object of interest itself.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    s = complex(s)
    n = np.arange(1, n_max + 1, dtype=float)
    return complex(np.sum(np.exp(-s * np.log(n))))
