"""Pure-Python/numpy fallback for the compiled hot kernels.

Same call signatures and semantics as the Cython module ``_kernels``; see
``_backend`` for the import-time selection.  The lattice sum is vectorized
by bucketing grid points with similar head lengths, the RK4 stepper is a
plain Python loop (the compiled backend exists because of it).
"""
from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"


def sigma_lattice_sum(x, phi, weights, y_start=4.0, x_switch=1e-3):
    """Evaluate S(x) = sum_{n>=1} (-1)^(n-1) g(n*x, phi) for an array of x > 0.

    g is the rational kernel (1 + y cos phi) / (1 + 2 y cos phi + y^2).
    Terms with n*x below ``y_start`` are summed directly so that the
    accelerated tail only sees the monotone decaying regime; for
    x <= x_switch the sequence is slowly varying from the first term on and
    the acceleration is applied to the whole series.  ``weights`` are the
    alternating-acceleration weights (signs included).
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    c = math.cos(phi)
    n_acc = len(weights)
    out = np.empty(x.shape)

    def g(y):
        return (1.0 + y * c) / (1.0 + 2.0 * y * c + y * y)

    heads = np.where(x <= x_switch, 0,
                     np.ceil(y_start / np.maximum(x, x_switch))).astype(np.int64)
    # uniform head length per bucket keeps the direct sums vectorizable
    buckets = np.zeros(x.shape, dtype=np.int64)
    pos = heads > 0
    buckets[pos] = 2 ** np.ceil(np.log2(heads[pos])).astype(np.int64)
    for m in np.unique(buckets):
        sel = buckets == m
        xs = x[sel]
        acc = np.zeros(xs.shape)
        if m > 0:
            n = np.arange(1, m + 1, dtype=float)[:, None]
            signs = np.where(np.arange(1, m + 1) % 2 == 1, 1.0, -1.0)[:, None]
            acc += (signs * g(n * xs[None, :])).sum(axis=0)
        tail_sign = -1.0 if m % 2 else 1.0
        k = np.arange(n_acc, dtype=float)[:, None]
        terms = g((m + 1 + k) * xs[None, :])
        acc += tail_sign * (weights[:, None] * terms).sum(axis=0)
        out[sel] = acc
    return out


def rk4_trajectory(y0, dt, n_steps, blowup=1e12):
    """Fixed-step RK4 for the five-variable probe/system flow.

    Returns (trajectory, status): trajectory has shape (n_steps+1, 5) and
    status is -1 on success or the 1-based step index at which a component
    exceeded ``blowup`` (rows beyond that step are unfilled).
    """
    out = np.empty((n_steps + 1, 5))
    x, v, w, u, p = (float(a) for a in y0)
    out[0] = (x, v, w, u, p)
    h = float(dt)
    for i in range(1, n_steps + 1):
        ax1 = 0.5 * v
        av1 = -x * w
        aw1 = -x * v + p * u
        au1 = p * w
        ap1 = -0.5 * u

        x2 = x + 0.5 * h * ax1
        v2 = v + 0.5 * h * av1
        w2 = w + 0.5 * h * aw1
        u2 = u + 0.5 * h * au1
        p2 = p + 0.5 * h * ap1
        ax2 = 0.5 * v2
        av2 = -x2 * w2
        aw2 = -x2 * v2 + p2 * u2
        au2 = p2 * w2
        ap2 = -0.5 * u2

        x3 = x + 0.5 * h * ax2
        v3 = v + 0.5 * h * av2
        w3 = w + 0.5 * h * aw2
        u3 = u + 0.5 * h * au2
        p3 = p + 0.5 * h * ap2
        ax3 = 0.5 * v3
        av3 = -x3 * w3
        aw3 = -x3 * v3 + p3 * u3
        au3 = p3 * w3
        ap3 = -0.5 * u3

        x4 = x + h * ax3
        v4 = v + h * av3
        w4 = w + h * aw3
        u4 = u + h * au3
        p4 = p + h * ap3
        ax4 = 0.5 * v4
        av4 = -x4 * w4
        aw4 = -x4 * v4 + p4 * u4
        au4 = p4 * w4
        ap4 = -0.5 * u4

        x += h / 6.0 * (ax1 + 2.0 * (ax2 + ax3) + ax4)
        v += h / 6.0 * (av1 + 2.0 * (av2 + av3) + av4)
        w += h / 6.0 * (aw1 + 2.0 * (aw2 + aw3) + aw4)
        u += h / 6.0 * (au1 + 2.0 * (au2 + au3) + au4)
        p += h / 6.0 * (ap1 + 2.0 * (ap2 + ap3) + ap4)
        out[i] = (x, v, w, u, p)
        if (abs(x) > blowup or abs(v) > blowup or abs(w) > blowup
                or abs(u) > blowup or abs(p) > blowup):
            return out, i
    return out, -1
