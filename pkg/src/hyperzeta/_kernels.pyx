# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: the RK4 probe/system stepper and the alternating
lattice sum behind the oscillatory wavefunction family.  Semantics match
``_kernels_py`` exactly; that module is the import-time fallback."""

from libc.math cimport cos, ceil, log2, fabs

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "cython"


cdef inline double _g(double y, double c) nogil:
    return (1.0 + y * c) / (1.0 + 2.0 * y * c + y * y)


def sigma_lattice_sum(x, double phi, weights, double y_start=4.0,
                      double x_switch=1e-3):
    """See ``_kernels_py.sigma_lattice_sum``."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xa = \
        np.ascontiguousarray(np.atleast_1d(x), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wa = \
        np.ascontiguousarray(weights, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(xa.shape[0])
    cdef Py_ssize_t npts = xa.shape[0]
    cdef Py_ssize_t n_acc = wa.shape[0]
    cdef double c = cos(phi)
    cdef Py_ssize_t i, n, k, m
    cdef double xv, acc, sign, tail
    with nogil:
        for i in range(npts):
            xv = xa[i]
            if xv <= x_switch:
                m = 0
            else:
                m = <Py_ssize_t>ceil(y_start / xv)
            acc = 0.0
            sign = 1.0
            for n in range(1, m + 1):
                acc += sign * _g(n * xv, c)
                sign = -sign
            tail = 0.0
            for k in range(n_acc):
                tail += wa[k] * _g((m + 1 + k) * xv, c)
            acc += sign * tail
            out[i] = acc
    return out


def rk4_trajectory(y0, double dt, Py_ssize_t n_steps, double blowup=1e12):
    """See ``_kernels_py.rk4_trajectory``."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((n_steps + 1, 5))
    cdef double x = y0[0], v = y0[1], w = y0[2], u = y0[3], p = y0[4]
    cdef double h = dt
    cdef double ax1, av1, aw1, au1, ap1
    cdef double ax2, av2, aw2, au2, ap2
    cdef double ax3, av3, aw3, au3, ap3
    cdef double ax4, av4, aw4, au4, ap4
    cdef double x2, v2, w2, u2, p2
    cdef double x3, v3, w3, u3, p3
    cdef double x4, v4, w4, u4, p4
    cdef Py_ssize_t i
    cdef Py_ssize_t status = -1
    out[0, 0] = x
    out[0, 1] = v
    out[0, 2] = w
    out[0, 3] = u
    out[0, 4] = p
    with nogil:
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
            out[i, 0] = x
            out[i, 1] = v
            out[i, 2] = w
            out[i, 3] = u
            out[i, 4] = p
            if (fabs(x) > blowup or fabs(v) > blowup or fabs(w) > blowup
                    or fabs(u) > blowup or fabs(p) > blowup):
                status = i
                break
    return out, status
