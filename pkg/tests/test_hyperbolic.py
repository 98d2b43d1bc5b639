import math

import numpy as np
import pytest

import hyperzeta as hz
from hyperzeta.errors import EvaluationError, QuadratureError, TruncationError
from hyperzeta.hyperbolic import Axis, GridSpec, WaveGrid

SQRT_2PI = math.sqrt(2 * math.pi)


# ------------------------------------------------------------------- grids

def test_gridspec_validation():
    with pytest.raises(ValueError):
        GridSpec(1.0, 1.0, 64, Axis.ETA_LINE)          # empty
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, 8, Axis.X_HALFLINE)         # too few points
    with pytest.raises(ValueError):
        GridSpec(0.0, 1.0, 100, Axis.ETA_LINE)         # not a power of two
    with pytest.raises(ValueError):
        GridSpec(-1.0, 1.0, 64, Axis.X_HALFLINE)       # below the half-line
    spec = GridSpec(0.1, 20.0, 19901, Axis.X_HALFLINE)  # non-FFT axis: any n
    assert abs(spec.step - (20.0 - 0.1) / 19900) < 1e-18


def test_wavegrid_shape_check():
    spec = GridSpec(-1.0, 1.0, 64, Axis.ETA_LINE)
    with pytest.raises(ValueError):
        WaveGrid(spec, np.zeros(32))
    g = WaveGrid.tagged(spec, np.ones(64))
    assert abs(g.norm_tag - 2.0) < 1e-12      # trapezoid of |1|^2 over [-1,1]


def test_renormalized():
    spec = GridSpec(-1.0, 1.0, 64, Axis.ETA_LINE)
    g = hz.renormalized(WaveGrid.tagged(spec, 3.0 * np.ones(64)))
    assert abs(g.norm_tag - 1.0) < 1e-12
    with pytest.raises(ValueError):
        hz.renormalized(WaveGrid.tagged(spec, np.zeros(64)))


# -------------------------------------------------------- eta representation

def test_to_eta_exponential():
    spec = GridSpec(-10.0, 5.0, 256, Axis.ETA_LINE)
    g = hz.to_eta_representation(lambda x: np.exp(-x), spec)
    eta = spec.points()
    ref = np.exp(eta / 2 - np.exp(eta))
    assert np.abs(g.values - ref).max() < 1e-15


def test_to_eta_inverse_sqrt_is_flat():
    spec = GridSpec(-5.0, 5.0, 128, Axis.ETA_LINE)
    g = hz.to_eta_representation(lambda x: x ** -0.5, spec)
    assert np.abs(g.values - 1.0).max() < 1e-13


def test_to_eta_norm_preservation(psi_zeta_bar):
    assert abs(psi_zeta_bar.norm_tag - 1.0) <= 1e-6


def test_to_eta_failures():
    spec = GridSpec(-5.0, 5.0, 64, Axis.ETA_LINE)
    with pytest.raises(EvaluationError):
        hz.to_eta_representation(
            lambda x: np.where(x < 1, np.nan, 1.0), spec)

    def broken(x):
        raise RuntimeError("no value here")
    with pytest.raises(EvaluationError):
        hz.to_eta_representation(broken, spec)
    with pytest.raises(ValueError):
        hz.to_eta_representation(lambda x: x, GridSpec(0, 1, 64, Axis.X_HALFLINE))


# --------------------------------------------------------------- transform

def test_mellin_exponential_matches_gamma():
    g = hz.to_eta_representation(lambda x: np.exp(-x), hz.default_eta_spec())
    out = hz.mellin_critical(g)
    p = out.spec.points()
    mask = np.abs(p) <= 20.0
    ref = np.array([hz.gamma_complex(complex(0.5, -pp))
                    for pp in p[mask]]) / SQRT_2PI
    err = np.abs(out.values[mask] - ref)
    assert err.max() <= 1e-7 * np.abs(ref).max()


def test_mellin_unit_indicator():
    """psi = 1 on [0,1]: transform is (1/sqrt(2 pi)) / (1/2 - i p).

    The x-space jump caps the quadrature accuracy well below the smooth
    cases, so the tolerance here is milli-scale.
    """
    g = hz.to_eta_representation(
        lambda x: (x <= 1.0).astype(complex), hz.default_eta_spec())
    out = hz.mellin_critical(g)
    p = out.spec.points()
    mask = np.abs(p) <= 10.0
    ref = (1.0 / SQRT_2PI) / (0.5 - 1j * p[mask])
    assert np.abs(out.values[mask] - ref).max() < 1e-3


def test_mellin_edge_guard():
    spec = GridSpec(-10.0, 10.0, 1024, Axis.ETA_LINE)
    g = hz.to_eta_representation(lambda x: np.exp(-x), spec)
    with pytest.raises(TruncationError):
        hz.mellin_critical(g)


def test_mellin_values_at_matches_grid(psi_zeta_bar, psi_zeta_momentum):
    p = psi_zeta_momentum.spec.points()
    sel = np.linspace(10, len(p) - 10, 7).astype(int)
    direct = hz.mellin_values_at(psi_zeta_bar, p[sel])
    assert np.abs(direct - psi_zeta_momentum.values[sel]).max() < 1e-12


def test_mellin_exponential_family_invariant(rng):
    """a e^(-bx) transforms to a b^(-s) Gamma(s) at s = 1/2 - i p."""
    spec = hz.default_eta_spec()
    for _ in range(10):
        a = rng.uniform(0.5, 2.0)
        b = rng.uniform(0.5, 3.0)
        out = hz.mellin_critical(
            hz.to_eta_representation(lambda x: a * np.exp(-b * x), spec))
        p = out.spec.points()
        mask = np.abs(p) <= 15.0
        s = 0.5 - 1j * p[mask]
        ref = a * np.exp(-s * math.log(b)) * np.array(
            [hz.gamma_complex(sv) for sv in s]) / SQRT_2PI
        assert np.abs(out.values[mask] - ref).max() < 1e-7


def test_mellin_linearity():
    spec = GridSpec(-30.0, 30.0, 4096, Axis.ETA_LINE)
    g1 = hz.to_eta_representation(lambda x: np.exp(-x), spec)
    g2 = hz.to_eta_representation(lambda x: np.exp(-2.0 * x) * x, spec)
    a, b = 0.7 - 0.2j, -1.1 + 0.4j
    combo = WaveGrid(spec, a * g1.values + b * g2.values)
    lhs = hz.mellin_critical(combo).values
    rhs = a * hz.mellin_critical(g1).values + b * hz.mellin_critical(g2).values
    scale = np.abs(rhs).max()
    assert np.abs(lhs - rhs).max() <= 1e-12 * max(scale, 1.0)


def test_mellin_dilation_modulus(rng):
    """|<p|psi_lam>| = |<p|psi>| for psi_lam(x) = sqrt(lam) psi(lam x)."""
    spec = hz.default_eta_spec()
    base = hz.mellin_critical(
        hz.to_eta_representation(lambda x: np.exp(-x), spec))
    for lam in (math.exp(0.1), 1.7):
        scaled = hz.mellin_critical(hz.to_eta_representation(
            lambda x: math.sqrt(lam) * np.exp(-lam * x), spec))
        assert np.abs(np.abs(scaled.values) - np.abs(base.values)).max() < 1e-8


# -------------------------------------------------------- direct quadrature

def test_quadrature_gamma_point():
    got = hz.mellin_integral_direct(lambda t: np.exp(-t), 2.0)
    assert abs(got - 1.0) < 1e-10


def test_quadrature_fermi_kernel():
    got = hz.mellin_integral_direct(lambda t: 1.0 / (np.exp(t) + 1.0), 2.0)
    assert abs(got - math.pi ** 2 / 12.0) < 1e-10


def test_quadrature_beta_integral():
    got = hz.mellin_integral_direct(lambda t: 1.0 / (1.0 + t), 0.5)
    assert abs(got - math.pi) < 1e-9


def test_quadrature_divergent_raises():
    with pytest.raises(QuadratureError):
        hz.mellin_integral_direct(lambda t: 1.0 / (1.0 + t), 2.0)


def test_quad_config_validation():
    with pytest.raises(ValueError):
        hz.QuadConfig(abs_tol=0.0)


# ---------------------------------------------------------------- parseval

def test_parseval_exponential():
    spec = hz.default_eta_spec()
    g = hz.to_eta_representation(lambda x: math.sqrt(2.0) * np.exp(-x), spec)
    assert abs(g.norm_tag - 1.0) < 1e-9
    out = hz.mellin_critical(g)
    assert hz.parseval_check(g.norm_tag, out) <= 1e-6


def test_parseval_zero_state():
    spec = GridSpec(-20.0, 20.0, 1024, Axis.ETA_LINE)
    out = hz.mellin_critical(WaveGrid.tagged(spec, np.zeros(1024)))
    assert hz.parseval_check(0.0, out) == 0.0


def test_parseval_corpus(psi_zeta_bar, psi_zeta_momentum):
    assert hz.parseval_check(psi_zeta_bar.norm_tag, psi_zeta_momentum) <= 1e-5
