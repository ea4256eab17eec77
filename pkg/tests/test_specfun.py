import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import legendre as npleg
from scipy import special

from vecslepian.quadrature import gauss_legendre
from vecslepian.specfun import (
    JacobiParams,
    SphHarmIndex,
    assoc_legendre,
    assoc_legendre_deriv,
    jacobi_eval,
    jacobi_table,
    legendre_deriv_table,
    legendre_table,
    real_sph_harm,
    sph_norm,
    trig_factor,
    trig_factor_dphi,
)


def rodrigues_assoc(n, mu, t):
    """(1 - t^2)^(mu/2) d^mu/dt^mu P_n(t) from numpy's Legendre series."""
    c = np.zeros(n + 1)
    c[n] = 1.0
    return (1.0 - t * t) ** (mu / 2.0) * npleg.legval(t, npleg.legder(c, mu)) if mu else npleg.legval(t, c)


# Jacobi polynomials


def test_jacobi_degree_zero_is_one():
    assert jacobi_eval(JacobiParams(0, 0.0, 2.0), 0.3) == 1.0


def test_jacobi_degree_one_closed_form():
    assert jacobi_eval(JacobiParams(1, 0.0, 2.0), 0.0) == pytest.approx(-1.0, abs=1e-15)


def test_jacobi_endpoint_value():
    assert jacobi_eval(JacobiParams(5, 0.0, 2.0), 1.0) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("family", ["I", "II", "III"])
def test_jacobi_endpoint_normalisation_families(family):
    # P_m^{(0, b)}(1) = binom(m, m) = 1 for every family used by the bases
    for n in range(13):
        beta = {"I": n + 0.5, "II": 2.0, "III": n - 0.5}[family]
        if beta <= -1:
            continue
        tab = jacobi_table(30, 0.0, beta, 1.0)
        assert np.allclose(tab, 1.0, atol=1e-12)


@given(
    m=st.integers(0, 20),
    beta=st.sampled_from([2.0, 0.5, 1.5, 6.5, 12.5, -0.5, 11.5]),
    u=st.floats(-1.0, 1.0),
)
@settings(max_examples=200, deadline=None)
def test_jacobi_matches_scipy(m, beta, u):
    ours = jacobi_table(m, 0.0, beta, u)[m]
    ref = special.eval_jacobi(m, 0.0, beta, u)
    assert ours == pytest.approx(ref, rel=1e-11, abs=1e-11)


def test_jacobi_params_validation():
    with pytest.raises(ValueError):
        JacobiParams(-1, 0.0, 2.0)
    with pytest.raises(ValueError):
        JacobiParams(1, 0.0, -1.0)


# associated Legendre functions


def test_assoc_legendre_examples():
    assert assoc_legendre(0, 0, 0.7) == 1.0
    assert assoc_legendre(1, 0, 0.4) == pytest.approx(0.4)
    assert assoc_legendre(1, 1, 0.5) == pytest.approx(math.sqrt(0.75), abs=1e-15)


@given(n=st.integers(0, 14), data=st.data(), t=st.floats(-1.0, 1.0))
@settings(max_examples=300, deadline=None)
def test_assoc_legendre_matches_rodrigues(n, data, t):
    mu = data.draw(st.integers(0, n))
    ref = rodrigues_assoc(n, mu, t)
    scale = max(1.0, abs(ref))
    assert abs(assoc_legendre(n, mu, t) - ref) <= 1e-11 * scale


def test_no_condon_shortley_phase():
    # scipy's lpmv carries (-1)^mu
    t = np.linspace(-0.95, 0.95, 7)
    for n in range(1, 8):
        for mu in range(n + 1):
            assert np.allclose(assoc_legendre(n, mu, t), (-1) ** mu * special.lpmv(mu, n, t), rtol=1e-12, atol=1e-12)


def test_legendre_orthogonality():
    x, w = gauss_legendre(60)
    tab = legendre_table(12, x)
    gram = np.einsum("ak,bk,k->ab", tab[:, 0], tab[:, 0], w)
    assert np.allclose(gram, np.diag(2.0 / (2 * np.arange(13) + 1)), atol=1e-12)


def test_assoc_legendre_order_check():
    with pytest.raises(ValueError):
        assoc_legendre(2, 3, 0.1)


# derivatives


def test_deriv_examples():
    assert assoc_legendre_deriv(1, 0, 0.2) == pytest.approx(1.0)
    assert assoc_legendre_deriv(2, 0, 0.0) == pytest.approx(0.0, abs=1e-15)


def test_deriv_matches_finite_differences():
    rng = np.random.default_rng(3)
    h = 1e-6
    for _ in range(300):
        n = int(rng.integers(0, 13))
        mu = int(rng.integers(0, n + 1))
        t = float(rng.uniform(-0.99, 0.99))
        fd = (assoc_legendre(n, mu, t + h) - assoc_legendre(n, mu, t - h)) / (2 * h)
        d = assoc_legendre_deriv(n, mu, t)
        assert abs(d - fd) <= 1e-6 * max(1.0, abs(d))


def test_deriv_endpoint_limits():
    for t0 in (-1.0, 1.0):
        d = legendre_deriv_table(8, np.array([t0]))
        for n in range(9):
            for mu in (0, 2):
                if mu > n:
                    continue
                # one-sided difference towards the interior
                h = 1e-6
                inner = t0 - math.copysign(h, t0)
                fd = (assoc_legendre(n, mu, t0) - assoc_legendre(n, mu, inner)) / (t0 - inner)
                assert d[n, mu, 0] == pytest.approx(fd, rel=1e-4, abs=1e-4)
            for mu in range(3, n + 1):
                assert d[n, mu, 0] == 0.0


def test_deriv_rejects_unbounded_endpoint():
    with pytest.raises(ValueError):
        assoc_legendre_deriv(3, 1, 1.0)


# real spherical harmonics


def test_sph_harm_constant():
    assert real_sph_harm(SphHarmIndex(0, 0), 1.3, -0.2) == pytest.approx(1.0 / math.sqrt(4 * math.pi))


def test_sph_harm_degree_one():
    assert real_sph_harm((1, 0), 0.0, 0.5) == pytest.approx(math.sqrt(3 / (4 * math.pi)) * 0.5, abs=1e-7)


def test_sph_norm_factorials():
    for n in range(13):
        for j in range(-n, n + 1):
            ref = math.sqrt((2 * n + 1) / 2 * math.factorial(n - abs(j)) / math.factorial(n + abs(j)))
            assert sph_norm(n, j) == pytest.approx(ref, rel=1e-14)


def test_trig_factor_convention():
    phi = 0.37
    assert trig_factor(-2, phi) == pytest.approx(math.sqrt(2) * math.cos(2 * phi))
    assert trig_factor(3, phi) == pytest.approx(math.sqrt(2) * math.sin(3 * phi))
    assert trig_factor(0, phi) == 1.0


def test_trig_factor_derivative_sign():
    h = 1e-6
    for j in range(-5, 6):
        for phi in (0.1, 1.7, 4.0):
            fd = (trig_factor(j, phi + h) - trig_factor(j, phi - h)) / (2 * h)
            assert trig_factor_dphi(j, phi) == pytest.approx(fd, abs=1e-8)


def test_sph_harm_orthonormal():
    N = 12
    x, wt = gauss_legendre(40)
    nphi = 64
    phi = 2 * math.pi * np.arange(nphi) / nphi
    P, T = np.meshgrid(phi, x, indexing="ij")
    W = (2 * math.pi / nphi) * np.broadcast_to(wt, P.shape)
    idx = [(n, j) for n in range(N + 1) for j in range(-n, n + 1)]
    Y = np.array([real_sph_harm(k, P, T).ravel() for k in idx])
    gram = (Y * W.ravel()) @ Y.T
    assert np.max(np.abs(gram - np.eye(len(idx)))) < 1e-10


def test_sph_index_validation():
    with pytest.raises(ValueError):
        SphHarmIndex(2, 3)
