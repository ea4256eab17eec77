"""Scalar special functions used by the ball bases.

Conventions
-----------
* Associated Legendre functions carry **no** Condon-Shortley phase:
  ``P_{n,mu}(t) = (1 - t^2)^{mu/2} (d/dt)^mu P_n(t)``.
* Real fully normalised spherical harmonics

      Y_{n,j}(phi, t) = b_{n,j} P_{n,|j|}(t) c_j(phi) / sqrt(2 pi)

  with ``c_j = sqrt(2) cos(j phi)`` for ``j < 0``, ``1`` for ``j = 0`` and
  ``sqrt(2) sin(j phi)`` for ``j > 0``.

All array functions broadcast over ``t``/``phi`` and return float64 arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "JacobiParams",
    "SphHarmIndex",
    "jacobi_eval",
    "jacobi_table",
    "assoc_legendre",
    "assoc_legendre_deriv",
    "legendre_table",
    "legendre_deriv_table",
    "sph_norm",
    "trig_factor",
    "trig_factor_dphi",
    "real_sph_harm",
]


@dataclass(frozen=True)
class JacobiParams:
    m: int
    alpha: float
    beta_p: float

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"Jacobi degree must be non-negative, got {self.m}")
        if self.alpha < 0 or self.beta_p <= -1:
            raise ValueError(f"unsupported Jacobi parameters ({self.alpha}, {self.beta_p})")


@dataclass(frozen=True)
class SphHarmIndex:
    n: int
    j: int

    def __post_init__(self):
        if self.n < 0 or abs(self.j) > self.n:
            raise ValueError(f"invalid spherical harmonic index (n={self.n}, j={self.j})")


def jacobi_table(mmax, alpha, beta, u):
    """Jacobi polynomials ``P_m^{(alpha, beta)}(u)`` for ``m = 0 .. mmax``.

    Parameters
    ----------
    mmax : int
        Highest degree.
    alpha, beta : float
        Jacobi parameters.
    u : array_like
        Evaluation points in [-1, 1].

    Returns
    -------
    ndarray, shape (mmax + 1,) + u.shape
    """
    u = np.asarray(u, dtype=float)
    out = np.empty((mmax + 1,) + u.shape)
    out[0] = 1.0
    if mmax == 0:
        return out
    out[1] = (alpha + 1) + (alpha + beta + 2) * (u - 1) / 2
    ab = alpha + beta
    a2b2 = alpha * alpha - beta * beta
    for m in range(2, mmax + 1):
        c = 2 * m + ab
        a1 = 2 * m * (m + ab) * (c - 2)
        a2 = (c - 1) * a2b2
        a3 = (c - 2) * (c - 1) * c
        a4 = 2 * (m + alpha - 1) * (m + beta - 1) * c
        out[m] = ((a2 + a3 * u) * out[m - 1] - a4 * out[m - 2]) / a1
    return out


def jacobi_eval(params, u):
    """Evaluate a single Jacobi polynomial; ``params`` is a :class:`JacobiParams`."""
    return jacobi_table(params.m, params.alpha, params.beta_p, u)[params.m]


def legendre_table(nmax, t):
    """All ``P_{n,mu}(t)`` for ``0 <= mu <= n <= nmax``.

    Upward recurrence in ``n`` at fixed order ``mu``, seeded from the sectoral
    value ``(2mu - 1)!! (1 - t^2)^{mu/2}``.  Entries with ``mu > n`` are zero.

    Returns
    -------
    ndarray, shape (nmax + 1, nmax + 1) + t.shape, indexed ``[n, mu]``
    """
    t = np.asarray(t, dtype=float)
    s = np.sqrt(np.clip(1.0 - t * t, 0.0, None))
    out = np.zeros((nmax + 1, nmax + 1) + t.shape)
    sect = np.ones_like(t)
    for mu in range(nmax + 1):
        if mu > 0:
            sect = sect * (2 * mu - 1) * s
        out[mu, mu] = sect
        if mu + 1 <= nmax:
            out[mu + 1, mu] = (2 * mu + 1) * t * sect
        for n in range(mu + 2, nmax + 1):
            out[n, mu] = ((2 * n - 1) * t * out[n - 1, mu] - (n + mu - 1) * out[n - 2, mu]) / (n - mu)
    return out


def _endpoint_deriv(n, mu, t0):
    # limit of d/dt P_{n,mu} at t0 = +-1; only mu in {0, 2} are nonzero there
    sign = 1.0 if t0 > 0 else -1.0
    if mu == 0:
        return sign ** (n + 1) * n * (n + 1) / 2.0
    if mu == 2 and n >= 2:
        # d/dt[(1 - t^2) P_n''] = -2 t P_n''(t) at the endpoints
        d2 = (n - 1) * n * (n + 1) * (n + 2) / 8.0
        return -2.0 * sign * sign ** n * d2
    return 0.0


def legendre_deriv_table(nmax, t, table=None):
    """``d/dt P_{n,mu}(t)`` for all ``0 <= mu <= n <= nmax``.

    Uses ``(1 - t^2) P'_{n,mu} = (n + mu) P_{n-1,mu} - n t P_{n,mu}``.  At
    ``t = +-1`` the finite limits are substituted; for ``mu == 1`` the
    derivative is unbounded there and NaN is returned.
    """
    t = np.asarray(t, dtype=float)
    if table is None:
        table = legendre_table(nmax, t)
    one_m = 1.0 - t * t
    at_end = one_m <= 0.0
    safe = np.where(at_end, 1.0, one_m)
    out = np.zeros_like(table)
    for mu in range(nmax + 1):
        for n in range(mu, nmax + 1):
            prev = table[n - 1, mu] if n - 1 >= mu else 0.0
            out[n, mu] = ((n + mu) * prev - n * t * table[n, mu]) / safe
    if np.any(at_end):
        for idx in zip(*np.nonzero(at_end)):
            t0 = t[idx]
            for mu in range(nmax + 1):
                for n in range(mu, nmax + 1):
                    val = np.nan if mu == 1 else _endpoint_deriv(n, mu, t0)
                    out[(n, mu) + idx] = val
    return out


def _check_order(n, mu):
    if not (0 <= mu <= n):
        raise ValueError(f"need 0 <= mu <= n, got n={n}, mu={mu}")


def assoc_legendre(n, mu, t):
    """Associated Legendre function ``P_{n,mu}(t)`` (no Condon-Shortley phase)."""
    _check_order(n, mu)
    return legendre_table(n, t)[n, mu]


def assoc_legendre_deriv(n, mu, t):
    """Derivative ``d/dt P_{n,mu}(t)`` from the derivative recurrence.

    Raises
    ------
    ValueError
        If ``mu == 1`` and ``t`` hits an endpoint, where the derivative is
        unbounded.
    """
    _check_order(n, mu)
    t_arr = np.asarray(t, dtype=float)
    if mu == 1 and np.any(np.abs(t_arr) >= 1.0):
        raise ValueError("derivative of P_{n,1} is unbounded at t = +-1")
    return legendre_deriv_table(n, t_arr)[n, mu]


def sph_norm(n, j):
    """Normalisation ``b_{n,j} = sqrt((2n+1)/2 * (n-|j|)!/(n+|j|)!)``."""
    mu = abs(j)
    ratio = 1.0
    # (n-mu)!/(n+mu)! as a product of ratios
    for k in range(n - mu + 1, n + mu + 1):
        ratio /= k
    return math.sqrt((2 * n + 1) / 2.0 * ratio)


def trig_factor(j, phi):
    """The longitudinal factor ``c_j(phi)``."""
    phi = np.asarray(phi, dtype=float)
    if j < 0:
        return math.sqrt(2.0) * np.cos(j * phi)
    if j == 0:
        return np.ones_like(phi)
    return math.sqrt(2.0) * np.sin(j * phi)


def trig_factor_dphi(j, phi):
    """``d/dphi c_j(phi)``, which equals ``j * c_{-j}(phi)``."""
    return j * trig_factor(-j, phi)


def real_sph_harm(idx, phi, t):
    """Real fully normalised spherical harmonic ``Y_{n,j}`` at ``(phi, t)``.

    Parameters
    ----------
    idx : SphHarmIndex or tuple of (n, j)
    phi : array_like
        Longitude.
    t : array_like
        Polar distance ``cos(theta)``.
    """
    n, j = (idx.n, idx.j) if isinstance(idx, SphHarmIndex) else idx
    _check_order(n, abs(j))
    p = legendre_table(n, t)[n, abs(j)]
    return sph_norm(n, j) * p * trig_factor(j, phi) / math.sqrt(2 * math.pi)
