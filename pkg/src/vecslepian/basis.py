"""Vector basis fields on the ball and their flat enumeration.

A basis field of system ``sys`` is ``F^sys_{m,n}(r) y^{(i)}_{n,j}(xi)`` with
``i = 1`` normal (``xi Y``), ``i = 2`` surface gradient and ``i = 3`` surface
curl.  Coefficient vectors use one canonical flat order: type ``i``
ascending, then ``m``, then ``n``, then ``j`` from ``-n`` to ``n``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .specfun import jacobi_table, legendre_deriv_table, legendre_table, sph_norm, trig_factor

__all__ = [
    "SystemId",
    "Bandlimit",
    "BasisIndex",
    "BallGeometry",
    "BallPoint",
    "DomainError",
    "POLE_MARGIN",
    "flat_index",
    "unflat_index",
    "iter_indices",
    "radial_eval",
    "radial_table",
    "local_frame",
    "to_cartesian",
    "from_cartesian",
    "vector_sph_harm",
    "vsh_table",
    "basis_field_eval",
    "synthesize",
    "synthesize_grid",
]

POLE_MARGIN = 1e-12
_SQRT_2PI = math.sqrt(2.0 * math.pi)


class DomainError(ValueError):
    """Evaluation requested at a point where the basis field is undefined."""


class SystemId(str, enum.Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown basis system {value!r}; expected I, II or III") from None


@dataclass(frozen=True)
class Bandlimit:
    M: int
    N: int

    def __post_init__(self):
        if self.M < 0:
            raise ValueError(f"M must be >= 0, got {self.M}")
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")

    @property
    def n_normal(self):
        return (self.M + 1) * (self.N + 1) ** 2

    @property
    def n_per_tangential(self):
        return (self.M + 1) * ((self.N + 1) ** 2 - 1)

    @property
    def n_tangential(self):
        return 2 * self.n_per_tangential

    @property
    def Z(self):
        return (self.M + 1) * (3 * (self.N + 1) ** 2 - 2)


class BasisIndex(NamedTuple):
    i: int
    m: int
    n: int
    j: int


@dataclass(frozen=True)
class BallGeometry:
    beta: float = 1.0

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"ball radius must be positive, got {self.beta}")


@dataclass(frozen=True)
class BallPoint:
    r: float
    phi: float
    t: float


def _check_index(b, idx):
    i, m, n, j = idx
    if i not in (1, 2, 3):
        raise ValueError(f"type must be 1, 2 or 3, got {i}")
    if not 0 <= m <= b.M:
        raise ValueError(f"radial degree {m} outside 0..{b.M}")
    lo = 0 if i == 1 else 1
    if not lo <= n <= b.N:
        raise ValueError(f"angular degree {n} outside {lo}..{b.N} for type {i}")
    if abs(j) > n:
        raise ValueError(f"order {j} exceeds degree {n}")


def flat_index(b, idx):
    """Position of ``idx = (i, m, n, j)`` in the canonical coefficient vector."""
    _check_index(b, idx)
    i, m, n, j = idx
    if i == 1:
        return m * (b.N + 1) ** 2 + n * n + j + n
    per_m = (b.N + 1) ** 2 - 1
    base = b.n_normal + (i - 2) * b.n_per_tangential
    return base + m * per_m + n * n - 1 + j + n


def unflat_index(b, p):
    """Inverse of :func:`flat_index`."""
    if not 0 <= p < b.Z:
        raise ValueError(f"flat index {p} outside [0, {b.Z})")
    if p < b.n_normal:
        i, rest, per_m, shift = 1, p, (b.N + 1) ** 2, 0
    else:
        q = p - b.n_normal
        i = 2 + q // b.n_per_tangential
        rest, per_m, shift = q % b.n_per_tangential, (b.N + 1) ** 2 - 1, 1
    m, k = divmod(rest, per_m)
    k += shift
    n = math.isqrt(k)
    return BasisIndex(i, m, n, k - n * n - n)


def iter_indices(b):
    """All basis indices in canonical order."""
    for i in (1, 2, 3):
        for m in range(b.M + 1):
            for n in range(0 if i == 1 else 1, b.N + 1):
                for j in range(-n, n + 1):
                    yield BasisIndex(i, m, n, j)


def radial_table(sys, M, N, r, geom=None):
    """``F^sys_{m,n}(r)`` for ``m <= M``, ``n <= N``.

    Returns
    -------
    ndarray, shape (M + 1, N + 1) + r.shape
    """
    sys = SystemId.parse(sys)
    beta = (geom or BallGeometry()).beta
    r = np.asarray(r, dtype=float)
    x = r / beta
    out = np.empty((M + 1, N + 1) + r.shape)
    if sys is SystemId.II:
        pm = jacobi_table(M, 0.0, 2.0, 2.0 * x - 1.0)
        norm = np.sqrt((2.0 * np.arange(M + 1) + 3.0) / beta**3)
        out[:] = (norm[:, None] * pm.reshape(M + 1, -1)).reshape((M + 1, 1) + r.shape)
        return out
    u = 2.0 * x * x - 1.0
    for n in range(N + 1):
        if sys is SystemId.I:
            jb, power, c0 = n + 0.5, n, 2 * n + 3
        else:
            jb, power, c0 = n - 0.5, n - 1, 2 * n + 1
        pm = jacobi_table(M, 0.0, jb, u)
        with np.errstate(divide="ignore", invalid="ignore"):
            damp = x**power
        norm = np.sqrt((4.0 * np.arange(M + 1) + c0) / beta**3)
        out[:, n] = norm.reshape((M + 1,) + (1,) * r.ndim) * pm * damp
    return out


def radial_eval(sys, m, n, r, geom=None):
    """Radial factor ``F^sys_{m,n}(r)`` of a basis field.

    Raises
    ------
    DomainError
        For system III with ``n = 0`` at ``r = 0``.
    """
    sys = SystemId.parse(sys)
    geom = geom or BallGeometry()
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0) or np.any(r_arr > geom.beta * (1 + 1e-14)):
        raise DomainError(f"radius outside [0, {geom.beta}]")
    if sys is SystemId.III and n == 0 and np.any(r_arr == 0):
        raise DomainError("system III with n = 0 is singular at the origin")
    return radial_table(sys, m, n, r_arr, geom)[m, n]


def local_frame(phi, t):
    """Unit vectors ``(e_r, e_phi, e_t)`` at ``(phi, t)``, each with trailing axis 3."""
    phi = np.asarray(phi, dtype=float)
    t = np.asarray(t, dtype=float)
    s = np.sqrt(np.clip(1.0 - t * t, 0.0, None))
    c, sn = np.cos(phi), np.sin(phi)
    e_r = np.stack(np.broadcast_arrays(s * c, s * sn, t), axis=-1)
    e_phi = np.stack(np.broadcast_arrays(-sn, c, np.zeros_like(t * phi)), axis=-1)
    e_t = np.stack(np.broadcast_arrays(-t * c, -t * sn, s), axis=-1)
    return e_r, e_phi, e_t


def to_cartesian(r, phi, t):
    """Cartesian coordinates of ``x(r, phi, t)``; trailing axis of length 3."""
    e_r = local_frame(phi, t)[0]
    return np.asarray(r, dtype=float)[..., None] * e_r


def from_cartesian(x):
    """Inverse of :func:`to_cartesian`: returns ``(r, phi, t)`` arrays."""
    x = np.asarray(x, dtype=float)
    r = np.linalg.norm(x, axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(r > 0, x[..., 2] / np.where(r > 0, r, 1.0), 1.0)
    t = np.clip(t, -1.0, 1.0)
    phi = np.mod(np.arctan2(x[..., 1], x[..., 0]), 2.0 * np.pi)
    return r, phi, t


def _angular_index(N):
    ns = np.concatenate([np.full(2 * n + 1, n) for n in range(N + 1)])
    js = np.concatenate([np.arange(-n, n + 1) for n in range(N + 1)])
    return ns, js


def vsh_table(N, phi, t, types=(1, 2, 3)):
    """All vector spherical harmonics up to degree ``N`` at points ``(phi, t)``.

    ``phi`` and ``t`` are broadcast to a common 1-D shape ``(npts,)``.

    Returns
    -------
    ndarray, shape (3, (N + 1)**2, npts, 3)
        Indexed ``[i - 1, n*n + n + j, point, component]``.  Slots with
        ``n = 0`` are zero for the tangential types, as are types not listed
        in ``types``.
    """
    phi, t = np.broadcast_arrays(np.asarray(phi, dtype=float).ravel(), np.asarray(t, dtype=float).ravel())
    tangential = any(i in types for i in (2, 3))
    if tangential and np.any(np.abs(t) > 1.0 - POLE_MARGIN):
        raise DomainError("tangential vector spherical harmonics are not evaluated at the poles")
    ns, js = _angular_index(N)
    K = ns.size
    leg = legendre_table(N, t)
    e_r, e_phi, e_t = local_frame(phi, t)
    out = np.zeros((3, K, t.size, 3))
    s = np.sqrt(np.clip(1.0 - t * t, 0.0, None))
    dleg = legendre_deriv_table(N, t, leg) if tangential else None
    for k in range(K):
        n, j = int(ns[k]), int(js[k])
        mu = abs(j)
        coef = sph_norm(n, j) / _SQRT_2PI
        p = leg[n, mu]
        y = coef * p * trig_factor(j, phi)
        if 1 in types:
            out[0, k] = e_r * y[:, None]
        if n == 0 or not tangential:
            continue
        lam = 1.0 / math.sqrt(n * (n + 1))
        # dY/dphi / sqrt(1-t^2) and sqrt(1-t^2) dY/dt
        dphi = coef * (p / s) * (j * trig_factor(-j, phi))
        dt = coef * s * dleg[n, mu] * trig_factor(j, phi)
        if 2 in types:
            out[1, k] = lam * (e_phi * dphi[:, None] + e_t * dt[:, None])
        if 3 in types:
            out[2, k] = lam * (-e_phi * dt[:, None] + e_t * dphi[:, None])
    return out


def vector_sph_harm(i, idx, phi, t):
    """Single vector spherical harmonic ``y^{(i)}_{n,j}`` in Cartesian components.

    ``idx`` is ``(n, j)`` or a :class:`~vecslepian.specfun.SphHarmIndex`.
    Returns an array of shape ``phi.shape + (3,)``.
    """
    n, j = (idx.n, idx.j) if hasattr(idx, "n") else idx
    if i not in (1, 2, 3) or abs(j) > n or (i > 1 and n < 1):
        raise ValueError(f"invalid vector harmonic (i={i}, n={n}, j={j})")
    phi_b, t_b = np.broadcast_arrays(np.asarray(phi, dtype=float), np.asarray(t, dtype=float))
    tab = vsh_table(n, phi_b, t_b, types=(i,))
    return tab[i - 1, n * n + n + j].reshape(phi_b.shape + (3,))


def _check_radii(sys, r, geom):
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r > geom.beta * (1 + 1e-14)):
        raise DomainError(f"radius outside [0, {geom.beta}]")
    if sys is not SystemId.I and np.any(r == 0):
        raise DomainError(f"system {sys.value} is not evaluated at the origin")


def basis_field_eval(sys, geom, idx, p):
    """Evaluate ``g^{(sys, i)}_{m,n,j}`` at a :class:`BallPoint`; returns a 3-vector."""
    sys = SystemId.parse(sys)
    i, m, n, j = idx
    if i not in (1, 2, 3) or m < 0 or abs(j) > n or (i > 1 and n < 1):
        raise ValueError(f"invalid basis index {tuple(idx)}")
    _check_radii(sys, p.r, geom)
    F = radial_eval(sys, m, n, p.r, geom)
    return float(F) * vector_sph_harm(i, (n, j), p.phi, p.t)


def _coeff_cube(b, coeffs):
    """Reshape flat coefficients to ``(ncols, 3, M+1, (N+1)**2)``."""
    c = np.asarray(coeffs, dtype=float)
    if c.shape[0] != b.Z:
        raise ValueError(f"coefficient vector has length {c.shape[0]}, expected Z = {b.Z}")
    c2 = c.reshape(b.Z, -1)
    ncol = c2.shape[1]
    K = (b.N + 1) ** 2
    cube = np.zeros((ncol, 3, b.M + 1, K))
    cube[:, 0] = c2[: b.n_normal].T.reshape(ncol, b.M + 1, K)
    tan = c2[b.n_normal :].T.reshape(ncol, 2, b.M + 1, K - 1)
    cube[:, 1:, :, 1:] = tan
    return cube


def _points_arrays(points):
    if isinstance(points, tuple) and len(points) == 3:
        r, phi, t = (np.asarray(v, dtype=float).ravel() for v in points)
        return np.broadcast_arrays(r, phi, t)
    pts = list(points)
    return (
        np.array([p.r for p in pts], dtype=float),
        np.array([p.phi for p in pts], dtype=float),
        np.array([p.t for p in pts], dtype=float),
    )


def synthesize(sys, geom, b, coeffs, points, chunk=2048):
    """Evaluate a bandlimited field ``sum_p coeffs[p] g_p`` at scattered points.

    Parameters
    ----------
    sys, geom, b :
        Basis system, ball geometry and bandlimit.
    coeffs : array_like, shape (Z,) or (Z, k)
        Coefficients in canonical flat order.
    points : iterable of BallPoint, or tuple of arrays ``(r, phi, t)``

    Returns
    -------
    ndarray, shape (npts, 3) or (k, npts, 3)
    """
    sys = SystemId.parse(sys)
    single = np.ndim(coeffs) == 1
    cube = _coeff_cube(b, coeffs)
    r, phi, t = _points_arrays(points)
    _check_radii(sys, r, geom)
    ns, _ = _angular_index(b.N)
    out = np.empty((cube.shape[0], r.size, 3))
    for start in range(0, r.size, chunk):
        sl = slice(start, start + chunk)
        F = radial_table(sys, b.M, b.N, r[sl], geom)[:, ns]  # (M+1, K, p)
        Y = vsh_table(b.N, phi[sl], t[sl])  # (3, K, p, 3)
        G = np.einsum("cimk,mkp->cikp", cube, F, optimize=True)
        out[:, sl] = np.einsum("cikp,ikpx->cpx", G, Y, optimize=True)
    return out[0] if single else out


def synthesize_grid(sys, geom, b, coeffs, r, phi, t):
    """Field values on the product grid ``r x phi x t``.

    Returns
    -------
    ndarray, shape (k, n_r, n_phi, n_t, 3)
    """
    sys = SystemId.parse(sys)
    cube = _coeff_cube(b, coeffs)
    r = np.asarray(r, dtype=float).ravel()
    _check_radii(sys, r, geom)
    P, T = np.meshgrid(np.asarray(phi, dtype=float).ravel(), np.asarray(t, dtype=float).ravel(), indexing="ij")
    ns, _ = _angular_index(b.N)
    F = radial_table(sys, b.M, b.N, r, geom)[:, ns]  # (M+1, K, n_r)
    Y = vsh_table(b.N, P.ravel(), T.ravel())  # (3, K, A, 3)
    G = np.einsum("cimk,mkr->crik", cube, F, optimize=True)
    ncol, K = cube.shape[0], Y.shape[1]
    vals = G.reshape(ncol, r.size, 3 * K) @ Y.reshape(3 * K, -1)
    return vals.reshape((ncol, r.size) + P.shape + (3,))
