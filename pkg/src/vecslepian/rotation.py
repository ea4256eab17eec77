"""Rotation of coefficient vectors by z-y-z Euler angles.

A rotation acts on the span of the degree-``n`` real harmonics through an
orthogonal ``(2n+1) x (2n+1)`` block.  The block is obtained from the complex
Wigner matrix by an explicit change of basis, which is the one place where the
``c_j`` sign convention of the real harmonics enters.  The operators ``xi``,
``grad*`` and ``L*`` commute with rotations, so the same block acts on all
three vector types.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.spatial.transform import Rotation

from .basis import Bandlimit

__all__ = [
    "EulerAngles",
    "wigner_d",
    "real_wigner_block",
    "rotate_coeffs",
    "rotation_matrix",
    "compose",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class EulerAngles:
    """Active z-y-z Euler angles in radians, ``R = Rz(alpha) Ry(beta) Rz(gamma)``.

    Angles are reduced modulo ``2 pi`` on construction.
    """

    alpha: float = 0.0
    beta_angle: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        for name in ("alpha", "beta_angle", "gamma"):
            object.__setattr__(self, name, math.fmod(float(getattr(self, name)), _TWO_PI) % _TWO_PI)

    @classmethod
    def from_degrees(cls, alpha, beta, gamma):
        return cls(math.radians(alpha), math.radians(beta), math.radians(gamma))

    @classmethod
    def from_matrix(cls, R):
        with warnings.catch_warnings():
            # gimbal lock only makes the split between alpha and gamma arbitrary
            warnings.simplefilter("ignore", UserWarning)
            a, b, g = Rotation.from_matrix(np.asarray(R, dtype=float)).as_euler("ZYZ")
        return cls(a, b, g)

    def matrix(self):
        return rotation_matrix(self)

    def as_tuple(self):
        return (self.alpha, self.beta_angle, self.gamma)


def rotation_matrix(angles: EulerAngles) -> np.ndarray:
    """The 3x3 rotation matrix of the Euler angles."""
    return Rotation.from_euler("ZYZ", angles.as_tuple()).as_matrix()


def compose(second: EulerAngles, first: EulerAngles) -> EulerAngles:
    """Euler angles of ``R(second) @ R(first)``."""
    return EulerAngles.from_matrix(rotation_matrix(second) @ rotation_matrix(first))


@lru_cache(maxsize=64)
def _jy_eigen(n):
    m = np.arange(-n, n + 1, dtype=float)
    # J_y = (J_+ - J_-) / (2i) with Condon-Shortley ladder elements
    up = np.sqrt((n - m[:-1]) * (n + m[:-1] + 1.0))
    jy = np.zeros((2 * n + 1, 2 * n + 1), dtype=complex)
    jy[np.arange(1, 2 * n + 1), np.arange(2 * n)] = up / 2j
    jy[np.arange(2 * n), np.arange(1, 2 * n + 1)] = -up / 2j
    _, V = np.linalg.eigh(jy)
    # the spectrum of J_y is exactly -n .. n; use the exact values
    return m, V


@lru_cache(maxsize=256)
def _wigner_d_cached(n, beta):
    m, V = _jy_eigen(n)
    d = ((V * np.exp(-1j * beta * m)) @ V.conj().T).real
    d.setflags(write=False)
    return d


def wigner_d(n, beta):
    """Small Wigner matrix ``d^n_{m'm}(beta)``, rows and columns ordered ``-n .. n``."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    return _wigner_d_cached(int(n), float(beta))


@lru_cache(maxsize=64)
def _real_from_complex(n):
    # rows: real harmonics Y_{n,j}; columns: Condon-Shortley complex Y_n^mu
    U = np.zeros((2 * n + 1, 2 * n + 1), dtype=complex)
    U[n, n] = 1.0
    s = 1.0 / math.sqrt(2.0)
    for mu in range(1, n + 1):
        sign = (-1.0) ** mu
        U[n - mu, n + mu] = sign * s
        U[n - mu, n - mu] = s
        U[n + mu, n + mu] = sign * s / 1j
        U[n + mu, n - mu] = -s / 1j
    U.setflags(write=False)
    return U


def real_wigner_block(n, angles: EulerAngles) -> np.ndarray:
    """Orthogonal block ``W`` with ``Y_{n,j}(R xi) = sum_j' W[j, j'] Y_{n,j'}(xi)``.

    Rows and columns are ordered ``j = -n .. n``.
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    m = np.arange(-n, n + 1)
    a, b, g = angles.as_tuple()
    D = np.exp(-1j * m[:, None] * a) * wigner_d(n, b) * np.exp(-1j * m[None, :] * g)
    U = _real_from_complex(n)
    # Y(R xi) = conj(D(R)) Y(xi) for the complex harmonics
    W = U @ np.conj(D) @ U.conj().T
    return np.ascontiguousarray(W.real)


def _degree_blocks(N, angles):
    return [real_wigner_block(n, angles) for n in range(N + 1)]


def rotate_coeffs(coeffs, angles: EulerAngles, bandlimit: Bandlimit):
    """Coefficients of the rotated field ``x -> R f(R^T x)``.

    Parameters
    ----------
    coeffs : array_like, shape (Z,) or (Z, k), or a SlepianBasis
        Canonical flat coefficients; for a basis all columns are rotated.
    angles : EulerAngles
    bandlimit : Bandlimit

    Returns
    -------
    ndarray of the same shape as the coefficients
    """
    c = np.asarray(getattr(coeffs, "vectors", coeffs), dtype=float)
    b = bandlimit
    if c.ndim not in (1, 2) or c.shape[0] != b.Z:
        raise ValueError(f"coefficient array of shape {c.shape} does not match Z = {b.Z}")
    single = c.ndim == 1
    c2 = c.reshape(b.Z, -1)
    K = (b.N + 1) ** 2
    normal = c2[: b.n_normal].reshape(b.M + 1, K, -1)
    tang = c2[b.n_normal :].reshape(2, b.M + 1, K - 1, -1)
    out_n = np.empty_like(normal)
    out_t = np.empty_like(tang)
    for n, W in enumerate(_degree_blocks(b.N, angles)):
        sl = slice(n * n, (n + 1) ** 2)
        out_n[:, sl] = np.einsum("ab,mbk->mak", W, normal[:, sl])
        if n >= 1:
            sl = slice(n * n - 1, (n + 1) ** 2 - 1)
            out_t[:, :, sl] = np.einsum("ab,imbk->imak", W, tang[:, :, sl])
    out = np.concatenate([out_n.reshape(b.n_normal, -1), out_t.reshape(b.n_tangential, -1)])
    return out[:, 0] if single else out
