"""Localisation matrix of a partial cone for the vector ball bases.

Entries are assembled from closed forms that reduce every volume integral to
one radial integral in the Jacobi variable ``u`` and one polar integral of a
product of associated Legendre functions.  The normal block ``P`` couples
type-1 fields only; the tangential block ``Q = [[B, D], [D^T, C]]`` couples
types 2 and 3, with ``B == C``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .basis import Bandlimit, BallGeometry, SystemId, flat_index, unflat_index
from .quadrature import QuadratureError, QuadratureSpec, integrate_adaptive
from .specfun import jacobi_table, legendre_deriv_table, legendre_table, sph_norm

__all__ = [
    "Region",
    "LocalisationMatrix",
    "AssemblyError",
    "SOFT_TOLERANCE",
    "radial_norm_factor",
    "radial_integral",
    "legendre_product_integral",
    "entry_normal",
    "entry_tangential_diag",
    "entry_mixed",
    "entry",
    "EntryEvaluator",
    "assemble",
    "diagonal",
    "reorder_blockdiag",
    "OrderBlock",
]

log = logging.getLogger(__name__)

# quadrature budget exhaustion is tolerated when the error estimate stays below this
SOFT_TOLERANCE = 1e-9


class AssemblyError(RuntimeError):
    """A matrix entry could not be computed; ``index`` holds the offending pair."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class Region:
    """Original partial cone ``a <= r <= b``, ``cos(theta) <= t <= 1``."""

    a: float
    b: float
    theta: float

    def validate(self, geom=None):
        beta = (geom or BallGeometry()).beta
        if not (0.0 <= self.a < self.b <= beta):
            raise ValueError(f"need 0 <= a < b <= beta, got a={self.a}, b={self.b}, beta={beta}")
        if not (0.0 < self.theta <= math.pi):
            raise ValueError(f"cap angle must lie in (0, pi], got {self.theta}")
        return self

    @property
    def cos_theta(self):
        return math.cos(self.theta)

    @property
    def sin2_theta(self):
        # (1 - t)(1 + t) is exactly 0 at theta = pi since cos(pi) == -1.0
        t = self.cos_theta
        return (1.0 - t) * (1.0 + t)


def radial_norm_factor(sys, m, mp, n, np_):
    """Normalisation prefactor of the radial integral."""
    sys = SystemId.parse(sys)
    if sys is SystemId.I:
        return math.sqrt((4 * m + 2 * n + 3) * (4 * mp + 2 * np_ + 3) / 2.0 ** (n + np_ + 5))
    if sys is SystemId.II:
        return math.sqrt((2 * m + 3) * (2 * mp + 3) / 64.0)
    return math.sqrt((4 * m + 2 * n + 1) * (4 * mp + 2 * np_ + 1) / 2.0 ** (n + np_ + 3))


def _radial_limits(sys, region, geom):
    beta = geom.beta
    if sys is SystemId.II:
        return 2.0 * region.a / beta - 1.0, 2.0 * region.b / beta - 1.0
    return 2.0 * region.a**2 / beta**2 - 1.0, 2.0 * region.b**2 / beta**2 - 1.0


def _radial_integrand(sys, m, mp, n, np_):
    if sys is SystemId.II:
        def f(u):
            p = jacobi_table(max(m, mp), 0.0, 2.0, u)
            return p[m] * p[mp] * (u + 1.0) ** 2
        return f
    shift = 0.5 if sys is SystemId.I else -0.5
    power = (n + np_ + 2 * shift) / 2.0

    def f(u):
        p1 = jacobi_table(m, 0.0, n + shift, u)[m]
        p2 = jacobi_table(mp, 0.0, np_ + shift, u)[mp]
        return p1 * p2 * (u + 1.0) ** power
    return f


def _adaptive(f, lo, hi, spec, what):
    try:
        return integrate_adaptive(f, lo, hi, spec).value
    except QuadratureError as exc:
        if exc.result.error_estimate <= SOFT_TOLERANCE:
            log.warning("accepting %s with error estimate %.2e", what, exc.result.error_estimate)
            return exc.result.value
        raise


def radial_integral(sys, m, mp, n, np_, region, geom=None, spec=None):
    """Radial integral in the Jacobi variable ``u`` over the region's shell.

    For systems I and III the limits are ``2a^2/beta^2 - 1 .. 2b^2/beta^2 - 1``;
    for system II they are ``2a/beta - 1 .. 2b/beta - 1``.
    """
    sys = SystemId.parse(sys)
    geom = geom or BallGeometry()
    lo, hi = _radial_limits(sys, region, geom)
    if sys is SystemId.III and n == 0 and np_ == 0:
        # (u + 1)^(-1/2) is singular at u = -1; with u = s^2 - 1 the integrand
        # becomes 2 P_m(s^2 - 1) P_m'(s^2 - 1), smooth on the whole range
        def g(s):
            u = s * s - 1.0
            return 2.0 * jacobi_table(m, 0.0, -0.5, u)[m] * jacobi_table(mp, 0.0, -0.5, u)[mp]

        return _adaptive(g, math.sqrt(lo + 1.0), math.sqrt(hi + 1.0), spec, f"radial integral {(m, mp, n, np_)}")
    return _adaptive(_radial_integrand(sys, m, mp, n, np_), lo, hi, spec, f"radial integral {(m, mp, n, np_)}")


def legendre_product_integral(n, np_, mu, theta, spec=None):
    """Cap integral of ``P_{n,mu} P_{n',mu}`` over ``cos(theta) <= t <= 1``."""
    if not 0 <= mu <= min(n, np_):
        raise ValueError(f"order {mu} exceeds min degree of ({n}, {np_})")
    lo = math.cos(theta)
    if lo >= 1.0:
        return 0.0
    nmax = max(n, np_)

    def f(t):
        tab = legendre_table(nmax, t)
        return tab[n, mu] * tab[np_, mu]

    return _adaptive(f, lo, 1.0, spec, f"Legendre integral {(n, np_, mu)}")


class EntryEvaluator:
    """Cached building blocks for entries of one (system, region, geometry).

    Radial integrals are cached per unordered pair ``((m, n), (m', n'))`` and
    polar integrals per ``(min(n, n'), max(n, n'), mu)``, so every ``(j, j')``
    combination reuses them and the cached values are exactly symmetric.
    """

    def __init__(self, sys, region, geom=None, spec=None, nmax=None):
        self.sys = SystemId.parse(sys)
        self.geom = geom or BallGeometry()
        self.region = region.validate(self.geom)
        self.spec = spec or QuadratureSpec()
        self._radial = {}
        self._polar = {}
        self.t0 = region.cos_theta
        self.sin2 = region.sin2_theta
        self._nmax = -1
        self._grow(nmax or 1)

    def _grow(self, nmax):
        if nmax <= self._nmax:
            return
        self._nmax = nmax
        t0 = np.array(self.t0)
        self.p_edge = legendre_table(nmax, t0)
        if self.sin2 == 0.0:
            # boundary terms carry a sin^2 factor that is exactly zero here
            self.dp_edge = np.zeros_like(self.p_edge)
        else:
            self.dp_edge = legendre_deriv_table(nmax, t0, self.p_edge)

    def radial(self, m, n, mp, np_):
        if self.sys is SystemId.II:
            n = np_ = 0
        key = ((m, n), (mp, np_)) if (m, n) <= (mp, np_) else ((mp, np_), (m, n))
        val = self._radial.get(key)
        if val is None:
            (m1, n1), (m2, n2) = key
            try:
                val = radial_norm_factor(self.sys, m1, m2, n1, n2) * radial_integral(
                    self.sys, m1, m2, n1, n2, self.region, self.geom, self.spec
                )
            except QuadratureError as exc:
                raise AssemblyError(f"radial integral failed for {key}: {exc}", key) from exc
            self._radial[key] = val
        return val

    def polar(self, n, np_, mu):
        key = (min(n, np_), max(n, np_), mu)
        val = self._polar.get(key)
        if val is None:
            try:
                val = legendre_product_integral(key[0], key[1], mu, self.region.theta, self.spec)
            except QuadratureError as exc:
                raise AssemblyError(f"Legendre integral failed for {key}: {exc}", key) from exc
            self._polar[key] = val
        return val

    def edge(self, n, mu):
        self._grow(n)
        return float(self.p_edge[n, mu])

    def edge_deriv(self, n, mu):
        self._grow(n)
        return float(self.dp_edge[n, mu])

    # the three closed-form cases; arguments are plain integers

    def normal(self, m, n, j, mp, np_, jp):
        if j != jp:
            return 0.0
        mu = abs(j)
        return self.radial(m, n, mp, np_) * sph_norm(n, j) * sph_norm(np_, j) * self.polar(n, np_, mu)

    def tangential(self, m, n, j, mp, np_, jp):
        if j != jp:
            return 0.0
        mu = abs(j)
        lam, lamp = n * (n + 1), np_ * (np_ + 1)
        val = math.sqrt(lamp / lam) * self.polar(n, np_, mu)
        if self.sin2 != 0.0:
            val -= self.sin2 / math.sqrt(lam * lamp) * self.edge(n, mu) * self.edge_deriv(np_, mu)
        return self.radial(m, n, mp, np_) * sph_norm(n, j) * sph_norm(np_, j) * val

    def mixed(self, m, n, j, mp, np_, jp):
        if jp != -j or j == 0:
            return 0.0
        mu = abs(j)
        val = j / math.sqrt(n * (n + 1) * np_ * (np_ + 1)) * self.edge(n, mu) * self.edge(np_, mu)
        return self.radial(m, n, mp, np_) * sph_norm(n, j) * sph_norm(np_, -j) * val

    def __call__(self, p, q):
        """Entry ``K[p, q]`` for two basis indices ``(i, m, n, j)``."""
        (i, m, n, j), (ip, mp, np_, jp) = p, q
        try:
            if i == 1 and ip == 1:
                return self.normal(m, n, j, mp, np_, jp)
            if i == 1 or ip == 1:
                return 0.0
            if i == ip:
                return self.tangential(m, n, j, mp, np_, jp)
            if i == 2:
                return self.mixed(m, n, j, mp, np_, jp)
            return self.mixed(mp, np_, jp, m, n, j)
        except AssemblyError as exc:
            raise AssemblyError(f"entry {tuple(p)}, {tuple(q)}: {exc}", (tuple(p), tuple(q))) from exc


def entry_normal(sys, m, n, j, mp, np_, jp, region, geom=None, spec=None):
    """``K[(1, m, n, j), (1, m', n', j')]``."""
    return EntryEvaluator(sys, region, geom, spec, max(n, np_)).normal(m, n, j, mp, np_, jp)


def entry_tangential_diag(sys, m, n, j, mp, np_, jp, region, geom=None, spec=None):
    """``K[(2, m, n, j), (2, m', n', j')]``, equal to the (3, 3) entry."""
    if n < 1 or np_ < 1:
        raise ValueError("tangential entries need n, n' >= 1")
    return EntryEvaluator(sys, region, geom, spec, max(n, np_)).tangential(m, n, j, mp, np_, jp)


def entry_mixed(sys, m, n, j, mp, np_, jp, region, geom=None, spec=None):
    """``K[(2, m, n, j), (3, m', n', j')]``; the (3, 2) block is its transpose."""
    if n < 1 or np_ < 1:
        raise ValueError("tangential entries need n, n' >= 1")
    return EntryEvaluator(sys, region, geom, spec, max(n, np_)).mixed(m, n, j, mp, np_, jp)


def entry(sys, p, q, region, geom=None, spec=None):
    """Any single entry ``K[p, q]`` for basis indices ``p``, ``q``."""
    return EntryEvaluator(sys, region, geom, spec, max(p[2], q[2], 1))(p, q)


@dataclass(frozen=True)
class OrderBlock:
    """One diagonal block of the per-order reorganisation.

    ``indices`` are flat positions into the full ``Z``-vector; ``matrix`` is
    the restriction of ``K`` to them.
    """

    name: str
    kind: str  # "normal" or "tangential"
    j: int
    indices: np.ndarray
    matrix: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class LocalisationMatrix:
    sys: SystemId
    bandlimit: Bandlimit
    region: Region
    geom: BallGeometry
    P: np.ndarray = field(repr=False)
    Q: np.ndarray = field(repr=False)

    @property
    def Z(self):
        return self.bandlimit.Z

    @property
    def B(self):
        k = self.bandlimit.n_per_tangential
        return self.Q[:k, :k]

    @property
    def C(self):
        k = self.bandlimit.n_per_tangential
        return self.Q[k:, k:]

    @property
    def D(self):
        k = self.bandlimit.n_per_tangential
        return self.Q[:k, k:]

    def dense(self):
        """Full ``Z x Z`` matrix ``diag(P, Q)``."""
        n1 = self.bandlimit.n_normal
        K = np.zeros((self.Z, self.Z))
        K[:n1, :n1] = self.P
        K[n1:, n1:] = self.Q
        return K

    def trace(self):
        return float(np.trace(self.P) + np.trace(self.Q))

    def blocks(self):
        return order_blocks(self)


def _positions(b, i, j):
    """Flat positions and (m, n) labels of type ``i`` and order ``j``."""
    lo = max(abs(j), 0 if i == 1 else 1)
    pos, ms, ns = [], [], []
    for m in range(b.M + 1):
        for n in range(lo, b.N + 1):
            pos.append(flat_index(b, (i, m, n, j)))
            ms.append(m)
            ns.append(n)
    return np.array(pos, dtype=int), ms, ns


def _mirror_upper(blk):
    return np.triu(blk) + np.triu(blk, 1).T


def assemble(sys, bandlimit, region, geom=None, spec=None):
    """Assemble the localisation matrix of the partial cone.

    Only the upper triangle of each symmetric block is computed and mirrored.
    Entries that vanish through the Kronecker deltas in the order ``j`` are
    never evaluated.

    Raises
    ------
    AssemblyError
        If a quadrature fails; the offending index is attached.
    """
    sys = SystemId.parse(sys)
    b = bandlimit
    geom = geom or BallGeometry()
    ev = EntryEvaluator(sys, region, geom, spec, b.N)
    P = np.zeros((b.n_normal, b.n_normal))
    Q = np.zeros((b.n_tangential, b.n_tangential))
    off = b.n_normal
    for j in range(-b.N, b.N + 1):
        pos, ms, ns = _positions(b, 1, j)
        blk = np.zeros((pos.size, pos.size))
        for r in range(pos.size):
            for c in range(r, pos.size):
                blk[r, c] = ev((1, ms[r], ns[r], j), (1, ms[c], ns[c], j))
        P[np.ix_(pos, pos)] = _mirror_upper(blk)
        pos2, ms, ns = _positions(b, 2, j)
        pos3, _, _ = _positions(b, 3, j)
        blk = np.zeros((pos2.size, pos2.size))
        for r in range(pos2.size):
            for c in range(r, pos2.size):
                blk[r, c] = ev((2, ms[r], ns[r], j), (2, ms[c], ns[c], j))
        blk = _mirror_upper(blk)
        Q[np.ix_(pos2 - off, pos2 - off)] = blk
        Q[np.ix_(pos3 - off, pos3 - off)] = blk
        if j > 0:
            # D pairs (2, ., ., j) with (3, ., ., -j) and (2, ., ., -j) with (3, ., ., j)
            for jj in (j, -j):
                rows, ms_r, ns_r = _positions(b, 2, jj)
                cols, ms_c, ns_c = _positions(b, 3, -jj)
                d = np.empty((rows.size, cols.size))
                for r in range(rows.size):
                    for c in range(cols.size):
                        d[r, c] = ev((2, ms_r[r], ns_r[r], jj), (3, ms_c[c], ns_c[c], -jj))
                Q[np.ix_(rows - off, cols - off)] = d
                Q[np.ix_(cols - off, rows - off)] = d.T
    return LocalisationMatrix(sys, b, region, geom, P, Q)


def diagonal(sys, bandlimit, region, geom=None, spec=None):
    """Diagonal of ``K`` in canonical order, without assembling off-diagonals."""
    sys = SystemId.parse(sys)
    b = bandlimit
    ev = EntryEvaluator(sys, region, geom, spec, b.N)
    out = np.empty(b.Z)
    for p in range(b.Z):
        idx = unflat_index(b, p)
        out[p] = ev(idx, idx)
    return out


def order_blocks(K):
    """Per-order diagonal blocks ``P_j`` and ``Q_j`` of an assembled matrix.

    ``Q_j`` couples type-2 order ``j`` with type-3 order ``-j``; since the
    coupling vanishes for ``j = 0`` that block is split into ``B_0`` and
    ``C_0``.  Blocks are ordered ``0, -1, 1, ..., -N, N`` with the normal block
    of each order first.
    """
    b = K.bandlimit
    off = b.n_normal
    blocks = []
    for j in _order_sequence(b.N):
        pos, _, _ = _positions(b, 1, j)
        blocks.append(OrderBlock(f"P_{j}", "normal", j, pos, K.P[np.ix_(pos, pos)]))
    for j in _order_sequence(b.N):
        pos2, _, _ = _positions(b, 2, j)
        pos3, _, _ = _positions(b, 3, -j)
        if j == 0:
            for name, pos in (("B_0", pos2), ("C_0", pos3)):
                blocks.append(OrderBlock(name, "tangential", 0, pos, K.Q[np.ix_(pos - off, pos - off)]))
        else:
            idx = np.concatenate([pos2, pos3])
            blocks.append(OrderBlock(f"Q_{j}", "tangential", j, idx, K.Q[np.ix_(idx - off, idx - off)]))
    return blocks


def reorder_blockdiag(K):
    """Tangential part of :func:`order_blocks`: ``B_0, C_0, Q_-1, Q_1, ..., Q_-N, Q_N``."""
    return [blk for blk in order_blocks(K) if blk.kind == "tangential"]


def _order_sequence(N):
    seq = [0]
    for j in range(1, N + 1):
        seq += [-j, j]
    return seq
