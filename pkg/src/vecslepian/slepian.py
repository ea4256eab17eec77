"""Slepian decomposition of a localisation matrix.

The eigenvectors of ``K`` are the coefficient vectors of the vectorial Slepian
functions and the eigenvalues are their energy ratios over the region.  The
solve runs per diagonal block of the order reorganisation (``P_j``, ``B_0``,
``C_0``, ``Q_j``) by default; a dense path is kept for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np
import scipy.linalg

from .basis import Bandlimit, BallGeometry, SystemId, synthesize_grid
from .locmat import LocalisationMatrix, Region, diagonal, order_blocks, radial_integral, radial_norm_factor
from .quadrature import cone_grid

__all__ = [
    "SlepianBasis",
    "ShannonReport",
    "Classification",
    "EigenSolveError",
    "DEFAULT_THRESHOLD",
    "solve",
    "shannon",
    "shannon_closed_form",
    "energy_ratio",
    "classify",
]

DEFAULT_THRESHOLD = 0.5


class EigenSolveError(RuntimeError):
    """The symmetric eigensolver failed on one block; ``block`` names it."""

    def __init__(self, message, block):
        super().__init__(message)
        self.block = block


def _readonly(a):
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SlepianBasis:
    """Eigen-decomposition of a localisation matrix.

    Attributes
    ----------
    eigenvalues : ndarray, shape (Z,)
        Sorted in descending order.
    vectors : ndarray, shape (Z, Z)
        Column ``k`` holds the unit-norm coefficients of the ``k``-th Slepian
        function in canonical flat order.
    block, kind, order : ndarray, shape (Z,)
        Originating block name, ``"normal"``/``"tangential"`` and order ``j``
        (``None`` entries for the dense solve).
    """

    sys: SystemId
    bandlimit: Bandlimit
    region: Region
    geom: BallGeometry
    eigenvalues: np.ndarray = field(repr=False)
    vectors: np.ndarray = field(repr=False)
    block: np.ndarray = field(repr=False)
    kind: np.ndarray = field(repr=False)
    order: np.ndarray = field(repr=False)

    def __post_init__(self):
        for name in ("eigenvalues", "vectors", "block", "kind", "order"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))

    @property
    def Z(self):
        return self.eigenvalues.size

    def __len__(self):
        return self.Z

    def coefficients(self, k):
        """Coefficient vector of the ``k``-th Slepian function (0-based rank)."""
        return self.vectors[:, k]

    def tags(self, k):
        return {"block": str(self.block[k]), "kind": str(self.kind[k]), "j": self.order[k]}


class ShannonReport(NamedTuple):
    S: float
    S_closed_form: float
    count_above_threshold: Optional[int]
    threshold: float


class Classification(NamedTuple):
    well: np.ndarray
    poor: np.ndarray


def _fix_signs(vecs):
    # largest-magnitude coefficient positive; argmax takes the first on ties
    rows = np.argmax(np.abs(vecs), axis=0)
    signs = np.sign(vecs[rows, np.arange(vecs.shape[1])])
    signs[signs == 0] = 1.0
    return vecs * signs


def _eigh(mat, name):
    try:
        w, v = scipy.linalg.eigh(mat, driver="ev", check_finite=True)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigenSolveError(f"eigensolver failed on block {name}: {exc}", name) from exc
    # eigh returns ascending values; flip so within-block order is descending
    return w[::-1], v[:, ::-1]


def solve(K: LocalisationMatrix, blockwise: bool = True) -> SlepianBasis:
    """Full eigen-decomposition of ``K``.

    Parameters
    ----------
    K : LocalisationMatrix
    blockwise : bool
        Solve every per-order block independently (default).  Otherwise the
        dense ``Z x Z`` matrix is decomposed in one call.

    Returns
    -------
    SlepianBasis
        Eigenvalues sorted descending; ties are broken by block id and then
        by within-block rank.  Each eigenvector has unit norm and its
        largest-magnitude coefficient is positive.

    Raises
    ------
    EigenSolveError
        If the tridiagonal QR iteration does not converge on a block.
    """
    Z = K.Z
    if blockwise:
        blocks = order_blocks(K)
    else:
        blocks = [None]
    vals, block_id, within = [], [], []
    names, kinds, orders = [], [], []
    vectors = np.zeros((Z, Z))
    col = 0
    for bid, blk in enumerate(blocks):
        if blk is None:
            w, v = _eigh(K.dense(), "dense")
            vectors[:, col : col + w.size] = v
            n1 = K.bandlimit.n_normal
            normal_mass = np.sum(v[:n1] ** 2, axis=0)
            kinds += ["normal" if mass >= 0.5 else "tangential" for mass in normal_mass]
            names += ["dense"] * w.size
            orders += [None] * w.size
        else:
            w, v = _eigh(blk.matrix, blk.name)
            vectors[blk.indices, col : col + w.size] = v
            names += [blk.name] * w.size
            kinds += [blk.kind] * w.size
            orders += [blk.j] * w.size
        vals.append(w)
        block_id.append(np.full(w.size, bid))
        within.append(np.arange(w.size))
        col += w.size
    vals = np.concatenate(vals)
    block_id = np.concatenate(block_id)
    within = np.concatenate(within)
    perm = np.lexsort((within, block_id, -vals))
    vectors = _fix_signs(vectors[:, perm])
    return SlepianBasis(
        K.sys,
        K.bandlimit,
        K.region,
        K.geom,
        vals[perm],
        vectors,
        np.array(names, dtype=object)[perm],
        np.array(kinds, dtype=object)[perm],
        np.array(orders, dtype=object)[perm],
    )


def _types_at_degree(n):
    # type 1 exists for every n, tangential types only from n = 1
    return 1 if n == 0 else 3


def shannon_closed_form(sys, bandlimit, region, geom=None, spec=None):
    """Shannon number from the addition-theorem sums, at ``beta = 1``.

    Summing the diagonal over all orders ``j`` collapses the angular factor to
    ``(2n + 1)(1 - cos(theta)) / 2`` per vector type, leaving one radial
    integral per ``(m, n)``.  The region radii are rescaled to a unit ball.
    """
    sys = SystemId.parse(sys)
    b = bandlimit
    beta = (geom or BallGeometry()).beta
    unit = BallGeometry(1.0)
    region = Region(region.a / beta, region.b / beta, region.theta)
    cap = 0.5 * (1.0 - math.cos(region.theta))
    terms = []
    for m in range(b.M + 1):
        for n in range(b.N + 1):
            nn = 0 if sys is SystemId.II else n
            radial = radial_norm_factor(sys, m, m, nn, nn) * radial_integral(sys, m, m, nn, nn, region, unit, spec)
            terms.append(_types_at_degree(n) * (2 * n + 1) * radial)
    return cap * math.fsum(terms)


def shannon(K, threshold=DEFAULT_THRESHOLD, basis=None, spec=None):
    """Shannon number of a localisation problem.

    Parameters
    ----------
    K : LocalisationMatrix or tuple
        An assembled matrix, or ``(sys, bandlimit, region, geom)``; in the
        tuple case only the diagonal is computed.
    threshold : float
        Eigenvalue cut for ``count_above_threshold``.
    basis : SlepianBasis, optional
        When given, the number of eigenvalues ``>= threshold`` is reported.

    Returns
    -------
    ShannonReport
    """
    if isinstance(K, LocalisationMatrix):
        sys, b, region, geom = K.sys, K.bandlimit, K.region, K.geom
        S = K.trace()
    else:
        sys, b, region, geom = K
        S = math.fsum(diagonal(sys, b, region, geom, spec))
    closed = shannon_closed_form(sys, b, region, geom, spec)
    count = None if basis is None else int(np.count_nonzero(basis.eigenvalues >= threshold))
    return ShannonReport(float(S), closed, count, float(threshold))


def energy_ratio(sys, geom, bandlimit, coeffs, region, orders=(40, 64, 40), chunk=16):
    """Concentration ``||f||^2_R / ||f||^2_B`` of a bandlimited field.

    The numerator is a tensor-product quadrature of ``|f|^2`` over the cone,
    the denominator is ``||coeffs||^2`` by Parseval.

    Parameters
    ----------
    coeffs : array_like, shape (Z,) or (Z, k)
        One or several coefficient vectors.
    orders : tuple of int
        Quadrature points in ``r``, ``phi`` and ``t``.
    chunk : int
        Columns synthesised per batch.

    Returns
    -------
    float, or ndarray of shape (k,)
    """
    c = np.asarray(coeffs, dtype=float)
    single = c.ndim == 1
    c2 = c.reshape(c.shape[0], -1)
    denom = np.sum(c2 * c2, axis=0)
    if np.any(denom == 0.0):
        raise ValueError("energy ratio of a zero coefficient vector is undefined")
    r, phi, t, wr, wphi, wt = cone_grid(region.a, region.b, region.theta, orders)
    num = np.empty(c2.shape[1])
    for start in range(0, c2.shape[1], chunk):
        vals = synthesize_grid(sys, geom, bandlimit, c2[:, start : start + chunk], r, phi, t)
        sq = np.sum(vals * vals, axis=-1)
        num[start : start + chunk] = np.einsum("crpt,r,p,t->c", sq, wr, wphi, wt)
    out = num / denom
    return float(out[0]) if single else out


def classify(basis: SlepianBasis, threshold=DEFAULT_THRESHOLD) -> Classification:
    """Split ranks into well-localised (``lambda >= threshold``) and the rest."""
    mask = basis.eigenvalues >= threshold
    return Classification(np.flatnonzero(mask), np.flatnonzero(~mask))
