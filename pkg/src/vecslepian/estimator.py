"""Scikit-learn style wrapper around the Slepian pipeline.

:class:`VectorSlepian` behaves like a fixed-basis PCA: ``fit`` assembles and
decomposes the localisation matrix defined by the hyperparameters, after
which ``transform`` projects coefficient vectors onto the leading Slepian
functions and ``inverse_transform`` maps Slepian coordinates back.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .basis import Bandlimit, BallGeometry, SystemId, from_cartesian, synthesize
from .locmat import Region, assemble
from .quadrature import QuadratureSpec
from .slepian import classify, energy_ratio, shannon, solve

__all__ = ["VectorSlepian"]


class VectorSlepian(TransformerMixin, BaseEstimator):
    """Vectorial Slepian basis of a partial cone as a transformer.

    Parameters
    ----------
    system : {"I", "II", "III"}
        Radial basis system.
    M, N : int
        Radial and angular bandlimits.
    a, b : float
        Inner and outer radius of the shell.
    theta_deg : float
        Cap half-angle in degrees.
    beta : float
        Ball radius.
    n_components : int, "shannon" or None
        Number of leading Slepian functions kept; ``"shannon"`` keeps the
        rounded Shannon number, ``None`` keeps all ``Z``.
    threshold : float
        Cut used for ``n_well_localised_``.
    blockwise : bool
        Solve per order block (the default) or densely.

    Attributes
    ----------
    eigenvalues_ : ndarray, shape (n_components,)
    components_ : ndarray, shape (n_components, Z)
        Rows are unit coefficient vectors of the kept Slepian functions.
    shannon_ : ShannonReport
    n_well_localised_ : int
    basis_ : SlepianBasis
    n_features_in_ : int
    """

    def __init__(
        self,
        system="I",
        M=6,
        N=12,
        a=0.25,
        b=0.75,
        theta_deg=45.0,
        beta=1.0,
        n_components=None,
        threshold=0.5,
        blockwise=True,
    ):
        self.system = system
        self.M = M
        self.N = N
        self.a = a
        self.b = b
        self.theta_deg = theta_deg
        self.beta = beta
        self.n_components = n_components
        self.threshold = threshold
        self.blockwise = blockwise

    def _problem(self):
        geom = BallGeometry(float(self.beta))
        region = Region(float(self.a), float(self.b), math.radians(self.theta_deg)).validate(geom)
        return SystemId.parse(self.system), Bandlimit(int(self.M), int(self.N)), region, geom

    def fit(self, X=None, y=None):
        """Assemble and decompose; ``X`` and ``y`` are ignored."""
        sys, band, region, geom = self._problem()
        K = assemble(sys, band, region, geom, QuadratureSpec())
        basis = solve(K, blockwise=self.blockwise)
        rep = shannon(K, threshold=self.threshold, basis=basis)
        k = self.n_components
        if k is None:
            k = band.Z
        elif k == "shannon":
            k = max(1, int(round(rep.S)))
        elif not (isinstance(k, (int, np.integer)) and 1 <= k <= band.Z):
            raise ValueError(f"n_components must be in 1..{band.Z}, 'shannon' or None, got {k!r}")
        self.basis_ = basis
        self.shannon_ = rep
        self.eigenvalues_ = np.array(basis.eigenvalues[:k])
        self.components_ = np.array(basis.vectors[:, :k].T)
        self.n_well_localised_ = int(classify(basis, self.threshold).well.size)
        self.n_features_in_ = band.Z
        return self

    def _check_coeffs(self, X, width):
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != width:
            raise ValueError(f"expected {width} columns, got {X.shape[1]}")
        return X

    def transform(self, X):
        """Slepian coordinates of coefficient vectors (rows of ``X``)."""
        check_is_fitted(self, "components_")
        X = self._check_coeffs(X, self.n_features_in_)
        return X @ self.components_.T

    def inverse_transform(self, Y):
        """Coefficient vectors from Slepian coordinates."""
        check_is_fitted(self, "components_")
        Y = self._check_coeffs(Y, self.components_.shape[0])
        return Y @ self.components_

    def concentration(self, X):
        """Energy ratio over the region for each coefficient row of ``X``."""
        check_is_fitted(self, "components_")
        X = self._check_coeffs(X, self.n_features_in_)
        sys, band, region, geom = self._problem()
        return np.atleast_1d(energy_ratio(sys, geom, band, X.T, region))

    def evaluate(self, points, k=0):
        """Field of the ``k``-th kept Slepian function at Cartesian ``points`` (n, 3)."""
        check_is_fitted(self, "components_")
        pts = check_array(points, dtype=np.float64)
        if pts.shape[1] != 3:
            raise ValueError("points must have three Cartesian columns")
        sys, band, _, geom = self._problem()
        return synthesize(sys, geom, band, self.components_[k], from_cartesian(pts))
