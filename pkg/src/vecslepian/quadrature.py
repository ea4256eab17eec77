"""One-dimensional adaptive Gauss-Kronrod quadrature and fixed tensor rules.

The adaptive integrator follows the QAG scheme: every subinterval carries a
Kronrod value and an error estimate, the worst subinterval is bisected until
the summed estimate drops below ``max(abs_tol, rel_tol * |value|)``.
Integrands are called with a 1-D array of abscissae and must return an array
of the same shape.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._kronrod_tables import TABLES

__all__ = [
    "QuadratureSpec",
    "QuadratureResult",
    "QuadratureError",
    "gauss_kronrod_nodes",
    "integrate_adaptive",
    "gauss_legendre",
    "tensor_integrate_cone",
    "cone_grid",
]

_EPS = np.finfo(float).eps
_UFLOW = np.finfo(float).tiny


class QuadratureError(RuntimeError):
    """Adaptive integration ran out of subintervals.

    The best available result is kept on ``self.result``.
    """

    def __init__(self, message, result):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_subintervals: int = 1000
    gk_points: int = 61

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subintervals < 1:
            raise ValueError("max_subintervals must be at least 1")
        if self.gk_points not in TABLES:
            raise ValueError(f"unsupported Gauss-Kronrod rule {self.gk_points}; choose from {sorted(TABLES)}")


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    subintervals_used: int
    roundoff_limited: bool = False


@lru_cache(maxsize=None)
def gauss_kronrod_nodes(gk_points=61):
    """Nodes, embedded Gauss weights and Kronrod weights on [-1, 1].

    Gauss weights are zero at the Kronrod-only nodes, so one set of function
    values serves both rules.
    """
    try:
        rows = TABLES[gk_points]
    except KeyError:
        raise ValueError(f"unsupported Gauss-Kronrod rule {gk_points}; choose from {sorted(TABLES)}") from None
    arr = np.array(rows, dtype=float)
    nodes, gw, kw = arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy()
    for a in (nodes, gw, kw):
        a.setflags(write=False)
    return nodes, gw, kw


def _gk_rule(f, lo, hi, nodes, gw, kw):
    half = 0.5 * (hi - lo)
    center = 0.5 * (hi + lo)
    fx = np.asarray(f(center + half * nodes), dtype=float)
    if fx.shape != nodes.shape:
        raise ValueError("integrand must return an array matching its input")
    if not np.all(np.isfinite(fx)):
        raise FloatingPointError(f"non-finite integrand value on [{lo}, {hi}]")
    resk = float(kw @ fx)
    resg = float(gw @ fx)
    mean = 0.5 * resk
    resabs = abs(half) * float(kw @ np.abs(fx))
    resasc = abs(half) * float(kw @ np.abs(fx - mean))
    result = resk * half
    err = abs((resk - resg) * half)
    # QUADPACK-style damping of the raw |K - G| difference
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    floor = 50.0 * _EPS * resabs
    if resabs > _UFLOW / (50.0 * _EPS):
        err = max(floor, err)
    return result, err, floor


def integrate_adaptive(f, lo, hi, spec=None):
    """Adaptive Gauss-Kronrod integral of ``f`` over ``[lo, hi]``.

    Parameters
    ----------
    f : callable
        Vectorised integrand.
    lo, hi : float
        Interval with ``lo < hi``.
    spec : QuadratureSpec, optional
        Tolerances and rule; defaults to 1e-12/1e-12, 1000 intervals, 61 points.

    Returns
    -------
    QuadratureResult

    Raises
    ------
    QuadratureError
        If the subinterval budget is exhausted before convergence.  The best
        estimate is attached as ``exc.result``.
    """
    spec = spec or QuadratureSpec()
    lo, hi = float(lo), float(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    nodes, gw, kw = gauss_kronrod_nodes(spec.gk_points)

    val, err, floor = _gk_rule(f, lo, hi, nodes, gw, kw)
    # max-heap on error; the counter keeps pops deterministic on ties
    heap = [(-err, 0, lo, hi, val, floor)]
    counter = 1
    total, total_err, total_floor = val, err, floor
    while total_err > max(spec.abs_tol, spec.rel_tol * abs(total)):
        if total_err <= 2.0 * total_floor:
            # estimate is dominated by rounding in the integrand sums
            return QuadratureResult(total, total_err, len(heap), roundoff_limited=True)
        if len(heap) >= spec.max_subintervals:
            res = QuadratureResult(total, total_err, len(heap))
            raise QuadratureError(
                f"no convergence on [{lo}, {hi}] within {spec.max_subintervals} subintervals "
                f"(estimate {total_err:.3e})",
                res,
            )
        item = heapq.heappop(heap)
        a, b = item[2], item[3]
        mid = 0.5 * (a + b)
        if not (a < mid < b):
            heapq.heappush(heap, item)
            res = QuadratureResult(total, total_err, len(heap))
            raise QuadratureError(f"interval near {a} too small to bisect", res)
        v1, e1, f1 = _gk_rule(f, a, mid, nodes, gw, kw)
        v2, e2, f2 = _gk_rule(f, mid, b, nodes, gw, kw)
        heapq.heappush(heap, (-e1, counter, a, mid, v1, f1))
        heapq.heappush(heap, (-e2, counter + 1, mid, b, v2, f2))
        counter += 2
        # resum in interval order so totals never depend on running cancellation
        items = sorted(heap, key=lambda it: it[2])
        total = math.fsum(it[4] for it in items)
        total_err = math.fsum(-it[0] for it in items)
        total_floor = math.fsum(it[5] for it in items)
    return QuadratureResult(total, total_err, len(heap))


@lru_cache(maxsize=64)
def gauss_legendre(npts):
    """Gauss-Legendre nodes and weights on [-1, 1] (read-only arrays)."""
    x, w = np.polynomial.legendre.leggauss(npts)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def cone_grid(a, b, theta, orders=(40, 64, 40)):
    """Product grid over the partial cone ``a <= r <= b``, ``cos(theta) <= t <= 1``.

    Gauss-Legendre in ``r`` and ``t``, periodic trapezoid in ``phi``.  The
    returned weights include the ``r^2`` Jacobian.

    Returns
    -------
    r, phi, t : 1-D arrays of node coordinates per axis
    wr, wphi, wt : matching 1-D weights (``wr`` already contains ``r^2``)
    """
    n_r, n_phi, n_t = orders
    xr, wr = gauss_legendre(n_r)
    r = 0.5 * (b - a) * xr + 0.5 * (b + a)
    wr = 0.5 * (b - a) * wr * r * r
    t0 = math.cos(theta)
    xt, wt = gauss_legendre(n_t)
    t = 0.5 * (1.0 - t0) * xt + 0.5 * (1.0 + t0)
    wt = 0.5 * (1.0 - t0) * wt
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    wphi = np.full(n_phi, 2.0 * math.pi / n_phi)
    return r, phi, t, wr, wphi, wt


def tensor_integrate_cone(f, region, geom=None, orders=(40, 64, 40)):
    """Fixed-order integral of ``f(r, phi, t)`` over a partial cone.

    ``f`` receives broadcastable arrays of shapes ``(n_r, 1, 1)``,
    ``(1, n_phi, 1)``, ``(1, 1, n_t)`` and must return an array broadcastable
    to ``(n_r, n_phi, n_t)``.  ``region`` is anything with ``a``, ``b`` and
    ``theta`` attributes; when ``geom`` is given the radii are checked
    against its ball radius.
    """
    if geom is not None and not (0.0 <= region.a <= region.b <= geom.beta):
        raise ValueError(f"radii [{region.a}, {region.b}] outside the ball of radius {geom.beta}")
    r, phi, t, wr, wphi, wt = cone_grid(region.a, region.b, region.theta, orders)
    vals = np.broadcast_to(f(r[:, None, None], phi[None, :, None], t[None, None, :]), (r.size, phi.size, t.size))
    return float(np.einsum("ijk,i,j,k->", vals, wr, wphi, wt))
