"""Independent numerical checks of assembled and solved problems.

Each check recomputes a quantity by a route that shares no closed forms with
the assembly: brute-force tensor quadrature of basis-field products over the
cone, energy ratios from synthesised fields, and pointwise evaluation of
rotated fields.  :func:`run_checks` bundles them into a pass/fail report.
"""

from __future__ import annotations

import math

import numpy as np

from .basis import BallGeometry, flat_index, from_cartesian, synthesize, synthesize_grid
from .locmat import Region, assemble
from .quadrature import cone_grid
from .rotation import EulerAngles, rotate_coeffs, rotation_matrix
from .slepian import energy_ratio, shannon, solve

__all__ = [
    "ENTRY_CASES",
    "random_entry_pairs",
    "entry_oracle",
    "top_per_block",
    "equivariance_error",
    "run_checks",
]

ENTRY_CASES = ((1, 1), (2, 2), (3, 3), (2, 3))


def random_entry_pairs(b, rng, per_case=5):
    """Index pairs ``(p, q)`` drawn from the four entry cases.

    Orders are matched (``j' = j`` or ``j' = -j`` for the mixed case) so the
    drawn entries are generically nonzero.
    """
    pairs = []
    for i, ip in ENTRY_CASES:
        lo = 0 if i == 1 else 1
        for _ in range(per_case):
            n = int(rng.integers(lo, b.N + 1))
            j = int(rng.integers(-n, n + 1))
            if (i, ip) == (2, 3) and j == 0:
                # the mixed coupling vanishes for j = 0
                j = 1
            jp = -j if (i, ip) == (2, 3) else j
            np_ = int(rng.integers(max(abs(jp), lo), b.N + 1))
            p = (i, int(rng.integers(0, b.M + 1)), n, j)
            q = (ip, int(rng.integers(0, b.M + 1)), np_, jp)
            pairs.append((p, q))
    return pairs


def entry_oracle(sys, b, pairs, region, geom=None, orders=(40, 64, 40)):
    """``int_R g_p . g_q dx`` for each pair by tensor quadrature over the cone."""
    geom = geom or BallGeometry()
    cols = sorted({flat_index(b, p) for pq in pairs for p in pq})
    where = {c: k for k, c in enumerate(cols)}
    E = np.zeros((b.Z, len(cols)))
    E[cols, np.arange(len(cols))] = 1.0
    r, phi, t, wr, wphi, wt = cone_grid(region.a, region.b, region.theta, orders)
    vals = synthesize_grid(sys, geom, b, E, r, phi, t)
    w = wr[:, None, None] * wphi[None, :, None] * wt[None, None, :]
    out = []
    for p, q in pairs:
        fp, fq = vals[where[flat_index(b, p)]], vals[where[flat_index(b, q)]]
        out.append(float(np.sum(np.sum(fp * fq, axis=-1) * w)))
    return np.array(out)


def top_per_block(basis, count=3):
    """Ranks of the ``count`` largest eigenvalues within each originating block."""
    seen = {}
    ranks = []
    for k, name in enumerate(basis.block):
        if seen.get(name, 0) < count:
            seen[name] = seen.get(name, 0) + 1
            ranks.append(k)
    return np.array(ranks, dtype=int)


def _interior_points(rng, n, geom, rmin=0.05, pole_margin=1e-3):
    out = []
    while len(out) < n:
        x = rng.normal(size=3)
        x *= rng.uniform(rmin, 0.95) * geom.beta / np.linalg.norm(x)
        if abs(x[2]) / np.linalg.norm(x) < 1.0 - pole_margin:
            out.append(x)
    return np.array(out)


def equivariance_error(sys, geom, b, coeffs, angles, points):
    """Max deviation of ``synth(rotated)(x)`` from ``R synth(coeffs)(R^T x)``."""
    R = rotation_matrix(angles)
    rotated = rotate_coeffs(coeffs, angles, b)
    lhs = synthesize(sys, geom, b, rotated, from_cartesian(points))
    # row-vector form: (R^T x)^T = x^T R
    rhs = synthesize(sys, geom, b, coeffs, from_cartesian(points @ R)) @ R.T
    return float(np.max(np.abs(lhs - rhs)))


def _check(name, error, tol, **extra):
    return {"name": name, "passed": bool(error <= tol), "error": float(error), "tolerance": tol, **extra}


def _entry_check(K, pairs, oracle, name="entry_oracle"):
    b = K.bandlimit
    dense = K.dense()
    got = np.array([dense[flat_index(b, p), flat_index(b, q)] for p, q in pairs])
    return _check(name, np.max(np.abs(got - oracle)), 1e-6, entries=len(pairs))


def run_checks(sys, b, region, geom=None, spec=None, angles=None, seed=0, inject_fault=False, K=None, basis=None):
    """Run the oracle suite and return a JSON-ready report.

    Parameters
    ----------
    inject_fault : bool
        Perturb one assembled entry by 1e-3 before the entry comparison; the
        entry check is then expected to fail.
    K, basis : optional
        Pre-computed matrix and decomposition to reuse.

    Returns
    -------
    dict with ``checks`` (list of ``{name, passed, error, tolerance}``) and
    ``passed`` (all checks passed).
    """
    geom = geom or BallGeometry()
    angles = angles or EulerAngles(math.pi / 2, math.pi / 2, math.pi / 2)
    rng = np.random.default_rng(seed)
    K = K if K is not None else assemble(sys, b, region, geom, spec)
    basis = basis if basis is not None else solve(K)
    checks = []

    pairs = random_entry_pairs(b, rng)
    oracle = entry_oracle(sys, b, pairs, region, geom)
    target = K
    if inject_fault:
        p, q = pairs[0]
        P = K.P.copy()
        P[flat_index(b, p), flat_index(b, q)] += 1e-3
        target = type(K)(K.sys, K.bandlimit, K.region, K.geom, P, K.Q)
    checks.append(_entry_check(target, pairs, oracle))

    # the verifier must notice a corrupted entry
    P = K.P.copy()
    p, q = pairs[0]
    P[flat_index(b, p), flat_index(b, q)] += 1e-3
    faulty = _entry_check(type(K)(K.sys, K.bandlimit, K.region, K.geom, P, K.Q), pairs, oracle)
    checks.append({"name": "fault_injection_self_test", "passed": not faulty["passed"], "error": faulty["error"], "tolerance": 1e-6})

    ranks = top_per_block(basis)
    ratios = energy_ratio(sys, geom, b, basis.vectors[:, ranks], region)
    checks.append(_check("energy_ratio_oracle", np.max(np.abs(ratios - basis.eigenvalues[ranks])), 1e-6, functions=int(ranks.size)))

    rep = shannon(K, basis=basis, spec=spec)
    checks.append(_check("shannon_trace_identity", abs(rep.S - rep.S_closed_form), 1e-8, S=rep.S))
    checks.append(_check("trace_equals_eigenvalue_sum", abs(float(np.sum(basis.eigenvalues)) - rep.S), 1e-8 * b.Z))

    full = assemble(sys, b, Region(0.0, geom.beta, math.pi), geom, spec)
    ident = np.max(np.abs(full.dense() - np.eye(b.Z)))
    lam = solve(full).eigenvalues
    checks.append(_check("full_ball_identity", max(ident, float(np.max(np.abs(lam - 1.0)))), 1e-10))

    pts = _interior_points(rng, 100, geom)
    err = equivariance_error(sys, geom, b, basis.vectors[:, 0], angles, pts)
    checks.append(_check("rotation_equivariance", err, 1e-8))

    return {"checks": checks, "passed": all(c["passed"] for c in checks)}
