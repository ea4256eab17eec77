import math

import numpy as np
import pytest

from vecslepian.basis import Bandlimit, BallGeometry, from_cartesian, synthesize, to_cartesian
from vecslepian.locmat import Region, assemble
from vecslepian.quadrature import cone_grid
from vecslepian.rotation import (
    EulerAngles,
    compose,
    real_wigner_block,
    rotate_coeffs,
    rotation_matrix,
    wigner_d,
)
from vecslepian.slepian import solve
from vecslepian.specfun import real_sph_harm

UNIT = BallGeometry(1.0)
CONE = Region(0.25, 0.75, math.pi / 4)
ANGLES = EulerAngles(0.3, 1.1, -0.7)
SYSTEMS = ["I", "II", "III"]


def Rz(a):
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def Ry(b):
    c, s = math.cos(b), math.sin(b)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def random_points(rng, n, rmin=0.1):
    x = rng.normal(size=(n, 3))
    x *= (rng.uniform(rmin, 0.95, size=n) / np.linalg.norm(x, axis=1))[:, None]
    return x


# Euler angles and matrices


def test_rotation_matrix_is_zyz_product():
    a, b, g = ANGLES.as_tuple()
    assert np.allclose(rotation_matrix(ANGLES), Rz(a) @ Ry(b) @ Rz(g), atol=1e-14)


def test_angles_reduced_mod_two_pi():
    e = EulerAngles(2 * math.pi + 0.5, -0.25, 4 * math.pi)
    assert e.alpha == pytest.approx(0.5)
    assert e.beta_angle == pytest.approx(2 * math.pi - 0.25)
    assert e.gamma == pytest.approx(0.0, abs=1e-15)
    assert np.allclose(rotation_matrix(e), rotation_matrix(EulerAngles(0.5, -0.25, 0.0)), atol=1e-14)


def test_from_degrees_and_matrix_round_trip():
    e = EulerAngles.from_degrees(90, 90, 90)
    assert e.as_tuple() == pytest.approx((math.pi / 2,) * 3)
    back = EulerAngles.from_matrix(rotation_matrix(ANGLES))
    assert np.allclose(rotation_matrix(back), rotation_matrix(ANGLES), atol=1e-13)


def test_compose_matches_matrix_product():
    second = EulerAngles(1.2, 0.4, 2.9)
    got = rotation_matrix(compose(second, ANGLES))
    assert np.allclose(got, rotation_matrix(second) @ rotation_matrix(ANGLES), atol=1e-13)


# Wigner matrices


def test_wigner_d_degree_one_closed_form():
    beta = 0.83
    c, s = math.cos(beta), math.sin(beta)
    d = wigner_d(1, beta)
    # rows/columns ordered m = -1, 0, 1
    assert d[1, 1] == pytest.approx(c, abs=1e-14)
    assert d[2, 2] == pytest.approx((1 + c) / 2, abs=1e-14)
    assert d[2, 1] == pytest.approx(-s / math.sqrt(2), abs=1e-14)
    assert d[2, 0] == pytest.approx((1 - c) / 2, abs=1e-14)


def test_wigner_d_degree_zero_and_validation():
    assert wigner_d(0, 1.3)[0, 0] == pytest.approx(1.0)
    with pytest.raises(ValueError):
        wigner_d(-1, 0.1)


def test_identity_angles_give_identity_blocks():
    for n in range(8):
        assert np.allclose(real_wigner_block(n, EulerAngles()), np.eye(2 * n + 1), atol=1e-14)
    assert real_wigner_block(0, ANGLES)[0, 0] == pytest.approx(1.0)


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_blocks_orthogonal(n):
    W = real_wigner_block(n, ANGLES)
    assert np.max(np.abs(W @ W.T - np.eye(2 * n + 1))) < 1e-12


def test_block_pointwise_against_harmonics():
    rng = np.random.default_rng(7)
    R = rotation_matrix(ANGLES)
    xs = random_points(rng, 20)
    xs /= np.linalg.norm(xs, axis=1)[:, None]
    _, phi, t = from_cartesian(xs)
    _, phi_r, t_r = from_cartesian(xs @ R.T)
    for n in range(7):
        W = real_wigner_block(n, ANGLES)
        Y = np.array([real_sph_harm((n, j), phi, t) for j in range(-n, n + 1)])
        Yr = np.array([real_sph_harm((n, j), phi_r, t_r) for j in range(-n, n + 1)])
        assert np.max(np.abs(Yr - W @ Y)) < 1e-10


# coefficient rotation


def test_identity_rotation_leaves_coefficients():
    b = Bandlimit(2, 4)
    c = np.random.default_rng(0).normal(size=b.Z)
    assert np.allclose(rotate_coeffs(c, EulerAngles(), b), c, atol=1e-14)


def test_rotation_preserves_norm():
    b = Bandlimit(2, 6)
    c = np.random.default_rng(1).normal(size=(b.Z, 3))
    out = rotate_coeffs(c, ANGLES, b)
    assert out.shape == c.shape
    assert np.allclose(np.linalg.norm(out, axis=0), np.linalg.norm(c, axis=0), rtol=1e-13)


def test_rotation_dimension_mismatch():
    b = Bandlimit(1, 2)
    with pytest.raises(ValueError):
        rotate_coeffs(np.ones(b.Z + 1), ANGLES, b)


@pytest.mark.parametrize("sys", SYSTEMS)
def test_equivariance_pointwise(sys):
    b = Bandlimit(2, 5)
    rng = np.random.default_rng(3)
    c = rng.normal(size=b.Z)
    R = rotation_matrix(ANGLES)
    xs = random_points(rng, 30)
    lhs = synthesize(sys, UNIT, b, rotate_coeffs(c, ANGLES, b), from_cartesian(xs))
    rhs = np.stack([R @ v for v in synthesize(sys, UNIT, b, c, from_cartesian((R.T @ xs.T).T))])
    assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_composition_of_rotations():
    b = Bandlimit(1, 6)
    c = np.random.default_rng(4).normal(size=b.Z)
    second = EulerAngles(2.0, 0.6, 0.1)
    twice = rotate_coeffs(rotate_coeffs(c, ANGLES, b), second, b)
    once = rotate_coeffs(c, compose(second, ANGLES), b)
    assert np.max(np.abs(twice - once)) < 1e-10


def test_rotating_a_basis_rotates_every_column():
    b = Bandlimit(1, 2)
    basis = solve(assemble("II", b, CONE))
    out = rotate_coeffs(basis, ANGLES, b)
    assert np.allclose(out[:, 3], rotate_coeffs(basis.vectors[:, 3], ANGLES, b), atol=1e-15)


@pytest.mark.parametrize("sys", SYSTEMS)
def test_rotated_field_concentrates_in_rotated_cone(sys):
    b = Bandlimit(2, 4)
    basis = solve(assemble(sys, b, CONE))
    R = rotation_matrix(ANGLES)
    ks = [0, 1, 5]
    rotated = rotate_coeffs(basis.vectors[:, ks], ANGLES, b)
    r, phi, t, wr, wphi, wt = cone_grid(CONE.a, CONE.b, CONE.theta, (24, 40, 24))
    Rr, Pp, Tt = np.meshgrid(r, phi, t, indexing="ij")
    xs = to_cartesian(Rr, Pp, Tt).reshape(-1, 3) @ R.T
    vals = synthesize(sys, UNIT, b, rotated, from_cartesian(xs))
    w = np.einsum("r,p,t->rpt", wr, wphi, wt).ravel()
    ratio = np.sum(vals * vals, axis=-1) @ w
    assert np.max(np.abs(ratio - basis.eigenvalues[ks])) < 1e-8
