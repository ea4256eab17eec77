import json
import math
import os

import numpy as np
import pytest

from vecslepian import fileio
from vecslepian.basis import BallPoint, Bandlimit, basis_field_eval, from_cartesian, synthesize, unflat_index
from vecslepian.cli import main, sample_grid
from vecslepian.config import RunConfig, load_config
from vecslepian.rotation import EulerAngles, rotation_matrix

SMALL = ["--M", "1", "--N", "3"]
SMALL_Z = 2 * (3 * 16 - 2)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if code in (0, 1) else None)


# configuration


def test_config_defaults():
    cfg = RunConfig()
    assert (cfg.system, cfg.M, cfg.N, cfg.beta) == ("I", 6, 12, 1.0)
    r = cfg.region_obj()
    assert (r.a, r.b) == (0.25, 0.75)
    assert r.theta == pytest.approx(math.pi / 4)
    assert cfg.bandlimit().Z == 3535
    assert cfg.euler() is None


def test_config_hash_tracks_problem_fields_only():
    base = RunConfig()
    assert base.config_hash() == RunConfig().config_hash()
    assert base.with_overrides(theta_deg=30.0).config_hash() != base.config_hash()
    assert base.with_overrides(system="II").config_hash() != base.config_hash()
    # output location and threshold do not change the matrix
    assert base.with_overrides(output_dir="elsewhere", threshold=0.7).config_hash() == base.config_hash()


def test_config_file_round_trip(tmp_path):
    cfg = RunConfig().with_overrides(system="III", M=2, a=0.1)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg.to_dict()))
    back = load_config(str(path))
    assert back == cfg
    assert load_config(str(path), N=5, theta_deg=None).N == 5


def test_config_rejects_unknown_keys(tmp_path):
    with pytest.raises(ValueError):
        RunConfig.from_dict({"M": 3, "colour": "red"})
    with pytest.raises(ValueError):
        RunConfig.from_dict({"region": {"a": 0.1, "radius": 2}})


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(system="IV")
    with pytest.raises(ValueError):
        RunConfig().with_overrides(a=0.8)
    with pytest.raises(ValueError):
        RunConfig(N=0)


# file formats


def test_matrix_round_trip_exact(tmp_path):
    rng = np.random.default_rng(0)
    A = rng.normal(size=(7, 5))
    path = tmp_path / "A.bin"
    fileio.write_matrix(path, A, "h" * 64, {"note": "x"})
    B, meta, h = fileio.read_matrix(path, "h" * 64)
    assert np.array_equal(A, B)
    assert meta == {"note": "x"} and h == "h" * 64
    side = json.loads((tmp_path / "A.bin.json").read_text())
    assert side["shape"] == [7, 5]


def test_matrix_hash_mismatch_and_bad_magic(tmp_path):
    path = tmp_path / "A.bin"
    fileio.write_matrix(path, np.eye(2), "a" * 64)
    with pytest.raises(fileio.ConfigMismatchError):
        fileio.read_matrix(path, "b" * 64)
    raw = bytearray(path.read_bytes())
    raw[0:1] = b"X"
    path.write_bytes(bytes(raw))
    with pytest.raises(ValueError):
        fileio.read_matrix(path)


def test_samples_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    xyz, f = rng.normal(size=(4, 3)), rng.normal(size=(4, 3))
    path = tmp_path / "s.csv"
    fileio.write_samples(path, xyz, f, "c" * 64)
    lines = path.read_text().splitlines()
    assert lines[1] == "x,y,z,fx,fy,fz,norm"
    arr = fileio.read_samples(path, "c" * 64)
    assert np.array_equal(arr[:, :3], xyz) and np.array_equal(arr[:, 3:6], f)
    assert np.allclose(arr[:, 6], np.linalg.norm(f, axis=1), atol=1e-12)
    with pytest.raises(fileio.ConfigMismatchError):
        fileio.read_samples(path, "d" * 64)


def test_atomic_write_leaves_no_temporaries(tmp_path):
    fileio.atomic_write(tmp_path / "x.txt", b"abc")
    assert os.listdir(tmp_path) == ["x.txt"]
    assert (tmp_path / "x.txt").read_bytes() == b"abc"


# commands on small problems


def test_assemble_and_solve(tmp_path, capsys):
    out = str(tmp_path)
    code, res = run(capsys, "assemble", *SMALL, "--out", out)
    assert code == 0
    assert res["P_size"] == 2 * 16 and res["Q_size"] == 2 * 2 * 15 and res["Z"] == SMALL_Z
    code, res = run(capsys, "solve", *SMALL, "--out", out)
    assert code == 0 and res["Z"] == SMALL_Z
    h = load_config(None, M=1, N=3).config_hash()
    rows = fileio.read_eigenvalues(tmp_path / "eigenvalues.json", h)
    csv_rows = fileio.read_eigenvalues_csv(tmp_path / "eigenvalues.csv", h)
    assert rows == csv_rows
    assert [r["rank"] for r in rows] == list(range(1, SMALL_Z + 1))
    V, _, _ = fileio.read_matrix(tmp_path / "coefficients.bin", h)
    assert np.max(np.abs(V.T @ V - np.eye(SMALL_Z))) < 1e-12
    sh = fileio.read_json(tmp_path / "shannon.json", h)
    assert abs(sh["S"] - sh["S_closed_form"]) < 1e-8
    assert sh["count_above_threshold"] == sum(r["lambda"] >= 0.5 for r in rows)


def test_reruns_are_byte_identical(tmp_path, capsys):
    out = tmp_path / "out"
    assert run(capsys, "solve", *SMALL, "--system", "II", "--out", str(out))[0] == 0
    first = {name: (out / name).read_bytes() for name in os.listdir(out)}
    for name in first:
        os.remove(out / name)
    assert run(capsys, "solve", *SMALL, "--system", "II", "--out", str(out))[0] == 0
    assert sorted(os.listdir(out)) == sorted(first)
    for name, data in first.items():
        assert (out / name).read_bytes() == data


def test_full_ball_trace_is_dimension(tmp_path, capsys):
    args = (*SMALL, "--a", "0", "--b", "1", "--theta-deg", "180", "--out", str(tmp_path))
    code, res = run(capsys, "assemble", *args)
    assert code == 0 and res["trace"] == pytest.approx(SMALL_Z, abs=1e-10)
    code, res = run(capsys, "solve", *args)
    rows = fileio.read_eigenvalues(tmp_path / "eigenvalues.json")
    assert max(abs(r["lambda"] - 1.0) for r in rows) < 1e-10


def test_stale_matrices_are_not_reused(tmp_path, capsys):
    out = str(tmp_path)
    run(capsys, "assemble", *SMALL, "--out", out)
    code, res = run(capsys, "solve", *SMALL, "--theta-deg", "30", "--out", out)
    assert code == 0
    h = load_config(None, M=1, N=3, theta_deg=30.0).config_hash()
    fileio.read_matrix(tmp_path / "P.bin", h)


def test_evaluate_canonical_coefficients(tmp_path, capsys):
    cfg = load_config(None, M=1, N=3, system="III", output_dir=str(tmp_path))
    h = cfg.config_hash()
    b = cfg.bandlimit()
    p = 37
    e = np.zeros((b.Z, 1))
    e[p] = 1.0
    fileio.write_matrix(tmp_path / "e.bin", e, h)
    code, _ = run(capsys, "evaluate", *SMALL, "--system", "III", "--coeffs", str(tmp_path / "e.bin"), "--grid", "2", "5", "4", "--out", str(tmp_path))
    assert code == 0
    arr = fileio.read_samples(tmp_path / "samples.csv", h)
    idx = unflat_index(b, p)
    for row in arr:
        r, phi, t = from_cartesian(row[:3])
        ref = basis_field_eval("III", cfg.geom(), idx, BallPoint(float(r), float(phi), float(t)))
        assert np.allclose(row[3:6], ref, atol=1e-12)


def test_evaluate_rotated_run_is_equivariant(tmp_path, capsys):
    out = str(tmp_path)
    grid = ("--grid", "3", "8", "5")
    assert run(capsys, "evaluate", *SMALL, "--rank", "2", *grid, "--euler-deg", "90", "90", "90", "--out", out)[0] == 0
    cfg = load_config(None, M=1, N=3)
    h = cfg.config_hash()
    rot = fileio.read_samples(tmp_path / "samples.csv", h)
    V, _, _ = fileio.read_matrix(tmp_path / "coefficients.bin", h)
    R = rotation_matrix(EulerAngles.from_degrees(90, 90, 90))
    # preimages R^T x that land on a pole cannot be evaluated tangentially
    pre = rot[:, :3] @ R
    keep = np.abs(pre[:, 2]) < (1 - 1e-6) * np.linalg.norm(pre, axis=1)
    assert keep.sum() > 50
    f = synthesize("I", cfg.geom(), cfg.bandlimit(), V[:, 1], from_cartesian(pre[keep]))
    assert np.max(np.abs(rot[keep, 3:6] - f @ R.T)) < 1e-8


def test_rotate_preserves_norms(tmp_path, capsys):
    code, res = run(capsys, "rotate", *SMALL, "--out", str(tmp_path))
    assert code == 0 and res["max_norm_change"] < 1e-12
    h = load_config(None, M=1, N=3).config_hash()
    W, meta, _ = fileio.read_matrix(tmp_path / "coefficients_rotated.bin", h)
    assert W.shape == (SMALL_Z, SMALL_Z)
    assert meta["euler_rad"] == pytest.approx([math.pi / 2] * 3)


def test_sample_grid_avoids_poles_and_origin():
    cfg = RunConfig()
    xyz, (r, _, t) = sample_grid(cfg)
    assert r.min() > 0 and np.all(np.abs(t) <= 1 - 1e-9)
    assert xyz.shape == (8 * 36 * 19, 3)


def test_error_exit_code(tmp_path, capsys):
    assert main(["evaluate", *SMALL, "--rank", "0", "--out", str(tmp_path)]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["assemble", "--a", "0.9", "--out", str(tmp_path)]) == 2


def test_verify_small_and_fault(tmp_path, capsys):
    code, res = run(capsys, "verify", *SMALL, "--system", "II", "--out", str(tmp_path))
    assert code == 0 and res["passed"]
    names = {c["name"] for c in res["checks"]}
    assert {"entry_oracle", "energy_ratio_oracle", "full_ball_identity", "shannon_trace_identity", "rotation_equivariance"} <= names
    code, res = run(capsys, "verify", *SMALL, "--inject-fault", "--out", str(tmp_path))
    assert code == 1 and not res["passed"]
    failed = [c["name"] for c in res["checks"] if not c["passed"]]
    assert failed == ["entry_oracle"]


def test_verify_full_ball(tmp_path, capsys):
    code, res = run(capsys, "verify", *SMALL, "--a", "0", "--b", "1", "--theta-deg", "180", "--out", str(tmp_path))
    assert code == 0 and res["passed"]


# commands at the default setting


def test_shannon_narrow_cap_rounds_to_twenty(tmp_path, capsys):
    code, res = run(capsys, "shannon", "--theta-deg", "15", "--out", str(tmp_path))
    assert code == 0 and round(res["S"]) == 20


@pytest.mark.slow
def test_default_top_normal_function_in_cap(tmp_path, capsys):
    out = str(tmp_path)
    code, res = run(capsys, "solve", "--out", out)
    assert code == 0 and res["Z"] == 3535 and res["lambda_max"] >= 0.999
    h = RunConfig().config_hash()
    rows = fileio.read_eigenvalues(tmp_path / "eigenvalues.json", h)
    rank = next(r["rank"] for r in rows if r["block"].startswith("P_"))
    code, _ = run(capsys, "evaluate", "--rank", str(rank), "--sphere-radius", "0.5", "--grid", "1", "72", "181", "--out", out)
    assert code == 0
    arr = fileio.read_samples(tmp_path / "samples.csv", h)
    cos_polar = arr[:, 2] / np.linalg.norm(arr[:, :3], axis=1)
    sq = arr[:, 6] ** 2
    assert sq[cos_polar >= math.cos(math.pi / 4)].sum() >= 0.9 * sq.sum()


@pytest.mark.slow
def test_verify_default_setting(tmp_path, capsys):
    code, res = run(capsys, "verify", "--out", str(tmp_path))
    assert code == 0 and res["passed"]
