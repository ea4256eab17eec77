"""Command-line front end: ``vecslepian <command> [--config FILE] [overrides]``.

Commands
--------
assemble   write the normal and tangential blocks ``P.bin``, ``Q.bin`` and ``assemble.json``
solve      eigen-decomposition: ``eigenvalues.json``, ``eigenvalues.csv``, ``shannon.json``, ``coefficients.bin``
shannon    Shannon number from the diagonal only: ``shannon.json``
evaluate   sample one Slepian function on a grid: ``samples.csv``
rotate     rotate all Slepian coefficients by the configured Euler angles: ``coefficients_rotated.bin``
verify     run the oracle suite: ``verify.json``

All outputs land in the configured output directory and carry the config hash.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import math
import os
import sys as _sys
import time

import numpy as np

from . import fileio
from .basis import synthesize, to_cartesian
from .config import EulerConfig, load_config
from .locmat import LocalisationMatrix, assemble
from .oracles import run_checks
from .rotation import EulerAngles, rotate_coeffs
from .slepian import shannon, solve

__all__ = ["main", "build_parser", "sample_grid"]

log = logging.getLogger("vecslepian")

POLE_CLAMP = 1e-9
_DEFAULT_EULER = EulerConfig()


def _out(cfg, name):
    return os.path.join(cfg.output_dir, name)


def _problem_meta(cfg):
    r = cfg.region_obj()
    return {"system": cfg.system, "M": cfg.M, "N": cfg.N, "a": r.a, "b": r.b, "theta": r.theta, "beta": cfg.beta}


# ---------------------------------------------------------------- matrices


def _write_matrices(cfg, K):
    h = cfg.config_hash()
    b = K.bandlimit
    meta = _problem_meta(cfg)
    fileio.write_matrix(_out(cfg, "P.bin"), K.P, h, {**meta, "block": "P", "offset": 0})
    fileio.write_matrix(_out(cfg, "Q.bin"), K.Q, h, {**meta, "block": "Q", "offset": b.n_normal})
    info = {
        "config": cfg.to_dict(),
        "P_size": b.n_normal,
        "Q_size": b.n_tangential,
        "Z": b.Z,
        "trace": K.trace(),
        "block_offsets": {"P": 0, "Q": b.n_normal},
    }
    fileio.write_json(_out(cfg, "assemble.json"), info, h)
    return info


def _load_or_assemble(cfg, write=True):
    h = cfg.config_hash()
    p_path, q_path = _out(cfg, "P.bin"), _out(cfg, "Q.bin")
    if os.path.exists(p_path) and os.path.exists(q_path):
        try:
            P, _, _ = fileio.read_matrix(p_path, h)
            Q, _, _ = fileio.read_matrix(q_path, h)
            return LocalisationMatrix(cfg.sys(), cfg.bandlimit(), cfg.region_obj(), cfg.geom(), P, Q)
        except fileio.ConfigMismatchError:
            log.info("stored matrices belong to another configuration; reassembling")
    t0 = time.perf_counter()
    K = assemble(cfg.sys(), cfg.bandlimit(), cfg.region_obj(), cfg.geom(), cfg.quad_spec())
    log.info("assembled Z=%d in %.1fs", K.Z, time.perf_counter() - t0)
    if write:
        _write_matrices(cfg, K)
    return K


def _load_coefficients(cfg):
    """Slepian coefficients and eigenvalues, solving first when absent."""
    h = cfg.config_hash()
    c_path, e_path = _out(cfg, "coefficients.bin"), _out(cfg, "eigenvalues.json")
    if os.path.exists(c_path) and os.path.exists(e_path):
        try:
            V, _, _ = fileio.read_matrix(c_path, h)
            rows = fileio.read_eigenvalues(e_path, h)
            return V, rows
        except fileio.ConfigMismatchError:
            log.info("stored coefficients belong to another configuration; solving again")
    basis = _solve_and_write(cfg)
    return np.array(basis.vectors), fileio.eigen_rows(basis)


def _shannon_dict(rep):
    return {
        "S": rep.S,
        "S_closed_form": rep.S_closed_form,
        "count_above_threshold": rep.count_above_threshold,
        "threshold": rep.threshold,
    }


def _solve_and_write(cfg):
    K = _load_or_assemble(cfg)
    basis = solve(K)
    h = cfg.config_hash()
    rep = _shannon_dict(shannon(K, threshold=cfg.threshold, basis=basis, spec=cfg.quad_spec()))
    fileio.write_eigenvalues(_out(cfg, "eigenvalues.json"), basis, h, rep)
    fileio.write_eigenvalues_csv(_out(cfg, "eigenvalues.csv"), basis, h)
    fileio.write_json(_out(cfg, "shannon.json"), rep, h)
    fileio.write_matrix(_out(cfg, "coefficients.bin"), basis.vectors, h, {**_problem_meta(cfg), "columns": "slepian functions by rank"})
    return basis


# ---------------------------------------------------------------- commands


def cmd_assemble(cfg):
    K = _load_or_assemble(cfg, write=False)
    info = _write_matrices(cfg, K)
    return {k: info[k] for k in ("P_size", "Q_size", "Z", "trace")}


def cmd_solve(cfg):
    basis = _solve_and_write(cfg)
    return {
        "Z": basis.Z,
        "lambda_max": float(basis.eigenvalues[0]),
        "shannon": fileio.read_json(_out(cfg, "shannon.json"))["S"],
    }


def cmd_shannon(cfg):
    h = cfg.config_hash()
    rep = shannon((cfg.sys(), cfg.bandlimit(), cfg.region_obj(), cfg.geom()), cfg.threshold, spec=cfg.quad_spec())
    out = _shannon_dict(rep)
    e_path = _out(cfg, "eigenvalues.json")
    if os.path.exists(e_path):
        try:
            lam = np.array([row["lambda"] for row in fileio.read_eigenvalues(e_path, h)])
            out["count_above_threshold"] = int(np.count_nonzero(lam >= cfg.threshold))
        except fileio.ConfigMismatchError:
            pass
    fileio.write_json(_out(cfg, "shannon.json"), out, h)
    return out


def sample_grid(cfg):
    """Cartesian sample points and their ``(r, phi, t)`` coordinates.

    The interior grid uses cell-centred radii, so ``r = 0`` is never sampled;
    ``t`` is clamped away from the poles.
    """
    g = cfg.grid
    beta = cfg.beta
    if g.sphere_radius is not None:
        r = np.array([float(g.sphere_radius)])
    else:
        r = beta * (np.arange(g.n_r) + 0.5) / g.n_r
    phi = 2.0 * math.pi * np.arange(g.n_phi) / g.n_phi
    t = np.linspace(-1.0 + POLE_CLAMP, 1.0 - POLE_CLAMP, g.n_t) if g.n_t > 1 else np.array([0.0])
    R, PH, T = (a.ravel() for a in np.meshgrid(r, phi, t, indexing="ij"))
    return to_cartesian(R, PH, T), (R, PH, T)


def cmd_evaluate(cfg, rank=1, coeffs_path=None):
    b = cfg.bandlimit()
    h = cfg.config_hash()
    if coeffs_path is not None:
        C, _, _ = fileio.read_matrix(coeffs_path, h)
        if C.size != b.Z:
            raise ValueError(f"{coeffs_path} holds {C.shape}, expected {b.Z} coefficients")
        c = C.ravel()
    else:
        V, rows = _load_coefficients(cfg)
        if not 1 <= rank <= b.Z:
            raise ValueError(f"rank must lie in 1..{b.Z}, got {rank}")
        c = V[:, rank - 1]
    angles = cfg.euler()
    if angles is not None:
        c = rotate_coeffs(c, angles, b)
    xyz, rpt = sample_grid(cfg)
    f = synthesize(cfg.sys(), cfg.geom(), b, c, rpt)
    fileio.write_samples(_out(cfg, "samples.csv"), xyz, f, h)
    return {"points": int(xyz.shape[0]), "rank": None if coeffs_path else rank, "rotated": angles is not None}


def cmd_rotate(cfg):
    b = cfg.bandlimit()
    h = cfg.config_hash()
    angles = cfg.euler() or EulerAngles.from_degrees(_DEFAULT_EULER.alpha, _DEFAULT_EULER.beta, _DEFAULT_EULER.gamma)
    V, _ = _load_coefficients(cfg)
    W = rotate_coeffs(V, angles, b)
    meta = {**_problem_meta(cfg), "euler_rad": list(angles.as_tuple())}
    fileio.write_matrix(_out(cfg, "coefficients_rotated.bin"), W, h, meta)
    return {"Z": b.Z, "euler_rad": list(angles.as_tuple()), "max_norm_change": float(np.max(np.abs(np.linalg.norm(W, axis=0) - np.linalg.norm(V, axis=0))))}


def cmd_verify(cfg, inject_fault=False, seed=0):
    report = run_checks(
        cfg.sys(),
        cfg.bandlimit(),
        cfg.region_obj(),
        cfg.geom(),
        cfg.quad_spec(),
        angles=cfg.euler(),
        seed=seed,
        inject_fault=inject_fault,
    )
    fileio.write_json(_out(cfg, "verify.json"), report, cfg.config_hash())
    return report


# ---------------------------------------------------------------- parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON configuration file")
    common.add_argument("--system", choices=["I", "II", "III"])
    common.add_argument("--M", type=int)
    common.add_argument("--N", type=int)
    common.add_argument("--a", type=float)
    common.add_argument("--b", type=float)
    common.add_argument("--theta-deg", type=float, dest="theta_deg")
    common.add_argument("--beta", type=float)
    common.add_argument("--threshold", type=float)
    common.add_argument("--out", dest="output_dir", help="output directory")
    common.add_argument("--euler-deg", type=float, nargs=3, metavar=("ALPHA", "BETA", "GAMMA"))
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="vecslepian", description="Vectorial Slepian functions on the ball.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("assemble", parents=[common], help="assemble the localisation matrix")
    sub.add_parser("solve", parents=[common], help="eigen-decompose the localisation matrix")
    sub.add_parser("shannon", parents=[common], help="Shannon number from the diagonal")
    ev = sub.add_parser("evaluate", parents=[common], help="sample a Slepian function on a grid")
    ev.add_argument("--rank", type=int, default=1, help="1-based Slepian rank (default 1)")
    ev.add_argument("--coeffs", help="binary coefficient file to evaluate instead of a rank")
    ev.add_argument("--sphere-radius", type=float, help="sample a single sphere of this radius")
    ev.add_argument("--grid", type=int, nargs=3, metavar=("N_R", "N_PHI", "N_T"))
    sub.add_parser("rotate", parents=[common], help="rotate Slepian coefficients")
    vf = sub.add_parser("verify", parents=[common], help="run the oracle suite")
    vf.add_argument("--inject-fault", action="store_true", help="corrupt one entry to exercise the verifier")
    vf.add_argument("--seed", type=int, default=0)
    return parser


def _config_from_args(args):
    cfg = load_config(
        args.config,
        system=args.system,
        M=args.M,
        N=args.N,
        a=args.a,
        b=args.b,
        theta_deg=args.theta_deg,
        beta=args.beta,
        threshold=args.threshold,
        output_dir=args.output_dir,
    )
    if args.euler_deg is not None:
        cfg = dataclasses.replace(cfg, euler_deg=EulerConfig(*args.euler_deg))
    grid = {}
    if getattr(args, "sphere_radius", None) is not None:
        grid["sphere_radius"] = args.sphere_radius
    if getattr(args, "grid", None) is not None:
        grid.update(zip(("n_r", "n_phi", "n_t"), args.grid))
    if grid:
        cfg = dataclasses.replace(cfg, grid=dataclasses.replace(cfg.grid, **grid))
    return cfg


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = _config_from_args(args)
        if args.command == "assemble":
            result = cmd_assemble(cfg)
        elif args.command == "solve":
            result = cmd_solve(cfg)
        elif args.command == "shannon":
            result = cmd_shannon(cfg)
        elif args.command == "evaluate":
            result = cmd_evaluate(cfg, args.rank, args.coeffs)
        elif args.command == "rotate":
            result = cmd_rotate(cfg)
        else:
            result = cmd_verify(cfg, args.inject_fault, args.seed)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2
    print(json.dumps(result, indent=2, sort_keys=True))
    if args.command == "verify":
        return 0 if result["passed"] else 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
