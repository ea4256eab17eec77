"""File formats for matrices, spectra and field samples.

Binary matrices
    Little-endian header ``<8s H H I Q Q 64s I``: magic ``b"VSLPMAT\\0"``,
    format version, reserved, number of dimensions (always 2), rows, columns,
    the hex config hash, and the byte length of a UTF-8 JSON metadata block
    that follows.  The payload is row-major little-endian float64.  A JSON
    sidecar ``<file>.json`` repeats the header fields for humans.

Every writer stamps the config hash and every reader can check it, so files
from different configurations are never mixed.  Writes go to a temporary file
in the target directory and are moved into place with :func:`os.replace`.
"""

from __future__ import annotations

import json
import math
import os
import struct
import tempfile

import numpy as np

__all__ = [
    "MAGIC",
    "FORMAT_VERSION",
    "ConfigMismatchError",
    "atomic_write",
    "write_json",
    "read_json",
    "write_matrix",
    "read_matrix",
    "eigen_rows",
    "write_eigenvalues",
    "read_eigenvalues",
    "write_eigenvalues_csv",
    "read_eigenvalues_csv",
    "write_samples",
    "read_samples",
    "SAMPLE_HEADER",
]

MAGIC = b"VSLPMAT\0"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<8sHHIQQ64sI")
SAMPLE_HEADER = "x,y,z,fx,fy,fz,norm"


class ConfigMismatchError(ValueError):
    """A file was produced under a different configuration."""


def atomic_write(path, data: bytes):
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        # mkstemp creates 0600; give the file the usual umask-derived mode
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _check_hash(found, expected, path):
    if expected is not None and found != expected:
        raise ConfigMismatchError(f"{path} was written for config {found[:12]}..., expected {expected[:12]}...")


def _dumps(obj):
    return (json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n").encode()


def write_json(path, obj, config_hash):
    payload = dict(obj)
    payload["config_hash"] = config_hash
    atomic_write(path, _dumps(payload))


def read_json(path, expected_hash=None):
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    _check_hash(obj.get("config_hash"), expected_hash, path)
    return obj


def write_matrix(path, matrix, config_hash, meta=None):
    """Write a 2-D float array in the binary format plus a JSON sidecar."""
    a = np.ascontiguousarray(matrix, dtype="<f8")
    if a.ndim != 2:
        raise ValueError("only 2-D arrays are supported")
    meta_blob = json.dumps(meta or {}, sort_keys=True, separators=(",", ":")).encode()
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, 0, 2, a.shape[0], a.shape[1], config_hash.encode("ascii"), len(meta_blob))
    atomic_write(path, header + meta_blob + a.tobytes(order="C"))
    side = {"format_version": FORMAT_VERSION, "shape": list(a.shape), "dtype": "<f8", "meta": meta or {}}
    write_json(os.fspath(path) + ".json", side, config_hash)


def read_matrix(path, expected_hash=None):
    """Read a binary matrix; returns ``(array, meta, config_hash)``.

    Raises
    ------
    ConfigMismatchError
        If ``expected_hash`` is given and differs from the stored one.
    ValueError
        On a malformed file.
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < _HEADER.size:
        raise ValueError(f"{path}: file too short for a matrix header")
    magic, version, _, ndim, rows, cols, h, mlen = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise ValueError(f"{path}: bad magic {magic!r}")
    if version != FORMAT_VERSION or ndim != 2:
        raise ValueError(f"{path}: unsupported format version {version} / ndim {ndim}")
    config_hash = h.decode("ascii")
    _check_hash(config_hash, expected_hash, path)
    start = _HEADER.size + mlen
    meta = json.loads(raw[_HEADER.size : start].decode())
    if len(raw) - start != rows * cols * 8:
        raise ValueError(f"{path}: payload size does not match {rows}x{cols}")
    arr = np.frombuffer(raw, dtype="<f8", offset=start).reshape(rows, cols).astype(float)
    return arr, meta, config_hash


def eigen_rows(basis):
    rows = []
    for k, lam in enumerate(basis.eigenvalues):
        j = basis.order[k]
        rows.append({"rank": k + 1, "lambda": float(lam), "block": str(basis.block[k]), "j": None if j is None else int(j)})
    return rows


def write_eigenvalues(path, basis, config_hash, shannon=None):
    """``eigenvalues.json``: ``{"eigenvalues": [{rank, lambda, block, j}, ...], ...}``."""
    obj = {"eigenvalues": eigen_rows(basis)}
    if shannon is not None:
        obj["shannon"] = shannon
    write_json(path, obj, config_hash)


def read_eigenvalues(path, expected_hash=None):
    return read_json(path, expected_hash)["eigenvalues"]


def write_eigenvalues_csv(path, basis, config_hash):
    lines = [f"# config_hash={config_hash}", "rank,lambda,block,j"]
    for row in eigen_rows(basis):
        j = "" if row["j"] is None else str(row["j"])
        lines.append(f"{row['rank']},{row['lambda']!r},{row['block']},{j}")
    atomic_write(path, ("\n".join(lines) + "\n").encode())


def _read_hash_comment(lines, path, expected_hash):
    if not lines or not lines[0].startswith("# config_hash="):
        raise ValueError(f"{path}: missing config hash line")
    found = lines[0].split("=", 1)[1].strip()
    _check_hash(found, expected_hash, path)
    return lines[1:]


def read_eigenvalues_csv(path, expected_hash=None):
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    lines = _read_hash_comment(lines, path, expected_hash)
    out = []
    for line in lines[1:]:
        rank, lam, block, j = line.split(",")
        out.append({"rank": int(rank), "lambda": float(lam), "block": block, "j": int(j) if j else None})
    return out


def write_samples(path, xyz, field, config_hash):
    """``samples.csv``: hash comment line, header ``x,y,z,fx,fy,fz,norm``, one row per point."""
    xyz = np.asarray(xyz, dtype=float).reshape(-1, 3)
    field = np.asarray(field, dtype=float).reshape(-1, 3)
    lines = [f"# config_hash={config_hash}", SAMPLE_HEADER]
    for p, f in zip(xyz, field):
        norm = math.sqrt(math.fsum(f * f))
        lines.append(",".join(repr(float(v)) for v in (*p, *f, norm)))
    atomic_write(path, ("\n".join(lines) + "\n").encode())


def read_samples(path, expected_hash=None):
    """Returns an ``(n, 7)`` array with the CSV columns."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    lines = _read_hash_comment(lines, path, expected_hash)
    if lines[0] != SAMPLE_HEADER:
        raise ValueError(f"{path}: unexpected header {lines[0]!r}")
    return np.array([[float(v) for v in line.split(",")] for line in lines[1:]]).reshape(-1, 7)
