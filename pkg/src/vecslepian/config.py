"""Run configuration for the command-line front end.

A configuration is a single JSON document.  Every field has a default, and
the defaults describe the reference experiment: system I, ``M = 6``,
``N = 12``, shell ``0.25 <= r <= 0.75`` in the unit ball, cap angle 45 deg.
Angles are given in degrees and converted once, in :meth:`RunConfig.region`.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .basis import Bandlimit, BallGeometry, SystemId
from .locmat import Region
from .quadrature import QuadratureSpec
from .rotation import EulerAngles

__all__ = ["RegionConfig", "EulerConfig", "QuadratureConfig", "GridConfig", "RunConfig", "load_config"]


@dataclass(frozen=True)
class RegionConfig:
    a: float = 0.25
    b: float = 0.75
    theta_deg: float = 45.0


@dataclass(frozen=True)
class EulerConfig:
    alpha: float = 90.0
    beta: float = 90.0
    gamma: float = 90.0


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_subintervals: int = 1000
    gk_points: int = 61


@dataclass(frozen=True)
class GridConfig:
    n_r: int = 8
    n_phi: int = 36
    n_t: int = 19
    sphere_radius: Optional[float] = None


_SECTIONS = {"region": RegionConfig, "euler_deg": EulerConfig, "quadrature": QuadratureConfig, "grid": GridConfig}


@dataclass(frozen=True)
class RunConfig:
    system: str = "I"
    M: int = 6
    N: int = 12
    beta: float = 1.0
    region: RegionConfig = field(default_factory=RegionConfig)
    euler_deg: Optional[EulerConfig] = None
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    threshold: float = 0.5
    output_dir: str = "out"
    grid: GridConfig = field(default_factory=GridConfig)

    def __post_init__(self):
        object.__setattr__(self, "system", SystemId.parse(self.system).value)
        # construct the domain objects once so invalid settings fail early
        self.bandlimit()
        self.region_obj()
        self.quad_spec()
        g = self.grid
        if min(g.n_r, g.n_phi, g.n_t) < 1:
            raise ValueError("grid sizes must be positive")
        if g.sphere_radius is not None and not (0.0 < g.sphere_radius <= self.beta):
            raise ValueError(f"sphere radius must lie in (0, beta], got {g.sphere_radius}")

    # domain objects

    def sys(self):
        return SystemId.parse(self.system)

    def bandlimit(self):
        return Bandlimit(int(self.M), int(self.N))

    def geom(self):
        return BallGeometry(float(self.beta))

    def region_obj(self):
        r = self.region
        return Region(float(r.a), float(r.b), math.radians(r.theta_deg)).validate(self.geom())

    def quad_spec(self):
        q = self.quadrature
        return QuadratureSpec(q.abs_tol, q.rel_tol, int(q.max_subintervals), int(q.gk_points))

    def euler(self):
        e = self.euler_deg
        return None if e is None else EulerAngles.from_degrees(e.alpha, e.beta, e.gamma)

    # serialisation

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        unknown = set(data) - {f.name for f in dataclasses.fields(cls)}
        if unknown:
            raise ValueError(f"unknown configuration keys: {sorted(unknown)}")
        for key, sub in _SECTIONS.items():
            val = data.get(key)
            if isinstance(val, dict):
                bad = set(val) - {f.name for f in dataclasses.fields(sub)}
                if bad:
                    raise ValueError(f"unknown keys in {key!r}: {sorted(bad)}")
                data[key] = sub(**val)
        return cls(**data)

    def with_overrides(self, **kw):
        """Copy with top-level fields or ``region.*`` keys replaced; ``None`` values are ignored."""
        top, region = {}, {}
        for key, val in kw.items():
            if val is None:
                continue
            if key in ("a", "b", "theta_deg"):
                region[key] = val
            else:
                top[key] = val
        if region:
            top["region"] = dataclasses.replace(self.region, **region)
        return dataclasses.replace(self, **top)

    def problem_dict(self):
        """The fields that determine the localisation matrix."""
        d = self.to_dict()
        return {k: d[k] for k in ("system", "M", "N", "beta", "region", "quadrature")}

    def config_hash(self):
        """SHA-256 of the canonical JSON of :meth:`problem_dict`."""
        blob = json.dumps(self.problem_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def load_config(path=None, **overrides):
    """Read a JSON configuration (or the defaults) and apply overrides."""
    if path is None:
        cfg = RunConfig()
    else:
        with open(path, encoding="utf-8") as fh:
            cfg = RunConfig.from_dict(json.load(fh))
    return cfg.with_overrides(**overrides)
