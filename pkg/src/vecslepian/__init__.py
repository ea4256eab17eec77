"""Vectorial Slepian functions on the ball.

Typical use::

    from vecslepian import Bandlimit, Region, assemble, solve, shannon
    K = assemble("I", Bandlimit(6, 12), Region(0.25, 0.75, math.pi / 4))
    basis = solve(K)
    shannon(K, basis=basis).S
"""

from .basis import Bandlimit, BallGeometry, BallPoint, BasisIndex, DomainError, SystemId, synthesize
from .locmat import AssemblyError, LocalisationMatrix, Region, assemble
from .quadrature import QuadratureError, QuadratureSpec, integrate_adaptive
from .rotation import EulerAngles, real_wigner_block, rotate_coeffs
from .slepian import ShannonReport, SlepianBasis, classify, energy_ratio, shannon, solve

__version__ = "0.1.0"

__all__ = [
    "Bandlimit",
    "BallGeometry",
    "BallPoint",
    "BasisIndex",
    "DomainError",
    "SystemId",
    "synthesize",
    "AssemblyError",
    "LocalisationMatrix",
    "Region",
    "assemble",
    "QuadratureError",
    "QuadratureSpec",
    "integrate_adaptive",
    "EulerAngles",
    "real_wigner_block",
    "rotate_coeffs",
    "ShannonReport",
    "SlepianBasis",
    "classify",
    "energy_ratio",
    "shannon",
    "solve",
]
