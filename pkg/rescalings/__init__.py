"""
rescalings - decide when two matrices are rescalings of one another.

M is a rescaling of L when M(x, y) = f(x) g(y) L(x, y) for nonvanishing
f and g. The package decides this for the general, symmetric, Hermitean,
reciprocal and sign (pm1) kinds, compares principal minors, and recovers
isometries between vector sets with equal face volumes.
"""

from . import bifunction, export, generators, geometry, minors, rescaling, scalar
from .settings import __version__

__all__ = [
    "__version__",
    "bifunction",
    "export",
    "generators",
    "geometry",
    "minors",
    "rescaling",
    "scalar",
]
