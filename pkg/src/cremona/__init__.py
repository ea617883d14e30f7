"""Exact symbolic calculus for rational maps between projective spaces.

The package verifies, by exact rational arithmetic, the algebra of the
conic-space embedding of the plane Cremona group: generator relations,
the dual embedding and its adjugate conjugation, Veronese/secant
equivariance, volume-form invariance, degree growth through the induced
product-space embeddings, and the codimension-one suspension embeddings.

Entry points: the classes in :mod:`cremona.rings` and
:mod:`cremona.maps`, the named constructions in :mod:`cremona.conics`,
and the ``cremona`` command-line tool (:mod:`cremona.cli`).
"""

from ._backend import BACKEND
from .maps import AffineMap, MultiProjectiveMap, ProjectiveMap
from .rings import Polynomial, Ring, RationalFunction, affine_ring, proj_ring, ring

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BACKEND",
    "MultiProjectiveMap",
    "Polynomial",
    "ProjectiveMap",
    "RationalFunction",
    "Ring",
    "affine_ring",
    "proj_ring",
    "ring",
    "__version__",
]
