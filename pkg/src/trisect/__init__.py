"""Exact square trisections over Q(sqrt2, sqrt3).

Build a dissection from the catalog, certify it with :func:`verify`, measure
it with :func:`metrics`, and render or export it from the ``trisect`` CLI.
"""

from .catalog import CATALOG, build
from .geom import Point, Polygon, RigidMotion, pt
from .model import Dissection, Piece, compare, metrics, symmetry_order, verify
from .scalar import ONE, SQRT2, SQRT3, SQRT6, ZERO, Scalar

__all__ = [
    "CATALOG",
    "build",
    "Point",
    "Polygon",
    "RigidMotion",
    "pt",
    "Dissection",
    "Piece",
    "compare",
    "metrics",
    "symmetry_order",
    "verify",
    "Scalar",
    "ZERO",
    "ONE",
    "SQRT2",
    "SQRT3",
    "SQRT6",
]

__version__ = "0.1.0"
