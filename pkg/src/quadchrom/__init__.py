"""Cubical complexes, Z2 cohomology and colouring certificates for quadrangulations."""

from .cubecore import CubicalComplex, Cube, CellInvolution, ComplexError, QuotientError, validate
from .graphcolor import Coloring, ColoringError, Graph

__version__ = "0.1.0"

__all__ = [
    "CellInvolution",
    "Coloring",
    "ColoringError",
    "ComplexError",
    "Cube",
    "CubicalComplex",
    "Graph",
    "QuotientError",
    "validate",
]
