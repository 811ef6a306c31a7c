"""Finite semigroups, right acts and X-diameters, with checks of minimal-ideal theorems."""
from .core import FiniteSemigroup, Transformation, adjoin_identity, closure_from_transformations, validate

__all__ = ["FiniteSemigroup", "Transformation", "adjoin_identity", "closure_from_transformations", "validate"]
__version__ = "0.1.0"
