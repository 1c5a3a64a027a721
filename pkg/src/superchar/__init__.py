"""Combinatorics of characters of finite-dimensional orthosymplectic supermodules."""

from .rootdata import AlgebraDescriptor, ExtendedWeight, Family

__all__ = ["AlgebraDescriptor", "ExtendedWeight", "Family"]
__version__ = "0.1.0"
