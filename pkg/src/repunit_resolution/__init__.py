"""Minimal graded free resolutions of generalized repunit semigroup rings."""

from .encomplex import GradedComplex, build_resolution
from .semigroup import (InvariantError, ParameterError, RepunitParams,
                        RepunitSemigroup, construct)

__all__ = [
    "GradedComplex",
    "InvariantError",
    "ParameterError",
    "RepunitParams",
    "RepunitSemigroup",
    "build_resolution",
    "construct",
]
__version__ = "0.1.0"
