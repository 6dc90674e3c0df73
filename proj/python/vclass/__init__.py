"""Uniform distance between mean-0 variance-1 laws and the standard normal."""

from ._core import *  # noqa: F401,F403
from ._core import (
    DataError,
    DiscreteDistribution,
    extremal_constants,
    kolmogorov_distance,
    solve_constants,
)

__all__ = [name for name in dir() if not name.startswith("_")]
