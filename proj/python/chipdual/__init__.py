"""Exact chip-firing on (L, M) pairs.

Integers come back as Python ints and rationals as fractions.Fraction.
"""

from ._chipdual import *  # noqa: F401,F403
from ._chipdual import Pair, fixture

__all__ = [name for name in dir() if not name.startswith("_")]
