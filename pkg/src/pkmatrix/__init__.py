"""The Pepis-Kalmar matrix of natural numbers and the checks built on it."""

from .core import (
    CapacityError,
    Coord,
    bit_budget,
    bit_length,
    cantor_pair,
    mersenne,
    mersenne_index,
    pair,
    trailing_ones,
    unpair,
)
from .primes import is_prime, is_safe_prime, is_sophie_germain

__all__ = [
    "CapacityError",
    "Coord",
    "bit_budget",
    "bit_length",
    "cantor_pair",
    "is_prime",
    "is_safe_prime",
    "is_sophie_germain",
    "mersenne",
    "mersenne_index",
    "pair",
    "trailing_ones",
    "unpair",
]
