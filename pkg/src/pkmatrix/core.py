"""Pepis-Kalmar pairing, its binary inverse, Mersenne numbers and bit helpers.

Every natural number ``z`` sits at exactly one lattice point ``(x, y)`` with
``z = 2**y * (2*x + 1) - 1``.  Even numbers fill row 0, Mersenne numbers
fill column 0, and the odd numbers fill the rest of the quadrant.
"""

from __future__ import annotations

import contextlib
from contextvars import ContextVar
from typing import Iterator, NamedTuple, Optional

DEFAULT_BIT_BUDGET = 1 << 20

_bit_budget: ContextVar[int] = ContextVar("pkmatrix_bit_budget", default=DEFAULT_BIT_BUDGET)


class CapacityError(ArithmeticError):
    """A value would need more bits than the active budget allows."""

    def __init__(self, needed_bits: int, budget: int, message: str = ""):
        super().__init__(message or f"result needs {needed_bits} bits, budget is {budget}")
        self.needed_bits = needed_bits
        self.budget = budget


class Coord(NamedTuple):
    x: int
    y: int


def get_bit_budget() -> int:
    return _bit_budget.get()


@contextlib.contextmanager
def bit_budget(bits: int) -> Iterator[int]:
    """Temporarily change the bit budget for the current context."""
    if bits < 1:
        raise ValueError("bit budget must be positive")
    token = _bit_budget.set(bits)
    try:
        yield bits
    finally:
        _bit_budget.reset(token)


def check_capacity(bits: int) -> None:
    budget = _bit_budget.get()
    if bits > budget:
        raise CapacityError(bits, budget)


def _check_nat(*values: int) -> None:
    for v in values:
        if v < 0:
            raise ValueError(f"expected a natural number, got {v}")


def bit_length(z: int) -> int:
    _check_nat(z)
    return z.bit_length()


def trailing_ones(z: int) -> int:
    """Length of the run of 1-bits at the least significant end of ``z``."""
    _check_nat(z)
    # z ^ (z + 1) is a block of (t + 1) ones
    return (z ^ (z + 1)).bit_length() - 1


def pair(x: int, y: int) -> int:
    _check_nat(x, y)
    check_capacity(y + (2 * x + 1).bit_length())
    return ((2 * x + 1) << y) - 1


def unpair(z: int) -> Coord:
    """Invert :func:`pair` by reading the binary code of ``z``.

    The row is the number of trailing 1s; dropping those and the 0 above
    them leaves the column.
    """
    y = trailing_ones(z)
    return Coord(z >> (y + 1), y)


def mersenne(y: int) -> int:
    _check_nat(y)
    check_capacity(y)
    return (1 << y) - 1


def mersenne_index(z: int) -> Optional[int]:
    _check_nat(z)
    if z & (z + 1):
        return None
    return z.bit_length()


def cantor_pair(x: int, y: int) -> int:
    _check_nat(x, y)
    s = x + y
    check_capacity(2 * s.bit_length() + 1)
    return s * (s + 1) // 2 + y


def ceil_log2(n: int) -> int:
    """Exact ``ceil(log2(n))`` for ``n >= 1``."""
    if n < 1:
        raise ValueError("ceil_log2 needs n >= 1")
    return (n - 1).bit_length()
