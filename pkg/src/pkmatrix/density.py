"""Finite-window densities as exact rationals.

Window convention: members are counted in ``[1, N]`` and divided by ``N``.
Row 0 is the exception, since 0 itself belongs to it; there the window is
``[0, N]``.  Each report says which window it used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import check_capacity, unpair


@dataclass(frozen=True)
class DensityReport:
    set_description: str
    window: int
    count: int
    limit: Optional[Fraction] = None

    @property
    def density(self) -> Fraction:
        return Fraction(self.count, self.window)

    def as_dict(self) -> dict:
        d = self.density
        return {
            "set": self.set_description,
            "N": self.window,
            "count": self.count,
            "density_num": d.numerator,
            "density_den": d.denominator,
            "limit_num": None if self.limit is None else self.limit.numerator,
            "limit_den": None if self.limit is None else self.limit.denominator,
        }


def _check_window(N: int) -> None:
    if N < 1:
        raise ValueError("window N must be >= 1")
    check_capacity(N.bit_length())


def _row_count(y: int, N: int) -> int:
    """Number of ``z`` in ``[0, N]`` with exactly ``y`` trailing ones."""
    # z = M_y + k * 2**(y+1) <= N
    m = (1 << y) - 1
    if m > N:
        return 0
    return (N - m) // (1 << (y + 1)) + 1


def row_density(y: int, N: int) -> DensityReport:
    if y < 0:
        raise ValueError("y must be >= 0")
    _check_window(N)
    count = _row_count(y, N)
    window = "[0, N]" if y == 0 else "[1, N]"
    return DensityReport(f"row {y} (z with {y} trailing ones) in {window}", N, count,
                         Fraction(1, 1 << (y + 1)))


def mersenne_density(N: int) -> DensityReport:
    _check_window(N)
    # M_y <= N  <=>  y <= floor(log2(N + 1)); y >= 1 keeps 0 out
    count = (N + 1).bit_length() - 1
    return DensityReport("Mersenne numbers M_y, y >= 1, in [1, N]", N, count)


def column_density(x: int, N: int) -> DensityReport:
    if x < 0:
        raise ValueError("x must be >= 0")
    _check_window(N)
    count = 0
    z = 2 * x
    while z <= N:
        if z >= 1:
            count += 1
        z = 2 * z + 1
    return DensityReport(f"column {x} in [1, N]", N, count, Fraction(0))


def sg_region_count_direct(N: int) -> int:
    """Odd ``z <= N`` whose column index is 1 mod 3, by scanning every ``z``."""
    return sum(1 for z in range(1, N + 1, 2) if unpair(z).x % 3 == 1)


def sg_region_count_by_rows(N: int) -> int:
    """Same count as :func:`sg_region_count_direct`, tallied row by row."""
    total = 0
    y = 1
    while (1 << y) - 1 <= N:
        # largest x with 2**y * (2x + 1) - 1 <= N
        xmax = (((N + 1) >> y) - 1) >> 1
        # x in [0, xmax] with x = 1 (mod 3)
        total += (xmax + 2) // 3
        y += 1
    return total


def sg_region_density(N: int, cross_check: bool = False) -> DensityReport:
    _check_window(N)
    count = sg_region_count_by_rows(N)
    if cross_check and count != sg_region_count_direct(N):
        raise AssertionError(f"row tally and direct scan disagree at N={N}")
    return DensityReport("odd z in [1, N] with column x = 1 (mod 3)", N, count, Fraction(1, 6))


def format_fraction(f: Fraction, digits: int = 6) -> str:
    return f"{float(f):.{digits}g}"
