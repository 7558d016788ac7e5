"""Row and column progressions of the matrix and their generating functions.

Rows are arithmetic progressions ``M_y + k * 2**(y+1)``; columns follow
``a -> 2a + 1``.  Both families have rational generating functions with
denominator constant term 1, so their power series are expanded exactly
with integer arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Sequence

from .core import check_capacity, mersenne, pair


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(int(c) for c in self.numerator))
        object.__setattr__(self, "denominator", tuple(int(c) for c in self.denominator))
        if not self.denominator or self.denominator[0] != 1:
            raise ValueError("denominator must have constant term 1")

    def expand(self, count: int) -> List[int]:
        return expand_series(self, count)

    def __str__(self):
        return f"({_poly_text(self.numerator)})/({_poly_text(self.denominator)})"

    def to_json(self) -> str:
        return json.dumps({"numerator": list(self.numerator), "denominator": list(self.denominator)})


_POWERS = {0: "", 1: "·t", 2: "·t²", 3: "·t³"}


def _poly_text(coeffs: Sequence[int]) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        mono = f"{abs(c)}{_POWERS.get(k, f'·t^{k}')}"
        if k == 0:
            parts.append(f"-{mono}" if c < 0 else mono)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {mono}")
    return " ".join(parts)


def expand_series(s: RationalSeries, count: int) -> List[int]:
    """First ``count`` power-series coefficients of ``s``.

    Uses ``c_k = num_k - sum_{j>=1} den_j * c_{k-j}``, which is exact
    because ``den_0 == 1``.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    num, den = s.numerator, s.denominator
    if not den or den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out: List[int] = []
    for k in range(count):
        c = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            c -= den[j] * out[k - j]
        out.append(c)
    return out


def row_terms(y: int, count: int) -> List[int]:
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return []
    # validates y and the largest term against the bit budget
    pair(count - 1, y)
    start, step = mersenne(y), 1 << (y + 1)
    return [start + k * step for k in range(count)]


def column_terms(x: int, count: int) -> List[int]:
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return []
    pair(x, count - 1)
    out = [2 * x]
    for _ in range(count - 1):
        out.append(2 * out[-1] + 1)
    return out


# (1 - t)(1 - 2t)
_COLUMN_DEN = (1, -3, 2)
# (1 - t)^2
_ROW_DEN = (1, -2, 1)


def column_gf(x: int) -> RationalSeries:
    if x < 0:
        raise ValueError("x must be >= 0")
    return RationalSeries((2 * x, -(2 * x - 1)), _COLUMN_DEN)


def row_gf(y: int) -> RationalSeries:
    m = mersenne(y)
    check_capacity(y + 1)
    return RationalSeries((m, m + 2), _ROW_DEN)
