"""Render the matrix fragment and the prime "matrix carpet".

Rows are drawn with ``y = 0`` at the bottom.  Each cell is classified as
blank (0, 1, composites), prime, or Sophie Germain prime; with
``mark_safe`` set, safe primes that are not themselves Sophie Germain get a
class of their own.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List

from .core import pair
from .primes import is_prime, is_safe_prime, is_sophie_germain

FORMATS = ("ascii", "pgm", "svg")
MODES = ("values", "carpet")
CELL = 10


class UnsupportedFormatError(ValueError):
    pass


class Mark(enum.IntEnum):
    BLANK = 0
    PRIME = 1
    SOPHIE_GERMAIN = 2
    SAFE = 3


GLYPHS = {Mark.BLANK: " ", Mark.PRIME: ".", Mark.SOPHIE_GERMAIN: "*", Mark.SAFE: "+"}
GRAYS = {Mark.BLANK: 255, Mark.PRIME: 0, Mark.SOPHIE_GERMAIN: 96, Mark.SAFE: 176}
# occupied-but-blank cells in values mode
VALUE_GRAY = 224
COLORS = {Mark.PRIME: "black", Mark.SOPHIE_GERMAIN: "red", Mark.SAFE: "blue"}


@dataclass(frozen=True)
class CarpetSpec:
    width: int
    height: int
    format: str = "ascii"
    mode: str = "carpet"
    mark_safe: bool = False

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("width and height must be >= 1")
        if self.format not in FORMATS:
            raise UnsupportedFormatError(f"unsupported format {self.format!r}; pick one of {FORMATS}")
        if self.mode not in MODES:
            raise ValueError(f"unsupported mode {self.mode!r}; pick one of {MODES}")


def classify(z: int, mark_safe: bool = False) -> Mark:
    if not is_prime(z):
        return Mark.BLANK
    if is_sophie_germain(z):
        return Mark.SOPHIE_GERMAIN
    if mark_safe and is_safe_prime(z):
        return Mark.SAFE
    return Mark.PRIME


def value_grid(spec: CarpetSpec) -> List[List[int]]:
    """Values indexed ``[y][x]`` (row 0 first)."""
    pair(spec.width - 1, spec.height - 1)
    return [[pair(x, y) for x in range(spec.width)] for y in range(spec.height)]


def mark_grid(spec: CarpetSpec) -> List[List[Mark]]:
    """Marks indexed ``[y][x]``.

    Column entries satisfy ``F(x, y + 1) = 2 F(x, y) + 1``, so the Sophie
    Germain test of a cell reuses the primality of the cell above it.
    """
    values = value_grid(spec)
    primes = [[is_prime(v) for v in row] for row in values]
    above = [is_prime(2 * v + 1) for v in values[-1]]
    marks = []
    for y, row in enumerate(values):
        up = primes[y + 1] if y + 1 < spec.height else above
        out = []
        for x, v in enumerate(row):
            if not primes[y][x]:
                out.append(Mark.BLANK)
            elif up[x]:
                out.append(Mark.SOPHIE_GERMAIN)
            elif spec.mark_safe and is_safe_prime(v):
                out.append(Mark.SAFE)
            else:
                out.append(Mark.PRIME)
        marks.append(out)
    return marks


def _ascii(spec, values, marks) -> str:
    lines = []
    if spec.mode == "carpet":
        for y in reversed(range(spec.height)):
            lines.append("".join(GLYPHS[m] for m in marks[y]))
    else:
        w = len(str(values[-1][-1]))
        for y in reversed(range(spec.height)):
            cells = (f"{v:>{w}}{GLYPHS[m]}" for v, m in zip(values[y], marks[y]))
            lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


def _pgm(spec, values, marks) -> str:
    blank = VALUE_GRAY if spec.mode == "values" else GRAYS[Mark.BLANK]
    lines = ["P2", f"{spec.width} {spec.height}", "255"]
    for y in reversed(range(spec.height)):
        lines.append(" ".join(str(GRAYS[m] if m else blank) for m in marks[y]))
    return "\n".join(lines) + "\n"


def _svg(spec, values, marks) -> str:
    if spec.mode == "values":
        cw = CELL * max(1, (len(str(values[-1][-1])) + 1) // 2)
    else:
        cw = CELL
    W, H = spec.width * cw, spec.height * CELL
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>',
    ]
    for y in reversed(range(spec.height)):
        top = (spec.height - 1 - y) * CELL
        for x, m in enumerate(marks[y]):
            left = x * cw
            if spec.mode == "carpet":
                if m:
                    out.append(f'<circle cx="{left + CELL // 2}" cy="{top + CELL // 2}" r="3" '
                               f'fill="{COLORS[m]}" data-x="{x}" data-y="{y}"/>')
            else:
                fill = COLORS.get(m, "gray")
                out.append(f'<text x="{left + cw // 2}" y="{top + 8}" font-size="8" '
                           f'text-anchor="middle" fill="{fill}" data-x="{x}" data-y="{y}">'
                           f'{values[y][x]}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


_RENDERERS = {"ascii": _ascii, "pgm": _pgm, "svg": _svg}


def render(spec: CarpetSpec) -> bytes:
    values = value_grid(spec)
    marks = mark_grid(spec)
    return _RENDERERS[spec.format](spec, values, marks).encode("ascii")
