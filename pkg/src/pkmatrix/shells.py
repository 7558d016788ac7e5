"""Shell numbers and shell sets.

The shell number of ``(x, y)`` is the bit length of ``pair(x, y) + 1``, so
shell ``n`` holds exactly the values ``M_{n-1} .. 2*M_{n-1}``.  A shell set
lists them row by row from the top (``y = n - 1``, the Mersenne number)
down to the even numbers on row 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import Coord, check_capacity, mersenne, pair
from .primes import is_prime


@dataclass(frozen=True)
class ShellSet:
    n: int
    values: tuple

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def shell_number(c: Coord) -> int:
    x, y = c
    if x < 0 or y < 0:
        raise ValueError("coordinates must be natural numbers")
    # ceil(log2(x + 1)) == x.bit_length()
    return y + 1 + x.bit_length()


def shell_of_value(z: int) -> int:
    if z < 0:
        raise ValueError("z must be >= 0")
    return (z + 1).bit_length()


def iter_shell(n: int) -> Iterator[int]:
    """Stream the members of shell ``n`` in shell-set order."""
    if n < 1:
        raise ValueError("shell number must be >= 1")
    check_capacity(n)
    yield mersenne(n - 1)
    for y in range(n - 2, -1, -1):
        w = n - 1 - y  # bit length shared by every column index in this row
        step = 1 << (y + 1)
        z = pair(1 << (w - 1), y)
        for _ in range(1 << (w - 1)):
            yield z
            z += step


def shell_set(n: int) -> ShellSet:
    return ShellSet(n, tuple(iter_shell(n)))


def shell_set_walk(n: int) -> ShellSet:
    """Shell set via the halving walk: odd members first, then the evens.

    Only valid for ``n >= 2``; for ``n = 1`` the walk never reaches its
    stopping difference.
    """
    if n < 2:
        raise ValueError("the halving walk needs shell number >= 2")
    mers = 2 ** (n - 1) - 1
    out = [mers]
    diff = 2 * (mers + 1)
    term = mers
    while True:
        if term + diff < 2 * mers:
            term += diff
        else:
            diff //= 2
            term = (term - 1) // 2 + diff
            if diff == 2:
                break
        out.append(term)
    out.extend(range(term, 2 * mers + 1, 2))
    return ShellSet(n, tuple(out))


def first_prime_in_shell(n: int) -> int:
    """Smallest prime in ``[M_{n-1}, 2*M_{n-1}]``."""
    if n < 2:
        raise ValueError("shell 1 = {0} holds no prime; need n >= 2")
    lo = mersenne(n - 1)
    hi = 2 * lo
    for z in range(lo, hi + 1):
        if is_prime(z):
            return z
    raise AssertionError(f"no prime in shell {n}; Bertrand's postulate says otherwise")


def format_shell(s: ShellSet, appendix_style: bool = False) -> str:
    """Comma-separated listing.

    ``appendix_style`` prints the odd members on one line and summarises
    the even tail as ``Next come even numbers: a, a+2, a+4, ..., b.``
    """
    if not appendix_style:
        return ", ".join(map(str, s.values))
    half = len(s.values) // 2
    odd, even = s.values[:half] or s.values, s.values[half:]
    lines = [", ".join(map(str, odd)) + "."]
    if s.n >= 2:
        e0, top = even[0], even[-1]
        if len(even) > 3:
            tail = f"{e0}, {e0 + 2}, {e0 + 4}, ..., {top}"
        else:
            tail = ", ".join(map(str, even))
        lines.append(f"Next come even numbers: {tail}.")
    return "\n".join(lines)
