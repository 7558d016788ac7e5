"""Initial segments of the rows and their pairing with shell sets.

The initial segment of row ``y`` is the first ``M_y + 1 = 2**y`` terms of
the row progression, from ``M_y`` up to ``M_y * (2*M_y + 3)``.  Shell
``y + 1`` has the same size, which lines the two families up one-to-one.
"""

from __future__ import annotations

from dataclasses import dataclass
import itertools
from itertools import islice
from typing import Iterator, List, Optional

from .core import CapacityError, check_capacity, mersenne
from .primes import is_prime
from .shells import iter_shell

MATERIALIZE_LIMIT = 30


@dataclass(frozen=True)
class Segment:
    y: int
    terms: tuple

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class BijectionRow:
    index: int
    shell_value: int
    segment_value: int


def iter_segment(y: int) -> Iterator[int]:
    m = mersenne(y)
    check_capacity(2 * y + 2)
    step = 1 << (y + 1)
    return (m + k * step for k in range(m + 1))


def segment(y: int) -> Segment:
    if y > MATERIALIZE_LIMIT:
        raise CapacityError(y, MATERIALIZE_LIMIT,
                            f"row {y} has 2^{y} terms; materializing stops at row {MATERIALIZE_LIMIT}, "
                            "use the iterator instead")
    return Segment(y, tuple(iter_segment(y)))


def is_dyck_number(z: int) -> bool:
    """True when every binary suffix of ``z`` has at least as many 1s as 0s."""
    if z < 0:
        raise ValueError("z must be >= 0")
    balance = 0
    while z:
        balance += 1 if z & 1 else -1
        if balance < 0:
            return False
        z >>= 1
    return True


def _shell_stream() -> Iterator[int]:
    for n in itertools.count(1):
        yield from iter_shell(n)


def _segment_stream() -> Iterator[int]:
    for y in itertools.count(0):
        yield from iter_segment(y)


def iter_bijection() -> Iterator[BijectionRow]:
    for i, (s, t) in enumerate(zip(_shell_stream(), _segment_stream())):
        yield BijectionRow(i, s, t)


def bijection_table(count: int) -> List[BijectionRow]:
    if count < 0:
        raise ValueError("count must be >= 0")
    return list(islice(iter_bijection(), count))


def format_bijection(rows: List[BijectionRow]) -> str:
    """Two tab-separated lines: shell values above, segment values below."""
    top = "\t".join(str(r.shell_value) for r in rows)
    bottom = "\t".join(str(r.segment_value) for r in rows)
    return f"{top}\n{bottom}"


def iter_conjecture6_window(y: int) -> Iterator[int]:
    if y < 2:
        raise ValueError("the conjecture concerns rows y >= 2")
    return islice(iter_segment(y), mersenne(y))


def conjecture6_window(y: int) -> List[int]:
    if y > MATERIALIZE_LIMIT:
        raise CapacityError(y, MATERIALIZE_LIMIT,
                            f"row {y} has 2^{y} terms; materializing stops at row {MATERIALIZE_LIMIT}, "
                            "use the iterator instead")
    return list(iter_conjecture6_window(y))


@dataclass(frozen=True)
class Conjecture6Report:
    y: int
    witness: Optional[int]
    terms_scanned: int

    @property
    def holds(self) -> bool:
        return self.witness is not None


def check_conjecture6(y: int) -> Conjecture6Report:
    """Scan the first ``M_y`` terms of row ``y`` for a prime.

    A report without a witness is a counterexample.
    """
    scanned = 0
    for z in iter_conjecture6_window(y):
        scanned += 1
        if is_prime(z):
            return Conjecture6Report(y, z, scanned)
    return Conjecture6Report(y, None, scanned)
