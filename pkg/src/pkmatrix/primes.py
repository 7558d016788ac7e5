"""Primality, Sophie Germain / safe primes and the mod-3 column classes.

A column ``x`` starts at ``2x`` and follows ``a -> 2a + 1``.  When
``2x = 2 (mod 3)`` every entry stays at 2 mod 3; otherwise the residues
alternate between 0 and 1, so every other entry is divisible by 3 and no
two vertically adjacent entries can both be prime.  Sophie Germain primes
(``p`` and ``2p + 1`` both prime) are vertically adjacent pairs, hence live
only in columns ``x = 1 (mod 3)``, apart from ``p = 3`` in column 0.
"""

from __future__ import annotations

import contextlib
import enum
import random
from concurrent.futures import ProcessPoolExecutor
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .core import Coord, pair, unpair

DEFAULT_PRP_ROUNDS = 64
DEFAULT_SEED = 0x5EED

DETERMINISTIC_LIMIT = 1 << 64

_prp_rounds: ContextVar[int] = ContextVar("pkmatrix_prp_rounds", default=DEFAULT_PRP_ROUNDS)
_seed: ContextVar[int] = ContextVar("pkmatrix_seed", default=DEFAULT_SEED)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)

# (exclusive bound, bases) pairs; each base set is proven for n below its bound
_MR_BASES = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


@contextlib.contextmanager
def primality_settings(rounds: Optional[int] = None, seed: Optional[int] = None):
    """Override probable-prime rounds and the base-selection seed."""
    tokens = []
    if rounds is not None:
        if rounds < 1:
            raise ValueError("rounds must be positive")
        tokens.append((_prp_rounds, _prp_rounds.set(rounds)))
    if seed is not None:
        tokens.append((_seed, _seed.set(seed)))
    try:
        yield
    finally:
        for var, token in reversed(tokens):
            var.reset(token)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def primality(z: int) -> str:
    """Classify ``z`` as ``"composite"``, ``"prime"`` or ``"probable-prime"``.

    Below 2**64 the answer is exact.  Above it, the 12 smallest prime bases
    are followed by the configured number of seeded random bases.
    """
    if z < 2:
        return "composite"
    for p in _SMALL_PRIMES:
        if z == p:
            return "prime"
        if z % p == 0:
            return "composite"
    if z < _SMALL_PRIMES[-1] ** 2:
        return "prime"
    d, s = z - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for bound, bases in _MR_BASES:
        if z < bound:
            break
    for a in bases:
        if not _strong_probable_prime(z, a, d, s):
            return "composite"
    if z < DETERMINISTIC_LIMIT:
        return "prime"
    rng = random.Random(f"{_seed.get()}:{z}")
    for _ in range(_prp_rounds.get()):
        if not _strong_probable_prime(z, rng.randrange(2, z - 1), d, s):
            return "composite"
    return "probable-prime"


def is_prime(z: int) -> bool:
    return primality(z) != "composite"


def is_sophie_germain(p: int) -> bool:
    return is_prime(p) and is_prime(2 * p + 1)


def is_safe_prime(q: int) -> bool:
    return q >= 5 and q & 1 == 1 and is_prime(q) and is_prime((q - 1) // 2)


class ColumnKind(enum.Enum):
    ALLOWED = "allowed"
    FORBIDDEN = "forbidden"


@dataclass(frozen=True)
class ColumnClass:
    x: int
    kind: ColumnKind
    residues: Tuple[int, ...]  # repeating cycle of entry residues mod 3, from y = 0

    @property
    def allowed(self) -> bool:
        return self.kind is ColumnKind.ALLOWED

    @property
    def residue_pattern(self) -> str:
        if self.allowed:
            return "all entries = 2 (mod 3)"
        a, b = self.residues
        return f"entries alternate {a}, {b} (mod 3)"


def column_class(x: int) -> ColumnClass:
    if x < 0:
        raise ValueError("x must be >= 0")
    r = (2 * x) % 3
    if r == 2:
        return ColumnClass(x, ColumnKind.ALLOWED, (2,))
    return ColumnClass(x, ColumnKind.FORBIDDEN, (r, (2 * r + 1) % 3))


@dataclass(frozen=True)
class SGHit:
    p: int
    q: int
    coord: Coord

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "x": self.coord.x, "y": self.coord.y}


def _hit(p: int) -> SGHit:
    return SGHit(p, 2 * p + 1, unpair(p))


def scan_sg_column(x: int, max_y: int) -> List[SGHit]:
    hits = []
    for y in range(max_y):
        p = pair(x, y)
        if is_sophie_germain(p):
            hits.append(SGHit(p, 2 * p + 1, Coord(x, y)))
    return hits


def _scan_columns(limit: int, xs: range) -> List[int]:
    found = []
    for x in xs:
        p = 2 * x
        while p <= limit:
            if is_sophie_germain(p):
                found.append(p)
            p = 2 * p + 1
    return found


def scan_sg_region(limit: int, workers: int = 1) -> List[SGHit]:
    """All Sophie Germain primes ``<= limit``, scanning only allowed columns.

    The lone exception outside the allowed columns, ``p = 3`` in column 0,
    is added explicitly.  Output is sorted and independent of ``workers``.
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    pair(limit // 2, 0)
    # allowed columns: x = 1, 4, 7, ... with 2x <= limit
    ncols = (limit // 2 + 2) // 3
    found = [3] if limit >= 3 else []
    if workers <= 1 or ncols < 4 * workers:
        found += _scan_columns(limit, range(1, 3 * ncols, 3))
    else:
        step = 3 * workers
        chunks = [range(1 + 3 * w, 3 * ncols, step) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_columns, [limit] * workers, chunks):
                found += part
    return [_hit(p) for p in sorted(found)]


def iter_sophie_germain(limit: int) -> Iterator[int]:
    """Brute-force stream of Sophie Germain primes ``<= limit``."""
    return (z for z in range(limit + 1) if is_sophie_germain(z))
