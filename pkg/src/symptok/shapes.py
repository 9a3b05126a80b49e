"""Partitions, staircases, diagram cell sets, and the symplectic alphabet.

The alphabet for rank n is the 2n-letter ordered set

    1 < 1' < 2 < 2' < ... < n < n'      (k' denotes the barred letter)

encoded as integer letter codes 1..2n: level k unbarred is 2k-1, barred 2k.
Rows and columns of diagrams are 1-indexed; a shifted shape indents row i by
i-1 cells, so row i covers columns i .. i+lambda_i-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Set, Tuple


class RankTooSmallError(ValueError):
    """The partition has more parts than the rank allows."""


class BadLengthError(ValueError):
    """A strict partition does not have exactly the required length."""


def as_partition(parts: Sequence[int]) -> Tuple[int, ...]:
    """Validate weak decrease and trim trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def as_strict_partition(parts: Sequence[int]) -> Tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"nonpositive part in strict partition {parts}")
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not strictly decreasing: {parts}")
    return parts


def staircase(n: int) -> Tuple[int, ...]:
    return tuple(range(n, 0, -1))


def add_staircase(mu: Sequence[int], n: int) -> Tuple[int, ...]:
    """lambda = mu + (n, n-1, ..., 1); strictly decreasing of length n."""
    mu = as_partition(mu)
    if len(mu) > n:
        raise RankTooSmallError(f"partition {mu} has more than n={n} parts")
    mu = mu + (0,) * (n - len(mu))
    return tuple(mu[i] + (n - i) for i in range(n))


def remove_staircase(lam: Sequence[int], n: int) -> Tuple[int, ...]:
    """Inverse of add_staircase for strict lambda of length n."""
    lam = as_strict_partition(lam)
    if len(lam) != n:
        raise BadLengthError(f"{lam} does not have length n={n}")
    mu = tuple(lam[i] - (n - i) for i in range(n))
    return as_partition(mu)


def shifted_cells(lam: Sequence[int]) -> Set[Tuple[int, int]]:
    """Cells (row, col) of the shifted diagram; row i starts at column i."""
    lam = as_strict_partition(lam)
    return {(i, c) for i in range(1, len(lam) + 1)
            for c in range(i, i + lam[i - 1])}


def ordinary_cells(mu: Sequence[int]) -> Set[Tuple[int, int]]:
    """Cells (row, col) of the ordinary diagram; row i covers columns 1..mu_i."""
    mu = as_partition(mu)
    return {(i, c) for i in range(1, len(mu) + 1)
            for c in range(1, mu[i - 1] + 1)}


def conjugate(parts: Sequence[int]) -> Tuple[int, ...]:
    parts = as_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def partitions_up_to(max_weight: int, max_length: int) -> Iterator[Tuple[int, ...]]:
    """All partitions mu with |mu| <= max_weight and length <= max_length,
    in increasing (|mu|, mu) order."""
    def of_weight(w, max_part, length_left):
        if w == 0:
            yield ()
            return
        if length_left == 0:
            return
        for first in range(min(w, max_part), 0, -1):
            for rest in of_weight(w - first, first, length_left - 1):
                yield (first,) + rest

    for w in range(max_weight + 1):
        yield from sorted(of_weight(w, w, max_length))


# -- alphabet ---------------------------------------------------------------

def letter(level: int, barred: bool) -> int:
    return 2 * level - (0 if barred else 1)


def letter_level(code: int) -> int:
    return (code + 1) // 2


def letter_barred(code: int) -> bool:
    return code % 2 == 0


def letter_str(code: int, primed: bool = False) -> str:
    s = str(letter_level(code)) + ("-" if letter_barred(code) else "")
    return s + "'" if primed else s


@dataclass(frozen=True)
class Entry:
    """One tableau entry: a level with bar and prime marks.

    The ordering 1 < 1' < ... < n < n' depends only on (level, barred);
    primes are weight decorations and do not affect comparisons.
    """

    level: int
    barred: bool
    primed: bool = False

    @property
    def code(self) -> int:
        return letter(self.level, self.barred)

    @classmethod
    def from_code(cls, code: int, primed: bool = False) -> "Entry":
        return cls(letter_level(code), letter_barred(code), primed)

    def __str__(self) -> str:
        return letter_str(self.code, self.primed)


def all_letters(n: int) -> range:
    return range(1, 2 * n + 1)


def fillings(cells: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Every assignment of alphabet letters to `cells` positions (oracle use)."""
    return itertools.product(all_letters(n), repeat=cells)
