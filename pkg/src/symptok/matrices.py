"""U-turn alternating sign matrices, compass point matrices, and strict
symplectic Gelfand-Tsetlin patterns.

A U-turn ASM for rank n and breadth m is a 2n x m matrix over {-1, 0, 1}
whose rows are indexed by the alphabet order 1, 1', 2, 2', ..., n, n'
(row 2k-1 holds level k unbarred, row 2k barred), subject to

  UA1  nonzero entries alternate in sign along each row and each column
  UA2  the topmost nonzero entry of every column is 1
  UA3  the rightmost nonzero entry of every row is 1
  UA4  every row sum and column sum is 0 or 1
  UA4' row_k + row_k' = 1 for every level k (the U-turn pairing)
  UA5  col_j = 1 exactly when j is a part of lambda, else 0

A Gelfand-Tsetlin pattern for rank n has 2n rows indexed bottom-to-top
1, 1', 2, 2', ..., n, n'; rows k and k' hold k nonnegative integers each.
Writing m(k,j) and mb(k,j) for the unbarred/barred entries, with the
conventions mb(k, k+1) = 0 and mb(0, j) = 0:

  betweenness  mb(k,j) >= m(k,j) >= mb(k,j+1)          (k = 1..n, j = 1..k)
               m(k+1,j) >= mb(k,j) >= m(k+1,j+1)       (k = 1..n-1, j = 1..k)
  strictness   consecutive entries of every row strictly decrease
  seed rule    m(k,k) and mb(k,k) are never both 0

Each pattern position carries exactly one of three saturation marks:

  unbarred (k,j), j<k:  triple (m(k,j), mb(k-1,j), m(k,j+1))
  barred   (k,j), j<k:  triple (mb(k,j), m(k,j), mb(k,j+1))
      B strict on both sides, L equal on the left, R equal on the right
  diagonal j=k:  B/L by m(k,k) > 0 vs = 0, and mb(k,k) > m(k,k) vs equal;
      the R mark never occurs on the diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .shapes import BadLengthError, as_strict_partition


class DimensionMismatchError(ValueError):
    """Matrix dimensions do not match 2n x lambda_1."""


class GTShapeError(ValueError):
    """Pattern rows do not have the triangular lengths 1,1,2,2,...,n,n."""


CPM_CODES = ("WE", "NS", "NE", "SE", "NW", "SW")


@dataclass(frozen=True)
class UTurnASM:
    n: int
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.entries[0]) if self.entries else 0


@dataclass(frozen=True)
class CompassPointMatrix:
    n: int
    entries: Tuple[Tuple[str, ...], ...]

    @property
    def m(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row_count(self, i: int, code: str) -> int:
        """Occurrences of a compass code in row i (1-based, alphabet order)."""
        return self.entries[i - 1].count(code)


@dataclass(frozen=True)
class SympGTPattern:
    """rows[0] is the bottom row (level 1 unbarred), rows[2n-1] the top."""

    n: int
    rows: Tuple[Tuple[int, ...], ...]

    def m(self, k: int, j: int) -> int:
        """Unbarred entry m(k,j); j = k+1 reads as 0."""
        if j == k + 1:
            return 0
        return self.rows[2 * k - 2][j - 1]

    def mb(self, k: int, j: int) -> int:
        """Barred entry mb(k,j); k = 0 or j = k+1 read as 0."""
        if k == 0 or j == k + 1:
            return 0
        return self.rows[2 * k - 1][j - 1]

    @property
    def top_row(self) -> Tuple[int, ...]:
        return self.rows[-1]


@dataclass(frozen=True)
class BLRClassification:
    """Mark per position: unbarred[(k,j)] and barred[(k,j)] in {"B","L","R"}."""

    unbarred: Dict[Tuple[int, int], str]
    barred: Dict[Tuple[int, int], str]

    def chi(self, mark: str, k: int, j: int, barred: bool) -> int:
        table = self.barred if barred else self.unbarred
        return 1 if table[(k, j)] == mark else 0


# -- UASM validation ----------------------------------------------------------


def _alternating(seq) -> bool:
    nz = [v for v in seq if v]
    return all(nz[i] != nz[i + 1] for i in range(len(nz) - 1))


def validate_uasm(a: UTurnASM, lam) -> Tuple[bool, List[str]]:
    """Check UA1-UA5 against the column profile fixed by lambda."""
    lam = as_strict_partition(lam)
    n, m = a.n, lam[0]
    if len(lam) != n:
        raise DimensionMismatchError(f"lambda {lam} does not have n={n} parts")
    if len(a.entries) != 2 * n or any(len(r) != m for r in a.entries):
        raise DimensionMismatchError(
            f"expected {2 * n} x {m}, got {[len(r) for r in a.entries]}"
        )
    bad: List[str] = []
    if any(v not in (-1, 0, 1) for row in a.entries for v in row):
        bad.append("entries: values outside {-1,0,1}")
        return (False, bad)
    cols = list(zip(*a.entries))
    for i, row in enumerate(a.entries, start=1):
        if not _alternating(row):
            bad.append(f"UA1: signs do not alternate in row {i}")
        nz = [v for v in row if v]
        if nz and nz[-1] != 1:
            bad.append(f"UA3: rightmost nonzero of row {i} is not 1")
        if sum(row) not in (0, 1):
            bad.append(f"UA4: row {i} sums to {sum(row)}")
    for j, col in enumerate(cols, start=1):
        if not _alternating(col):
            bad.append(f"UA1: signs do not alternate in column {j}")
        nz = [v for v in col if v]
        if nz and nz[0] != 1:
            bad.append(f"UA2: topmost nonzero of column {j} is not 1")
        if sum(col) not in (0, 1):
            bad.append(f"UA4: column {j} sums to {sum(col)}")
        want = 1 if j in lam else 0
        if sum(col) in (0, 1) and sum(col) != want:
            bad.append(f"UA5: column {j} sums to {sum(col)}, profile wants {want}")
    for k in range(1, n + 1):
        pair = sum(a.entries[2 * k - 2]) + sum(a.entries[2 * k - 1])
        if pair != 1:
            bad.append(f"UA4': rows {k} and {k}' sum to {pair}, not 1")
    return (not bad, bad)


def row_cumsum(a: UTurnASM) -> Tuple[Tuple[int, ...], ...]:
    """Right-to-left cumulative row sums; entries land in {0,1}."""
    out = []
    for row in a.entries:
        acc, line = 0, []
        for v in reversed(row):
            acc += v
            line.append(acc)
        line.reverse()
        out.append(tuple(line))
    _check_zero_one(out, "row")
    return tuple(out)


def col_cumsum(a: UTurnASM) -> Tuple[Tuple[int, ...], ...]:
    """Top-to-bottom cumulative column sums; entries land in {0,1}."""
    acc = [0] * a.m
    out = []
    for row in a.entries:
        acc = [s + v for s, v in zip(acc, row)]
        out.append(tuple(acc))
    _check_zero_one(out, "column")
    return tuple(out)


def _check_zero_one(rows, which: str) -> None:
    if any(v not in (0, 1) for row in rows for v in row):
        raise ValueError(f"{which} cumulative sums leave {{0,1}}: invalid matrix")


# -- GT pattern validation and enumeration -------------------------------------


def _check_gtp_shape(g: SympGTPattern) -> None:
    if len(g.rows) != 2 * g.n:
        raise GTShapeError(f"expected {2 * g.n} rows, got {len(g.rows)}")
    for k in range(1, g.n + 1):
        if len(g.rows[2 * k - 2]) != k or len(g.rows[2 * k - 1]) != k:
            raise GTShapeError(f"rows for level {k} do not have length {k}")


def validate_gtp(g: SympGTPattern) -> Tuple[bool, List[str]]:
    """Check betweenness, strictness, nonnegativity, and the seed rule."""
    _check_gtp_shape(g)
    bad: List[str] = []
    if any(v < 0 for row in g.rows for v in row):
        bad.append("entries: negative value")
    for k in range(1, g.n + 1):
        for j in range(1, k + 1):
            if not g.mb(k, j) >= g.m(k, j) >= g.mb(k, j + 1):
                bad.append(f"betweenness: row {k} fails at ({k},{j})")
        if k < g.n:
            for j in range(1, k + 1):
                if not g.m(k + 1, j) >= g.mb(k, j) >= g.m(k + 1, j + 1):
                    bad.append(f"betweenness: row {k}' fails at ({k},{j})")
        for j in range(1, k):
            if not g.m(k, j) > g.m(k, j + 1):
                bad.append(f"strictness: row {k} stalls at j={j}")
            if not g.mb(k, j) > g.mb(k, j + 1):
                bad.append(f"strictness: row {k}' stalls at j={j}")
        if g.m(k, k) == 0 and g.mb(k, k) == 0:
            bad.append(f"seed: m({k},{k}) and mb({k},{k}) are both 0")
    return (not bad, bad)


def _interlace(above: Tuple[int, ...], length: int) -> Iterator[Tuple[int, ...]]:
    """Strictly decreasing nonnegative rows r of the given length with
    above[j] >= r[j] >= above[j+1] (a missing above[j+1] reads as 0)."""
    padded = above + (0,) * (length + 1 - len(above))
    ranges = [range(padded[j + 1], padded[j] + 1) for j in range(length)]
    for r in itertools.product(*ranges):
        if all(r[j] > r[j + 1] for j in range(length - 1)):
            yield r


def enumerate_gtp(lam, n: int) -> Iterator[SympGTPattern]:
    """All strict patterns with top row lambda, generated top row downward."""
    lam = as_strict_partition(lam)
    if len(lam) != n:
        raise BadLengthError(f"{lam} does not have length n={n}")

    def descend(k: int, barred_row: Tuple[int, ...], stack: List[Tuple[int, ...]]):
        # stack holds rows from the top down; barred_row is row k'
        for unbarred in _interlace(barred_row, k):
            if unbarred[-1] == 0 and barred_row[-1] == 0:
                continue  # seed rule at (k,k)
            stack.append(unbarred)
            if k == 1:
                yield SympGTPattern(n, tuple(reversed(stack)))
            else:
                for nxt in _interlace(unbarred, k - 1):
                    stack.append(nxt)
                    yield from descend(k - 1, nxt, stack)
                    stack.pop()
            stack.pop()

    yield from descend(n, lam, [lam])


def count_gtp(lam, n: int) -> int:
    """|GT^lambda(n)| by transfer over rows, without materialising patterns."""
    lam = as_strict_partition(lam)
    if len(lam) != n:
        raise BadLengthError(f"{lam} does not have length n={n}")
    current: Dict[Tuple[int, ...], int] = {lam: 1}
    for k in range(n, 0, -1):
        nxt: Dict[Tuple[int, ...], int] = {}
        for row, cnt in current.items():
            for r in _interlace(row, k):
                if r[-1] == 0 and row[-1] == 0:
                    continue
                nxt[r] = nxt.get(r, 0) + cnt
        current = nxt
        if k > 1:
            nxt = {}
            for row, cnt in current.items():
                for r in _interlace(row, k - 1):
                    nxt[r] = nxt.get(r, 0) + cnt
            current = nxt
    return sum(current.values())


def classify_blr(g: SympGTPattern) -> BLRClassification:
    """Assign the B/L/R mark of every pattern position."""
    unbarred: Dict[Tuple[int, int], str] = {}
    barred: Dict[Tuple[int, int], str] = {}
    for k in range(1, g.n + 1):
        for j in range(1, k):
            unbarred[(k, j)] = _mark(g.m(k, j), g.mb(k - 1, j), g.m(k, j + 1))
            barred[(k, j)] = _mark(g.mb(k, j), g.m(k, j), g.mb(k, j + 1))
        unbarred[(k, k)] = "B" if g.m(k, k) > 0 else "L"
        if g.mb(k, k) < g.m(k, k):
            raise ValueError(f"invalid pattern: mb({k},{k}) < m({k},{k})")
        barred[(k, k)] = "B" if g.mb(k, k) > g.m(k, k) else "L"
    return BLRClassification(unbarred, barred)


def _mark(hi: int, mid: int, lo: int) -> str:
    if hi > mid > lo:
        return "B"
    if hi == mid > lo:
        return "L"
    if hi > mid == lo:
        return "R"
    raise ValueError(f"triple ({hi},{mid},{lo}) is not interlaced strictly")


# -- UASM enumeration -----------------------------------------------------------


def enumerate_uasm(lam, n: int) -> Iterator[UTurnASM]:
    """All U-turn ASMs with column profile lambda.

    Generated through the shifted-tableau correspondence and re-validated
    against UA1-UA5 independently, so a bug in either side cannot pass
    silently.  Tiny shapes are cross-checked against brute force in tests.
    """
    from .bijections import st_to_uasm
    from .tableaux import enumerate_st

    lam = as_strict_partition(lam)
    for st in enumerate_st(lam, n):
        a = st_to_uasm(st)
        ok, bad = validate_uasm(a, lam)
        if not ok:
            raise AssertionError(f"correspondence produced an invalid matrix: {bad}")
        yield a


def brute_force_uasm(lam, n: int, cell_cap: int = 16) -> List[UTurnASM]:
    """Filter all {-1,0,1} matrices; exponential, for cross-checks only."""
    lam = as_strict_partition(lam)
    m = lam[0]
    if 2 * n * m > cell_cap:
        raise ValueError(f"{2 * n}x{m} grid too large for brute force")
    out = []
    for flat in itertools.product((-1, 0, 1), repeat=2 * n * m):
        entries = tuple(flat[r * m:(r + 1) * m] for r in range(2 * n))
        a = UTurnASM(n, entries)
        if validate_uasm(a, lam)[0]:
            out.append(a)
    return out
