"""Gelfand-Tsetlin patterns and Kostka numbers as lattice-point counts.

A pattern of rank ``r`` is stored as its rows, bottom row first: ``rows[j-1]``
is row ``j`` and holds ``(x_{1j}, ..., x_{jj})``.  The top row is the highest
weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterator, Sequence

from .weights import Weight, as_composition, as_partition, compositions_of, parse_number, size


@dataclass(frozen=True)
class GTPattern:
    rows: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        for j, row in enumerate(rows, start=1):
            if len(row) != j:
                raise ValueError(f"row {j} of a GT-pattern must have {j} entries, got {len(row)}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GTPattern":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def constant(cls, lam: Sequence) -> "GTPattern":
        """The pattern with ``x_{ij} = lam_i``."""
        return cls(tuple(tuple(lam[:j]) for j in range(1, len(lam) + 1)))

    @property
    def r(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]):
        i, j = index
        if not 1 <= i <= j <= self.r:
            raise IndexError(f"({i},{j}) is outside the index triangle of rank {self.r}")
        return self.rows[j - 1][i - 1]

    def indices(self) -> Iterator[tuple[int, int]]:
        """Index set in reading order: bottom to top, left to right."""
        for j in range(1, self.r + 1):
            for i in range(1, j + 1):
                yield (i, j)

    def entries(self) -> dict[tuple[int, int], object]:
        return {(i, j): self[i, j] for i, j in self.indices()}

    def __add__(self, other: "GTPattern") -> "GTPattern":
        if self.r != other.r:
            raise ValueError("cannot add patterns of different rank")
        return GTPattern(tuple(tuple(a + b for a, b in zip(p, q))
                               for p, q in zip(self.rows, other.rows)))

    def scale(self, c) -> "GTPattern":
        return GTPattern(tuple(tuple(c * a for a in row) for row in self.rows))

    def to_text(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self.rows) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GTPattern":
        rows = [line.split() for line in text.splitlines()]
        rows = [row for row in rows if row and not row[0].startswith("#")]
        return cls(tuple(tuple(parse_number(t) for t in row) for row in rows))


def hwt(x: GTPattern) -> Weight:
    return x.rows[-1] if x.r else ()


def wt(x: GTPattern) -> Weight:
    sums = [sum(row, 0) for row in x.rows]
    return tuple(s - prev for s, prev in zip(sums, [0] + sums[:-1]))


def is_gt_pattern(x: GTPattern) -> bool:
    for j in range(1, x.r):
        below, above = x.rows[j - 1], x.rows[j]
        for i in range(j):
            if not above[i] >= below[i] >= above[i + 1]:
                return False
    return True


def interlacing_rows(upper: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    """Integer rows that interlace ``upper`` from below and sum to ``total``.

    Entry ``k`` ranges over ``[upper[k+1], upper[k]]``.  Rows are produced in
    lexicographic order.
    """
    n = len(upper) - 1
    lo = [upper[k + 1] for k in range(n)]
    hi = [upper[k] for k in range(n)]
    if any(a > b for a, b in zip(lo, hi)):
        return
    # remaining lo/hi sums from position k onward, for pruning
    lo_tail = list(accumulate(reversed(lo), initial=0))[::-1]
    hi_tail = list(accumulate(reversed(hi), initial=0))[::-1]
    if not lo_tail[0] <= total <= hi_tail[0]:
        return
    row = [0] * n

    def fill(k: int, remaining: int):
        if k == n:
            yield tuple(row)
            return
        start = max(lo[k], remaining - hi_tail[k + 1])
        stop = min(hi[k], remaining - lo_tail[k + 1])
        for value in range(start, stop + 1):
            row[k] = value
            yield from fill(k + 1, remaining - value)

    yield from fill(0, total)


def _check_integral(lam: Sequence, beta: Sequence) -> tuple[Weight, Weight]:
    if len(lam) != len(beta):
        raise ValueError(f"length mismatch: lambda has {len(lam)} parts, beta has {len(beta)}")
    for v in (*lam, *beta):
        if isinstance(v, bool) or int(v) != v:
            raise ValueError("Kostka counting requires integer weights")
    lam = as_partition(as_composition(int(v) for v in lam))
    beta = as_composition(int(v) for v in beta)
    return lam, beta


def count_lattice_points(lam: Sequence[int], beta: Sequence[int]) -> int:
    """Number of integer GT-patterns with highest weight ``lam`` and weight ``beta``.

    The weight fixes every row sum (row ``j`` sums to ``beta_1 + ... +
    beta_j``), so rows are enumerated top-down under that constraint and the
    number of completions below each row is memoized on the row itself.
    """
    lam, beta = _check_integral(lam, beta)
    if size(lam) != size(beta):
        return 0
    if not lam:
        return 1
    row_sums = list(accumulate(beta))

    @lru_cache(maxsize=None)
    def completions(row: tuple[int, ...]) -> int:
        j = len(row)
        if j == 1:
            return 1
        return sum(completions(lower) for lower in interlacing_rows(row, row_sums[j - 2]))

    return completions(lam)


def lattice_points(lam: Sequence[int], beta: Sequence[int]) -> Iterator[GTPattern]:
    """Enumerate the integer points of the GT-polytope, lexicographically by row."""
    lam, beta = _check_integral(lam, beta)
    if size(lam) != size(beta):
        return
    if not lam:
        yield GTPattern(())
        return
    row_sums = list(accumulate(beta))

    def descend(rows: list[tuple[int, ...]]):
        top = rows[-1]
        if len(top) == 1:
            yield GTPattern(tuple(reversed(rows)))
            return
        for lower in interlacing_rows(top, row_sums[len(top) - 2]):
            yield from descend(rows + [lower])

    yield from descend([lam])


def kostka_ssyt(lam: Sequence[int], beta: Sequence[int]) -> int:
    """Count semistandard Young tableaux of shape ``lam`` and content ``beta``.

    Plain backtracking over cells in row-major order; kept deliberately
    independent of the lattice-point counter so it can serve as its oracle.
    """
    lam, beta = _check_integral(lam, beta)
    if size(lam) != size(beta):
        return 0
    shape = [p for p in lam if p > 0]
    cells = [(row, col) for row, length in enumerate(shape) for col in range(length)]
    grid = [[0] * length for length in shape]
    left = list(beta)
    r = len(beta)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        row, col = cells[k]
        low = 1
        if col > 0:
            low = max(low, grid[row][col - 1])
        if row > 0:
            low = max(low, grid[row - 1][col] + 1)
        total = 0
        for value in range(low, r + 1):
            if left[value - 1] == 0:
                continue
            left[value - 1] -= 1
            grid[row][col] = value
            total += place(k + 1)
            left[value - 1] += 1
        grid[row][col] = 0
        return total

    return place(0)


def schur_monomials(lam: Sequence[int]) -> dict[Weight, int]:
    """Monomial coefficients of the Schur polynomial in ``len(lam)`` variables.

    Maps each exponent vector ``beta`` to ``K_{lam, beta}``; zero coefficients
    are omitted.
    """
    lam = as_partition(lam)
    out = {}
    for beta in compositions_of(size(lam), len(lam)):
        k = count_lattice_points(lam, beta)
        if k:
            out[beta] = k
    return out

