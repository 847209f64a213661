"""Partitions, compositions, dominance order and primitive-pair splitting.

Weight vectors are plain tuples.  Their length ``r`` is part of the data:
``(4, 2, 2)`` and ``(4, 2, 2, 0, 0, 0)`` are different weights, because the
degree formula depends on ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterator, Sequence

Weight = tuple


class DomainError(ValueError):
    """A well-formed request whose mathematical precondition fails."""


class NotDominatedError(DomainError):
    def __init__(self, lam, beta):
        super().__init__(f"beta is not dominated by lambda: beta={format_weight(beta)}, "
                         f"lambda={format_weight(lam)}")
        self.lam = tuple(lam)
        self.beta = tuple(beta)


def size(v: Sequence) -> int:
    return sum(v, 0)


def is_partition(v: Sequence) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


def as_partition(v: Sequence) -> Weight:
    """Return ``v`` as a tuple, raising ``ValueError`` unless weakly decreasing."""
    v = tuple(v)
    if not is_partition(v):
        raise ValueError(f"not a partition (must be weakly decreasing): {format_weight(v)}")
    return v


def as_composition(v: Sequence) -> Weight:
    v = tuple(v)
    if any(p < 0 for p in v):
        raise ValueError(f"negative part in composition: {format_weight(v)}")
    return v


def sort_to_partition(beta: Sequence) -> Weight:
    return tuple(sorted(beta, reverse=True))


def multiplicities(lam: Sequence) -> list[tuple]:
    """Run-length encode a partition as ``[(kappa_1, v_1), ..., (kappa_m, v_m)]``.

    Works for any weakly decreasing sequence of comparable numbers, so it
    serves rational highest weights as well as integer partitions.
    """
    lam = as_partition(lam)
    runs: list[list] = []
    for part in lam:
        if runs and runs[-1][0] == part:
            runs[-1][1] += 1
        else:
            runs.append([part, 1])
    return [(k, v) for k, v in runs]


def _check_lengths(lam: Sequence, beta: Sequence) -> None:
    if len(lam) != len(beta):
        raise ValueError(f"length mismatch: lambda has {len(lam)} parts, beta has {len(beta)}")


def _prefix_gaps(lam: Sequence, beta: Sequence) -> list:
    # partial_sum(lam, i) - partial_sum(prt(beta), i) for 1 <= i < r
    lam_sums = list(accumulate(lam))
    beta_sums = list(accumulate(sort_to_partition(beta)))
    return [a - b for a, b in zip(lam_sums[:-1], beta_sums[:-1])]


def dominates(lam: Sequence, beta: Sequence) -> bool:
    """True iff ``beta`` is dominated by the partition ``lam``."""
    _check_lengths(lam, beta)
    lam = as_partition(lam)
    if size(lam) != size(beta):
        return False
    return all(g >= 0 for g in _prefix_gaps(lam, beta))


def is_primitive_pair(lam: Sequence, beta: Sequence) -> bool:
    """Dominance with every proper partial-sum inequality strict."""
    if not dominates(lam, beta):
        return False
    return all(g > 0 for g in _prefix_gaps(lam, beta))


@dataclass(frozen=True)
class PrimitiveDecomposition:
    """Unique splitting of a dominated pair into primitive pieces.

    ``split_indices`` are the 1-based start positions ``1 = i_1 < ... <
    i_{s+1} = r + 1``.  ``sorted_beta`` records whether ``beta`` had to be
    rearranged into ``prt(beta)`` before splitting.
    """

    lam: Weight
    beta: Weight
    split_indices: tuple[int, ...]
    sorted_beta: bool

    @property
    def pairs(self) -> list[tuple[Weight, Weight]]:
        bounds = self.split_indices
        return [(self.lam[a - 1:b - 1], self.beta[a - 1:b - 1])
                for a, b in zip(bounds, bounds[1:])]

    def __len__(self) -> int:
        return len(self.split_indices) - 1

    def __iter__(self):
        return iter(self.pairs)


def primitive_decomposition(lam: Sequence, beta: Sequence) -> PrimitiveDecomposition:
    _check_lengths(lam, beta)
    lam = as_partition(lam)
    if not dominates(lam, beta):
        raise NotDominatedError(lam, beta)
    sorted_beta = sort_to_partition(beta)
    gaps = _prefix_gaps(lam, sorted_beta)
    # gaps[i - 2] compares the sums up to i - 1; a zero gap starts a new piece at i
    splits = [1] + [i for i in range(2, len(lam) + 1) if gaps[i - 2] == 0] + [len(lam) + 1]
    if not lam:
        splits = [1]
    return PrimitiveDecomposition(lam, sorted_beta, tuple(splits),
                                  sorted_beta != tuple(beta))


def partitions_of(n: int, r: int, max_part: int | None = None) -> Iterator[Weight]:
    """Partitions of ``n`` with exactly ``r`` parts, zeros allowed, in reverse lex order."""
    if max_part is None:
        max_part = n
    if r == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, max_part), -1, -1):
        if first * r < n:
            break
        for rest in partitions_of(n - first, r - 1, first):
            yield (first,) + rest


def compositions_of(n: int, r: int) -> Iterator[Weight]:
    """All length-``r`` vectors of nonnegative integers summing to ``n``."""
    if r == 0:
        if n == 0:
            yield ()
        return
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions_of(n - first, r - 1):
            yield (first,) + rest


def parse_number(token: str):
    token = token.strip()
    value = Fraction(token)
    return int(value) if value.denominator == 1 else value


def parse_weight(text: str) -> Weight:
    """Parse ``"4,2,2,0,0,0"``.  Entries may be rationals such as ``5/2``."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(parse_number(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed weight vector {text!r}: {exc}") from None


def format_weight(v: Sequence) -> str:
    return ",".join(str(p) for p in v)
