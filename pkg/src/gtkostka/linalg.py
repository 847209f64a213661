"""Exact rank of integer matrices by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import Sequence


def integer_rank(rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    """Rank over the rationals of an integer matrix given row-major.

    Every intermediate entry stays an integer: after each pivot step the
    updated entries are divided exactly by the previous pivot.
    """
    m = [list(row) for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if any(len(row) != ncols for row in m):
        raise ValueError("ragged matrix")
    nrows = len(m)
    rank = 0
    prev_pivot = 1
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, nrows):
            a = m[i][col]
            for k in range(col + 1, ncols):
                # exact by Sylvester's identity
                m[i][k] = (pivot * m[i][k] - a * m[rank][k]) // prev_pivot
            m[i][col] = 0
        prev_pivot = pivot
        rank += 1
        if rank == nrows:
            break
    return rank
