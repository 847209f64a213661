"""Tilings of GT-patterns, tiling matrices and the dimension formulas.

Indices are the pairs ``(i, j)`` with ``1 <= i <= j <= r``; row ``j = r`` is the
top row.  Two entries are adjacent when one sits directly up-left
``(i, j+1)`` or up-right ``(i+1, j+1)`` of the other.  Tiles and free tiles
are numbered in the order first met when reading the pattern bottom to top,
each row left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .gt import GTPattern, is_gt_pattern
from .linalg import integer_rank
from .weights import (
    DomainError,
    NotDominatedError,
    as_partition,
    dominates,
    multiplicities,
    primitive_decomposition,
)

Index = tuple[int, int]


def reading_order(r: int) -> list[Index]:
    return [(i, j) for j in range(1, r + 1) for i in range(1, j + 1)]


def _reading_key(index: Index) -> tuple[int, int]:
    i, j = index
    return (j, i)


class UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def groups(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def is_free_index(index: Index, r: int) -> bool:
    i, j = index
    return index != (1, 1) and j != r


@dataclass(frozen=True)
class Tiling:
    """A partition of the index triangle into tiles.

    ``tiles`` is canonical: each tile's indices are in reading order and the
    tiles are sorted by their first index, so two tilings are equal exactly
    when they group the same indices together.
    """

    r: int
    tiles: tuple[tuple[Index, ...], ...]

    @classmethod
    def from_groups(cls, r: int, groups: Iterable[Iterable[Index]]) -> "Tiling":
        tiles = [tuple(sorted(map(tuple, g), key=_reading_key)) for g in groups]
        tiles = [t for t in tiles if t]
        tiles.sort(key=lambda t: _reading_key(t[0]))
        tiling = cls(r, tuple(tiles))
        tiling.validate()
        return tiling

    @property
    def free(self) -> tuple[bool, ...]:
        return tuple(all(is_free_index(ix, self.r) for ix in tile) for tile in self.tiles)

    @property
    def free_tiles(self) -> list[tuple[Index, ...]]:
        return [t for t, f in zip(self.tiles, self.free) if f]

    def tile_of(self) -> dict[Index, int]:
        return {ix: k for k, tile in enumerate(self.tiles) for ix in tile}

    def validate(self) -> None:
        seen: list[Index] = [ix for tile in self.tiles for ix in tile]
        if sorted(seen, key=_reading_key) != reading_order(self.r):
            raise ValueError("tiles must be disjoint and cover the index triangle")
        for tile in self.tiles:
            members = set(tile)
            uf = UnionFind(tile)
            for i, j in tile:
                for nb in ((i, j + 1), (i + 1, j + 1)):
                    if nb in members:
                        uf.union((i, j), nb)
            if len(uf.groups()) != 1:
                raise ValueError(f"tile {tile} is not connected")

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "tiles": [[list(ix) for ix in tile] for tile in self.tiles],
            "free": list(self.free),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tiling":
        tiling = cls.from_groups(data["r"], ([tuple(ix) for ix in t] for t in data["tiles"]))
        if "free" in data and list(data["free"]) != list(tiling.free):
            raise ValueError("free flags disagree with the tiles")
        return tiling

    def render(self) -> str:
        """ASCII triangle, top row first, each entry replaced by its tile label.

        Free tiles are labelled ``F1, F2, ...`` in free-tile order and the
        remaining tiles ``N1, N2, ...``.
        """
        labels = {}
        n_free = n_fixed = 0
        for tile, is_free in zip(self.tiles, self.free):
            if is_free:
                n_free += 1
                name = f"F{n_free}"
            else:
                n_fixed += 1
                name = f"N{n_fixed}"
            for ix in tile:
                labels[ix] = name
        width = max((len(v) for v in labels.values()), default=1) + 1
        lines = []
        for j in range(self.r, 0, -1):
            pad = " " * ((self.r - j) * width // 2)
            cells = "".join(labels[(i, j)].center(width) for i in range(1, j + 1))
            lines.append((pad + cells).rstrip())
        return "\n".join(lines)


@dataclass(frozen=True)
class TilingMatrix:
    """``(r-2) x s`` counts of free-tile entries per free row, row-major."""

    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_list(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def tiling(x: GTPattern) -> Tiling:
    if not is_gt_pattern(x):
        raise ValueError("tilings are defined only for GT-patterns")
    uf = UnionFind(x.indices())
    for i, j in x.indices():
        if j == x.r:
            continue
        for nb in ((i, j + 1), (i + 1, j + 1)):
            if x[nb] == x[i, j]:
                uf.union((i, j), nb)
    return Tiling.from_groups(x.r, uf.groups())


def tiling_matrix(P: Tiling) -> TilingMatrix:
    free = P.free_tiles
    rows = []
    for j in range(1, P.r - 1):
        # free row j is pattern row j + 1
        rows.append(tuple(sum(1 for (_, jj) in tile if jj == j + 1) for tile in free))
    return TilingMatrix(tuple(rows), len(free))


def kernel_dimension(A: TilingMatrix | Sequence[Sequence[int]], ncols: int | None = None) -> int:
    if isinstance(A, TilingMatrix):
        rows, ncols = A.rows, A.ncols
    else:
        rows = A
        if ncols is None:
            if not rows:
                raise ValueError("column count of an empty matrix is ambiguous; pass ncols")
            ncols = len(rows[0])
    return ncols - integer_rank(rows, ncols)


def min_face_dimension(x: GTPattern) -> int:
    """Dimension of the smallest face of GT(x) that contains ``x``."""
    return kernel_dimension(tiling_matrix(tiling(x)))


def _blocks(lam: Sequence) -> list[tuple[object, int, int]]:
    # (kappa_p, first index, last index) per block of equal top-row entries
    out = []
    start = 1
    for kappa, v in multiplicities(lam):
        out.append((kappa, start, start + v - 1))
        start += v
    return out


def triangle_tiles(lam: Sequence) -> list[list[Index]]:
    """The forced tiles ``T_p`` under each block of equal top-row entries."""
    lam = as_partition(lam)
    r = len(lam)
    out = []
    for _, first, last in _blocks(lam):
        out.append([(i, j) for j in range(1, r + 1) for i in range(first, j + 1)
                    if i <= last - (r - j)])
    return out


def generic_interior_tiling(lam: Sequence) -> Tiling:
    """Tiling shared by every point in the relative interior of GT_lam."""
    lam = as_partition(lam)
    r = len(lam)
    triangles = triangle_tiles(lam)
    covered = {ix for tile in triangles for ix in tile}
    singletons = [[ix] for ix in reading_order(r) if ix not in covered]
    return Tiling.from_groups(r, triangles + singletons)


def interior_point(lam: Sequence) -> GTPattern:
    """A point in the relative interior of GT_lam, with exact rational entries.

    Entries under a block of equal top-row values copy that value.  Every
    other entry on a down-right diagonal starting in block ``p`` gets a value
    in the open interval between the block's value and the next one below it;
    these are equally spaced and strictly decreasing along each diagonal, then
    from one diagonal to the next.
    """
    lam = as_partition(Fraction(v) for v in lam)
    r = len(lam)
    blocks = _blocks(lam)
    values: dict[Index, Fraction] = {}
    for p, (kappa, first, last) in enumerate(blocks):
        fill = []
        for i in range(first, last + 1):
            for j in range(r, i - 1, -1):
                if i <= last - (r - j):
                    values[(i, j)] = kappa
                else:
                    fill.append((i, j))
        if fill:
            lower = blocks[p + 1][0]
            step = (kappa - lower) / (len(fill) + 1)
            for t, ix in enumerate(fill, start=1):
                values[ix] = kappa - t * step
    return GTPattern(tuple(tuple(values[(i, j)] for i in range(1, j + 1))
                           for j in range(1, r + 1)))


def free_tile_count(lam: Sequence) -> int:
    """Closed-form number of free tiles in the generic interior tiling (needs m >= 2)."""
    runs = multiplicities(lam)
    if len(runs) < 2:
        raise DomainError("free-tile count formula needs at least two distinct parts")
    return comb(len(lam), 2) - sum(comb(v, 2) for _, v in runs) - 1


def degree_formula(lam: Sequence) -> int:
    """``C(r-1, 2) - sum_p C(v_p, 2)`` for a partition with at least two distinct parts.

    ``math.comb`` already gives ``C(1, 2) = 0``.  With a single distinct part
    and ``r >= 2`` the expression is outside its hypothesis and is refused.
    """
    runs = multiplicities(lam)
    r = len(lam)
    if r <= 1:
        return 0
    if len(runs) == 1:
        raise DomainError("degree formula requires at least two distinct parts in lambda")
    return comb(r - 1, 2) - sum(comb(v, 2) for _, v in runs)


def dim_gt_polytope(lam: Sequence[int], beta: Sequence[int]) -> int:
    """Dimension of GT_{lam, beta}, summed over the primitive pieces of the pair."""
    if not dominates(lam, beta):
        raise NotDominatedError(lam, beta)
    return sum(degree_formula(piece) for piece, _ in primitive_decomposition(lam, beta))



def random_partition(rng, r: int, max_parts: int | None = None, denominator: int = 12) -> tuple:
    """Random weakly decreasing rational vector of length ``r`` with repeated values.

    Block sizes are a random composition of ``r`` into at most ``max_parts``
    blocks; block values are distinct fractions with denominator dividing
    ``denominator``.
    """
    if r == 0:
        return ()
    m = rng.randint(1, min(r, max_parts or r))
    cuts = sorted(rng.sample(range(1, r), m - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [r])]
    pool = range(-5 * denominator, 20 * denominator)
    values = sorted((Fraction(v, denominator) for v in rng.sample(pool, m)), reverse=True)
    return tuple(v for v, n in zip(values, sizes) for _ in range(n))
