"""Stretched Kostka coefficients ``n -> K_{n lam, n beta}`` as exact polynomials."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .gt import count_lattice_points
from .tiling import dim_gt_polytope
from .weights import NotDominatedError, dominates, primitive_decomposition


class InterpolationError(ValueError):
    pass


class DegreeMismatchError(RuntimeError):
    """Interpolated degree disagrees with the dimension formula."""


@dataclass(frozen=True)
class RationalPolynomial:
    """Univariate polynomial in ``n``, exact rational coefficients, constant term first.

    Trailing zero coefficients are stripped, so the zero polynomial has no
    coefficients at all.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        c = [Fraction(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __call__(self, n):
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * n + a
        return acc

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[d]
            if a == 0:
                continue
            mag = abs(a)
            if d == 0:
                body = str(mag)
            else:
                power = "n" if d == 1 else f"n^{d}"
                body = power if mag == 1 else f"{mag} {power}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {"coeffs": [str(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalPolynomial":
        return cls(tuple(Fraction(a) for a in data["coeffs"]))


def _count_dilate(args) -> int:
    lam, beta, n = args
    return count_lattice_points([n * a for a in lam], [n * b for b in beta])


def stretched_values(lam: Sequence[int], beta: Sequence[int], N: int,
                     jobs: int | None = None) -> list[int]:
    """``[K_{n lam, n beta} for n = 1..N]``.

    With ``jobs > 1`` the dilations are counted in worker processes; results
    are returned in order of ``n`` either way.
    """
    if N < 1:
        raise ValueError("need at least one dilation")
    work = [(tuple(lam), tuple(beta), n) for n in range(1, N + 1)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_count_dilate, work))
    return [_count_dilate(w) for w in work]


def finite_differences(values: Sequence) -> list:
    """Leading forward differences ``[Δ^0 f(1), Δ^1 f(1), ..., Δ^{N-1} f(1)]``."""
    row = list(values)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


def interpolate(values: Sequence[int]) -> RationalPolynomial:
    """Polynomial through ``(n, values[n-1])`` for ``n = 1..N``, of degree at most ``N-2``.

    The last sample is a spare: the fit through the first ``N-1`` samples must
    reproduce it, i.e. the ``(N-1)``-th forward difference must vanish.
    """
    if len(values) < 2:
        raise InterpolationError("need at least two values (one spare for validation)")
    diffs = finite_differences(values)
    if diffs[-1] != 0:
        raise InterpolationError(
            f"degree overflow: {len(values)} samples do not fit a polynomial of degree "
            f"<= {len(values) - 2}")
    # f(n) = sum_k Δ^k f(1) * C(n-1, k); expand each binomial in powers of n
    coeffs = [Fraction(0)] * len(diffs)
    basis = [Fraction(1)]  # coefficients of C(n-1, k) as a polynomial in n
    for k, d in enumerate(diffs):
        if k > 0:
            # C(n-1, k) = C(n-1, k-1) * (n - k) / k
            nxt = [Fraction(0)] * (len(basis) + 1)
            for e, a in enumerate(basis):
                nxt[e + 1] += a / k
                nxt[e] -= a
            basis = nxt
        for e, a in enumerate(basis):
            coeffs[e] += d * a
    return RationalPolynomial(tuple(coeffs))


def degree_stretched(lam: Sequence[int], beta: Sequence[int]) -> int:
    """Degree predicted by the dimension formula; performs no counting."""
    return dim_gt_polytope(lam, beta)


def stretched_polynomial(lam: Sequence[int], beta: Sequence[int],
                         max_n: int | None = None, jobs: int | None = None) -> RationalPolynomial:
    """Interpolate the stretched Kostka coefficient from exact counts.

    By default ``degree + 2`` dilations are counted, with the degree taken from
    the formula; a larger ``max_n`` samples more points.  Either way the
    resulting degree must equal the formula's.
    """
    if not dominates(lam, beta):
        raise NotDominatedError(lam, beta)
    expected = degree_stretched(lam, beta)
    N = max_n if max_n is not None else expected + 2
    p = interpolate(stretched_values(lam, beta, N, jobs=jobs))
    if not p.coeffs:
        raise RuntimeError("all stretched counts vanished for a dominated pair")
    if p.degree != expected:
        raise DegreeMismatchError(
            f"interpolated degree {p.degree} != formula degree {expected} "
            f"for lambda={lam}, beta={beta}")
    return p


def factorization_check(lam: Sequence[int], beta: Sequence[int]) -> bool:
    """Does the stretched polynomial equal the product over its primitive pieces?"""
    whole = stretched_polynomial(lam, beta)
    product = RationalPolynomial((1,))
    for piece_lam, piece_beta in primitive_decomposition(lam, beta):
        product = product * stretched_polynomial(piece_lam, piece_beta)
    return whole == product


def positivity_check(p: RationalPolynomial) -> bool:
    return all(a >= 0 for a in p.coeffs)

