import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtkostka.gt import (
    GTPattern,
    count_lattice_points,
    hwt,
    interlacing_rows,
    is_gt_pattern,
    kostka_ssyt,
    lattice_points,
    schur_monomials,
    wt,
)
from gtkostka.weights import dominates, primitive_decomposition, sort_to_partition

from sweep import brute_force_count, sorted_sweep_pairs, sweep_pairs

EXAMPLE_ROWS = ((1,), (2, 0), (2, 1, 0))


def test_hwt_and_wt_of_small_pattern():
    x = GTPattern(EXAMPLE_ROWS)
    assert hwt(x) == (2, 1, 0)
    assert wt(x) == (1, 1, 1)


def test_constant_pattern():
    lam = (2, 1, 0)
    x = GTPattern.constant(lam)
    assert x.rows == ((2,), (2, 1), (2, 1, 0))
    assert hwt(x) == lam
    assert wt(x) == lam
    assert is_gt_pattern(x)


def test_rank_one_pattern():
    x = GTPattern(((Fraction(5, 2),),))
    assert hwt(x) == (Fraction(5, 2),)
    assert wt(x) == (Fraction(5, 2),)


def test_is_gt_pattern():
    assert is_gt_pattern(GTPattern(EXAMPLE_ROWS))
    assert not is_gt_pattern(GTPattern(((3,), (2, 0), (2, 1, 0))))


def test_indexing_follows_row_convention():
    x = GTPattern(EXAMPLE_ROWS)
    assert x[1, 1] == 1
    assert x[1, 2] == 2 and x[2, 2] == 0
    assert x[3, 3] == 0
    with pytest.raises(IndexError):
        x[3, 2]


def test_bad_row_lengths_rejected():
    with pytest.raises(ValueError):
        GTPattern(((1,), (2, 0, 0)))


def test_text_round_trip():
    x = GTPattern(((Fraction(1, 2),), (1, 0), (1, Fraction(1, 3), 0)))
    text = x.to_text()
    assert text == "1/2\n1 0\n1 1/3 0\n"
    assert GTPattern.from_text(text) == x


def test_interlacing_rows_respect_bounds_and_sum():
    rows = list(interlacing_rows((4, 2, 1), 4))
    assert rows == sorted(rows)
    assert rows == [(2, 2), (3, 1)]


@pytest.mark.parametrize("lam, beta, expected", [
    ((2, 1, 0), (1, 1, 1), 2),
    ((4, 2, 1), (3, 3, 1), 1),
    ((3, 2, 1), (2, 2, 2), 2),
    ((3, 1, 0), (1, 1, 2), 2),
    ((2, 1, 0), (3, 0, 0), 0),
])
def test_count_matches_frozen_brute_force(lam, beta, expected):
    # expected values computed with sweep.brute_force_count
    assert count_lattice_points(lam, beta) == expected
    assert brute_force_count(lam, beta) == expected


@pytest.mark.parametrize("lam", [(0,), (3,), (2, 1), (3, 3, 1), (4, 2, 2, 0, 0, 0)])
def test_count_for_lambda_equal_beta_is_one(lam):
    assert count_lattice_points(lam, lam) == 1
    assert kostka_ssyt(lam, lam) == 1


def test_count_empty_and_size_mismatch():
    assert count_lattice_points((), ()) == 1
    assert count_lattice_points((2, 1), (1, 1)) == 0


def test_count_rejects_bad_input():
    with pytest.raises(ValueError):
        count_lattice_points((2, 1), (1, 1, 1))
    with pytest.raises(ValueError):
        count_lattice_points((Fraction(1, 2), 0), (1, 0))
    with pytest.raises(ValueError):
        count_lattice_points((1, 2), (2, 1))


@pytest.mark.parametrize("lam, beta, expected", [
    ((2, 1, 0), (1, 1, 1), 2),
    ((4, 2), (3, 3), 1),
])
def test_kostka_ssyt(lam, beta, expected):
    assert kostka_ssyt(lam, beta) == expected


def test_lattice_points_agree_with_count():
    for lam, beta in sweep_pairs(5, 4):
        points = list(lattice_points(lam, beta))
        assert len(points) == count_lattice_points(lam, beta)
        for x in points:
            assert is_gt_pattern(x) and hwt(x) == lam and wt(x) == beta


def test_brute_force_agrees_on_small_sweep():
    for lam, beta in sweep_pairs(4, 3):
        assert count_lattice_points(lam, beta) == brute_force_count(lam, beta)


@pytest.mark.parametrize("lam, expected", [
    ((1, 0), {(1, 0): 1, (0, 1): 1}),
    ((2, 0), {(2, 0): 1, (1, 1): 1, (0, 2): 1}),
    ((1, 1), {(1, 1): 1}),
    ((2, 1, 0), {(2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1,
                 (0, 1, 2): 1, (1, 1, 1): 2}),
])
def test_schur_monomials(lam, expected):
    assert schur_monomials(lam) == expected


def test_schur_coefficients_are_symmetric():
    terms = schur_monomials((3, 1, 1, 0))
    for beta, c in terms.items():
        for perm in itertools.permutations(beta):
            assert terms.get(perm, 0) == c


def test_count_is_symmetric_in_beta():
    for lam, beta in sweep_pairs(6, 4):
        if beta != sort_to_partition(beta):
            continue
        k = count_lattice_points(lam, beta)
        for perm in set(itertools.permutations(beta)):
            assert count_lattice_points(lam, perm) == k


def test_nonempty_iff_dominated_small():
    for lam, beta in sweep_pairs(6, 4):
        assert (count_lattice_points(lam, beta) > 0) == dominates(lam, beta)


def test_count_factors_over_primitive_pieces_small():
    for lam, beta in sorted_sweep_pairs(7, 4):
        if not dominates(lam, beta):
            continue
        product = 1
        for a, b in primitive_decomposition(lam, beta):
            product *= count_lattice_points(a, b)
        assert count_lattice_points(lam, beta) == product


def test_dilation_matches_dilated_polytope():
    # brute force on the n-th dilate of the polytope, i.e. top row n*lam and weight n*beta
    lam, beta = (2, 1, 0), (1, 1, 1)
    for n in range(1, 4):
        scaled = tuple(n * a for a in lam), tuple(n * b for b in beta)
        assert count_lattice_points(*scaled) == brute_force_count(*scaled)


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=7)


@st.composite
def arrays(draw, r):
    return GTPattern(tuple(tuple(draw(rationals) for _ in range(j)) for j in range(1, r + 1)))


@settings(max_examples=50)
@given(st.integers(1, 6).flatmap(lambda r: st.tuples(arrays(r), arrays(r), rationals, rationals)))
def test_wt_and_hwt_are_linear(data):
    x, y, a, b = data
    combo = x.scale(a) + y.scale(b)
    assert wt(combo) == tuple(a * p + b * q for p, q in zip(wt(x), wt(y)))
    assert hwt(combo) == tuple(a * p + b * q for p, q in zip(hwt(x), hwt(y)))
