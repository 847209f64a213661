"""Kostka numbers as Gelfand-Tsetlin lattice-point counts, and the degrees of
stretched Kostka polynomials."""

from .gt import GTPattern, count_lattice_points, hwt, is_gt_pattern, kostka_ssyt, schur_monomials, wt
from .stretch import (
    RationalPolynomial,
    degree_stretched,
    factorization_check,
    interpolate,
    positivity_check,
    stretched_polynomial,
    stretched_values,
)
from .tiling import (
    Tiling,
    TilingMatrix,
    degree_formula,
    dim_gt_polytope,
    generic_interior_tiling,
    interior_point,
    kernel_dimension,
    min_face_dimension,
    tiling_matrix,
)
from .weights import (
    DomainError,
    NotDominatedError,
    dominates,
    is_primitive_pair,
    multiplicities,
    primitive_decomposition,
    size,
    sort_to_partition,
)

__version__ = "0.1.0"
