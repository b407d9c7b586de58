"""Recursive self-similar (0,1)-matrices, symplectic incidence structures, and
rational point enumeration on isotropic Grassmannians."""

from .bitmatrix import (
    BinaryMatrix,
    ParseError,
    PermutationPair,
    bipartite_components,
    deserialize,
    direct_sum,
    paste_right,
    permutation_equivalent,
    serialize,
    stack_identity_below,
)
from .combinat import (
    Cell,
    IndexTuple,
    PairSet,
    RowPartition,
    index_tuples,
    insert_pair_with_sign,
    pair_free_part,
    rank,
    row_partition,
    unrank,
)
from .fractal import FractalParams, fractal_matrix, fractal_matrix_blockwise, verify_fractal
from .gf import (
    EchelonResult,
    FieldMatrix,
    PrimeField,
    enumerate_projective,
    kernel_basis,
    normalize_projective,
    projective_count,
    rref,
)
from .incidence import (
    Configuration,
    configuration,
    incidence_matrix,
    incidence_row,
    triangle_row_order,
    verify_configuration,
    verify_incidence_fractal_match,
)
from .plucker import (
    Block,
    DecompositionReport,
    PluckerMatrix,
    SymplecticForm,
    contraction,
    decompose,
    plucker_matrix,
)
from .variety import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    PointSet,
    QuadraticRelation,
    evaluate_relation,
    expected_count,
    oracle_points,
    quadratic_relations,
    rational_points,
    subspace_count,
)

__version__ = "0.1.0"
