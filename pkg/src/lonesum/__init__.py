"""Exact combinatorics of lonesum matrices.

A lonesum matrix is uniquely reconstructible from its row and column sums.
This package decides lonesum-ness with certificates, reconstructs matrices
from margins, counts lonesum matrices exactly (poly-Bernoulli numbers and
their q-ary generalizations), expands the matching generating functions in
exact rational arithmetic, realizes the correspondence with bounded-
displacement permutations, and searches for weak-lonesum counterexamples.
"""

from .matrix import (
    MarginProfile,
    MatrixFormatError,
    NotLonesumError,
    QMatrix,
    StandardForm,
    StructureProfile,
    format_matrix,
    margins,
    parse_matrix,
    permute,
    standard_form,
    structure_profile,
    structure_vector,
    submatrix,
    swap_values,
)
from .strong import (
    Block,
    BlockDecomposition,
    ForbiddenWitness,
    PartitionPair,
    Reconstruction,
    allowed_2x2,
    block_decomposition,
    find_forbidden,
    is_strong_lonesum,
    margins_feasible,
    reconstruct_strong,
)
from .counting import (
    block_fillings,
    compositions,
    count_lonesum,
    count_symmetric_lonesum,
    poly_bernoulli_inclusion_exclusion,
    poly_bernoulli_stirling_pair,
    stairs_count,
    stirling2,
)
from .series import (
    BiSeries,
    UniSeries,
    block_fillings_egf,
    fixed_column_series,
    lonesum_egf,
    poly_bernoulli_egf,
    symmetric_lonesum_egf,
)
from .bijection import (
    BoundedPermutation,
    TuplePair,
    count_bounded_permutations,
    matrix_to_permutation,
    matrix_to_tuples,
    permutation_to_matrix,
    tuples_to_matrix,
)
from .weak import (
    Cycle,
    SmallForbidden,
    TERNARY_FORBIDDEN_6X6,
    TERNARY_FORBIDDEN_6X6_ALT,
    TERNARY_FORBIDDEN_6X9,
    TERNARY_FORBIDDEN_6X9_ALT,
    WeakStatus,
    WeakVerdict,
    find_cycle,
    forbidden_family,
    is_minimal_forbidden,
    is_weak_lonesum,
    small_forbidden_scan,
    swap_along_cycle,
    validate_cycle,
    validate_path,
)

__version__ = "0.1.0"

__all__ = [
    "BiSeries",
    "Block",
    "BlockDecomposition",
    "BoundedPermutation",
    "Cycle",
    "ForbiddenWitness",
    "MarginProfile",
    "MatrixFormatError",
    "NotLonesumError",
    "PartitionPair",
    "QMatrix",
    "Reconstruction",
    "SmallForbidden",
    "StandardForm",
    "StructureProfile",
    "TERNARY_FORBIDDEN_6X6",
    "TERNARY_FORBIDDEN_6X6_ALT",
    "TERNARY_FORBIDDEN_6X9",
    "TERNARY_FORBIDDEN_6X9_ALT",
    "TuplePair",
    "UniSeries",
    "WeakStatus",
    "WeakVerdict",
    "allowed_2x2",
    "block_decomposition",
    "block_fillings",
    "block_fillings_egf",
    "compositions",
    "count_bounded_permutations",
    "count_lonesum",
    "count_symmetric_lonesum",
    "find_cycle",
    "find_forbidden",
    "fixed_column_series",
    "forbidden_family",
    "format_matrix",
    "is_minimal_forbidden",
    "is_strong_lonesum",
    "is_weak_lonesum",
    "lonesum_egf",
    "margins",
    "margins_feasible",
    "matrix_to_permutation",
    "matrix_to_tuples",
    "parse_matrix",
    "permutation_to_matrix",
    "permute",
    "poly_bernoulli_egf",
    "poly_bernoulli_inclusion_exclusion",
    "poly_bernoulli_stirling_pair",
    "reconstruct_strong",
    "small_forbidden_scan",
    "stairs_count",
    "standard_form",
    "stirling2",
    "structure_profile",
    "structure_vector",
    "submatrix",
    "swap_along_cycle",
    "swap_values",
    "symmetric_lonesum_egf",
    "tuples_to_matrix",
    "validate_cycle",
    "validate_path",
    "__version__",
]
