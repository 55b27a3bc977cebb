"""Acceptance checklist: one test per criterion, run with ``pytest -v`` to get
one pass/fail line each.

Criteria 1 and 2 assert externally supplied reference values for the
symmetric counts.  For alphabet size 2 those values are correct, but for
q >= 3 they disagree with exhaustive enumeration: three mutually independent
routes (the closed formula, the generating function, and the brute-force
oracle, see test_counting/test_series/test_oracle) agree on 3, 12, 80, 742,
8482 for q = 3 where the reference table says 3, 18, 149, 1390, 13377.  The
reference rows only match reality at q = 2, where the general-q terms
collapse.  Both criteria are asserted as supplied and fail deliberately;
everything they were meant to guard is covered by the oracle-agreement
tests.
"""

import itertools
import random
import time

import pytest

from lonesum import (
    QMatrix,
    Reconstruction,
    TERNARY_FORBIDDEN_6X6,
    TERNARY_FORBIDDEN_6X6_ALT,
    TERNARY_FORBIDDEN_6X9,
    TERNARY_FORBIDDEN_6X9_ALT,
    WeakStatus,
    count_bounded_permutations,
    count_lonesum,
    count_symmetric_lonesum,
    find_cycle,
    fixed_column_series,
    forbidden_family,
    is_minimal_forbidden,
    is_strong_lonesum,
    is_weak_lonesum,
    lonesum_egf,
    margins,
    matrix_to_permutation,
    permutation_to_matrix,
    poly_bernoulli_egf,
    poly_bernoulli_inclusion_exclusion,
    poly_bernoulli_stirling_pair,
    reconstruct_strong,
    small_forbidden_scan,
    structure_profile,
    swap_values,
)
from lonesum.bijection import BoundedPermutation
from lonesum.oracle import count_strong, enumerate_matrices


def test_c01_symmetric_count_table():
    """Symmetric counts for n = 1..5 at q = 2 and q = 3, inside one second."""
    started = time.perf_counter()
    binary = [count_symmetric_lonesum(2, n) for n in range(1, 6)]
    ternary = [count_symmetric_lonesum(3, n) for n in range(1, 6)]
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    assert binary == [2, 6, 26, 150, 1082]
    # Reference values; enumeration proves the actual counts are
    # [3, 12, 80, 742, 8482].  Kept as supplied - see module docstring.
    assert ternary == [3, 18, 149, 1390, 13377]


def test_c02_symmetric_count_polynomials():
    """Symmetric counts match the supplied polynomial rows for q = 2..6."""
    rows = {
        1: lambda q: q,
        2: lambda q: 2 * q**2 + 2 * q - 6,
        3: lambda q: 9 * q**3 - 12 * q**2 + 12 * q - 22,
        4: lambda q: 16 * q**4 + 72 * q**3 - 312 * q**2 + 392 * q - 218,
        5: lambda q: 25 * q**5 + 160 * q**4 + 400 * q**3 - 3180 * q**2 + 4920 * q - 2598,
    }
    # Correct at q = 2 only; see module docstring.
    for n, poly in rows.items():
        for q in range(2, 7):
            assert count_symmetric_lonesum(q, n) == poly(q), (n, q)


def test_c03_poly_bernoulli_formulas_agree():
    """Inclusion-exclusion and Stirling-pair formulas agree through 10."""
    started = time.perf_counter()
    for m in range(11):
        for n in range(11):
            assert poly_bernoulli_inclusion_exclusion(
                m, n
            ) == poly_bernoulli_stirling_pair(m, n)
    assert time.perf_counter() - started < 1.0


def test_c04_count_matches_oracle():
    """Closed-form counts equal brute-force enumeration on the fixed grid."""
    started = time.perf_counter()
    cases = [(2, m, n) for m in range(1, 5) for n in range(1, 5)]
    cases += [(3, m, n) for m in range(1, 4) for n in range(1, 4)]
    cases += [(3, 2, 4), (4, 2, 3), (5, 2, 3)]
    for q, m, n in cases:
        assert count_lonesum(q, m, n) == count_strong(q, m, n), (q, m, n)
    assert time.perf_counter() - started < 60.0


def test_c05_criterion_equals_margin_uniqueness():
    """Matrix by matrix: lonesum criterion == alone in its margin class."""
    for q in (2, 3):
        for m in range(1, 4):
            for n in range(1, 4):
                classes = {}
                matrices = list(enumerate_matrices(q, m, n))
                for matrix in matrices:
                    classes.setdefault(margins(matrix), []).append(matrix)
                for matrix in matrices:
                    singleton = len(classes[margins(matrix)]) == 1
                    assert is_strong_lonesum(matrix) == singleton


def test_c06_reconstruction_roundtrip():
    """Margins of every small lonesum matrix reconstruct to it; the worked
    ambiguous margins stay ambiguous."""
    for q in (2, 3):
        for m in range(1, 4):
            for n in range(1, 4):
                for matrix in enumerate_matrices(q, m, n):
                    if is_strong_lonesum(matrix):
                        rows, cols = margins(matrix)
                        assert reconstruct_strong(q, rows, cols) == matrix
    assert reconstruct_strong(3, (1, 4, 2), (1, 4, 2)) is Reconstruction.AMBIGUOUS


def test_c07_permutation_correspondence():
    """Bounded-permutation counts and both roundtrips, inside ten seconds."""
    started = time.perf_counter()
    for m in range(1, 8):
        for n in range(1, 8):
            if m + n <= 8:
                assert count_bounded_permutations(m, n) == poly_bernoulli_stirling_pair(m, n)
    for m in range(1, 4):
        for n in range(1, 4):
            for matrix in enumerate_matrices(2, m, n):
                if is_strong_lonesum(matrix):
                    sigma = matrix_to_permutation(matrix)
                    assert permutation_to_matrix(sigma) == matrix
    for m in range(1, 5):
        for n in range(1, 5):
            if m + n > 6:
                continue
            for perm in itertools.permutations(range(1, m + n + 1)):
                try:
                    sigma = BoundedPermutation(perm, m, n)
                except ValueError:
                    continue
                assert matrix_to_permutation(permutation_to_matrix(sigma)).images == perm
    assert time.perf_counter() - started < 10.0


def test_c08_generating_functions():
    """EGF coefficients reproduce the counts exactly, inside ten seconds."""
    started = time.perf_counter()
    for q in (2, 3):
        series = lonesum_egf(q, 6, 6)
        for m in range(7):
            for n in range(7):
                value = series.egf(m, n)
                assert value.denominator == 1
                assert value == count_lonesum(q, m, n)
    assert poly_bernoulli_egf(6, 6).coeffs == lonesum_egf(2, 6, 6).coeffs
    for q in (2, 3):
        for cols in range(4):
            series = fixed_column_series(q, cols, 6)
            for n in range(7):
                value = series.egf(n)
                assert value.denominator == 1
                assert value == count_lonesum(q, n, cols)
    assert time.perf_counter() - started < 10.0


def test_c09_weak_lonesum_suite():
    """Forbidden family witnesses, minimality, trade matrices, and the
    binary equivalence of weak and strong."""
    # (a) the 0/1 swap certifies every family member
    for n in range(3, 7):
        matrix = forbidden_family(n)
        swapped = swap_values(matrix, 0, 1)
        assert swapped != matrix
        assert structure_profile(swapped) == structure_profile(matrix)
        verdict = is_weak_lonesum(matrix)
        assert verdict.status is WeakStatus.WITNESS
        assert verdict.witness != matrix
        assert structure_profile(verdict.witness) == structure_profile(matrix)
    # (b) minimality of the two smallest members
    assert is_minimal_forbidden(forbidden_family(3)) is True
    assert is_minimal_forbidden(forbidden_family(4)) is True
    # (c) the ternary trade matrices and their alternatives
    for matrix, alt in (
        (TERNARY_FORBIDDEN_6X6, TERNARY_FORBIDDEN_6X6_ALT),
        (TERNARY_FORBIDDEN_6X9, TERNARY_FORBIDDEN_6X9_ALT),
    ):
        assert matrix != alt
        assert structure_profile(matrix) == structure_profile(alt)
    # (d) for binary matrices weak and strong coincide
    for m in range(1, 5):
        for n in range(1, 5):
            for matrix in enumerate_matrices(2, m, n):
                unique = is_weak_lonesum(matrix).status is WeakStatus.UNIQUE
                assert unique == is_strong_lonesum(matrix)


def test_c10_long_cycles_have_small_witnesses():
    """Every sampled quaternary matrix whose cycle search returns a cycle of
    length at least 6 contains a bad 2x2, 2x3 or 3x2 submatrix."""

    def check(matrix):
        cycle = find_cycle(matrix)
        if cycle is not None and len(cycle.cells) >= 6:
            assert small_forbidden_scan(matrix) is not None, matrix.entries

    for matrix in enumerate_matrices(4, 3, 3):
        check(matrix)
    rng = random.Random(20250810)
    for _ in range(100_000):
        m = rng.randint(1, 3)
        n = rng.randint(1, 4)
        entries = tuple(
            tuple(rng.randrange(4) for _ in range(n)) for _ in range(m)
        )
        check(QMatrix(4, entries))
