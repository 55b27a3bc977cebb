import random

import pytest

from lonesum import (
    QMatrix,
    TERNARY_FORBIDDEN_6X6,
    TERNARY_FORBIDDEN_6X6_ALT,
    TERNARY_FORBIDDEN_6X9,
    TERNARY_FORBIDDEN_6X9_ALT,
    WeakStatus,
    find_cycle,
    forbidden_family,
    is_minimal_forbidden,
    is_strong_lonesum,
    is_weak_lonesum,
    small_forbidden_scan,
    structure_profile,
    swap_along_cycle,
    swap_values,
    validate_cycle,
    validate_path,
)
from lonesum.oracle import enumerate_matrices

from _support import ANTIDIAG, WEAK_3X3


class TestIsWeakLonesum:
    def test_worked_example_is_unique(self):
        verdict = is_weak_lonesum(WEAK_3X3)
        assert verdict.status is WeakStatus.UNIQUE
        assert verdict.witness is None

    def test_family_witness_is_the_01_swap(self):
        matrix = forbidden_family(3)
        verdict = is_weak_lonesum(matrix)
        assert verdict.status is WeakStatus.WITNESS
        assert verdict.witness == swap_values(matrix, 0, 1)

    def test_trade_matrix_witness_is_the_alternative(self):
        verdict = is_weak_lonesum(TERNARY_FORBIDDEN_6X6)
        assert verdict.status is WeakStatus.WITNESS
        assert verdict.witness == TERNARY_FORBIDDEN_6X6_ALT

    def test_budget_exhaustion(self):
        verdict = is_weak_lonesum(TERNARY_FORBIDDEN_6X6, budget=1)
        assert verdict.status is WeakStatus.BUDGET_EXCEEDED
        assert verdict.witness is None
        assert verdict.nodes >= 1

    def test_witness_shares_profile(self):
        for matrix in enumerate_matrices(3, 2, 3):
            verdict = is_weak_lonesum(matrix)
            if verdict.status is WeakStatus.WITNESS:
                assert verdict.witness != matrix
                assert structure_profile(verdict.witness) == structure_profile(matrix)

    def test_matches_profile_grouping_oracle(self):
        for m in range(1, 4):
            for n in range(1, 4):
                classes = {}
                matrices = list(enumerate_matrices(3, m, n))
                for matrix in matrices:
                    key = structure_profile(matrix)
                    classes[key] = classes.get(key, 0) + 1
                for matrix in matrices:
                    unique = is_weak_lonesum(matrix).status is WeakStatus.UNIQUE
                    assert unique == (classes[structure_profile(matrix)] == 1)

    def test_binary_weak_equals_strong(self):
        for m in range(1, 4):
            for n in range(1, 4):
                for matrix in enumerate_matrices(2, m, n):
                    unique = is_weak_lonesum(matrix).status is WeakStatus.UNIQUE
                    assert unique == is_strong_lonesum(matrix)


class TestCycles:
    def test_binary_antidiagonal(self):
        cycle = find_cycle(ANTIDIAG)
        assert cycle is not None
        assert cycle.symbols == (0, 1)
        assert len(cycle.cells) == 4
        assert validate_cycle(ANTIDIAG, cycle.cells)

    def test_family_diagonal_cycle(self):
        matrix = forbidden_family(5)
        cycle = find_cycle(matrix)
        assert cycle is not None
        assert cycle.symbols == (0, 1)
        assert set(cycle.values) == {0, 1}
        assert validate_cycle(matrix, cycle.cells)

    def test_constant_matrix_has_none(self):
        assert find_cycle(QMatrix(3, ((1, 1), (1, 1)))) is None

    def test_unique_matrices_have_none(self):
        # a cycle certifies a second filling, so weak lonesum implies no cycle
        for matrix in enumerate_matrices(3, 2, 2):
            if is_weak_lonesum(matrix).status is WeakStatus.UNIQUE:
                assert find_cycle(matrix) is None

    def test_swap_along_cycle_preserves_profile(self):
        rng = random.Random(7)
        checked = 0
        while checked < 60:
            entries = tuple(
                tuple(rng.randrange(4) for _ in range(4)) for _ in range(3)
            )
            matrix = QMatrix(4, entries)
            cycle = find_cycle(matrix)
            if cycle is None:
                continue
            checked += 1
            swapped = swap_along_cycle(matrix, cycle)
            assert swapped != matrix
            assert structure_profile(swapped) == structure_profile(matrix)
            assert is_weak_lonesum(matrix).status is WeakStatus.WITNESS

    def test_path_validation(self):
        cells = ((0, 0), (0, 1), (1, 1))
        assert validate_path(ANTIDIAG, cells)
        assert not validate_path(ANTIDIAG, ((0, 0), (1, 1)))
        assert not validate_cycle(ANTIDIAG, cells)


class TestForbiddenFamily:
    def test_five_by_five_display(self):
        assert forbidden_family(5).entries == (
            (0, 1, 3, 3, 3),
            (4, 0, 1, 3, 3),
            (4, 2, 0, 1, 3),
            (4, 2, 2, 0, 1),
            (1, 2, 2, 2, 0),
        )

    def test_three_by_three(self):
        assert forbidden_family(3).entries == ((0, 1, 3), (4, 0, 1), (1, 2, 0))

    def test_01_swap_preserves_profile(self):
        for n in (3, 4, 5):
            matrix = forbidden_family(n)
            assert structure_profile(swap_values(matrix, 0, 1)) == structure_profile(
                matrix
            )

    def test_too_small(self):
        with pytest.raises(ValueError):
            forbidden_family(2)


class TestMinimality:
    def test_family_members(self):
        assert is_minimal_forbidden(forbidden_family(3)) is True

    def test_binary_antidiagonal(self):
        assert is_minimal_forbidden(ANTIDIAG) is True

    def test_weak_lonesum_is_not_forbidden(self):
        assert is_minimal_forbidden(WEAK_3X3) is False

    def test_non_minimal_witness(self):
        # contains the antidiagonal strictly, so another bad submatrix remains
        padded = QMatrix(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert is_minimal_forbidden(padded) is False

    def test_budget_propagates(self):
        assert is_minimal_forbidden(forbidden_family(3), budget=1) is None


class TestSmallForbiddenScan:
    def test_trade_matrix_is_clean(self):
        assert small_forbidden_scan(TERNARY_FORBIDDEN_6X6) is None

    def test_zero_matrix(self):
        assert small_forbidden_scan(QMatrix(3, ((0, 0), (0, 0)))) is None

    def test_long_cycle_quaternary(self):
        matrix = QMatrix(4, ((0, 1, 3), (2, 0, 1), (1, 2, 0)))
        cycle = find_cycle(matrix)
        assert cycle is not None and len(cycle.cells) >= 6
        found = small_forbidden_scan(matrix)
        assert found is not None
        assert is_weak_lonesum(found.matrix).status is WeakStatus.WITNESS


class TestTradeConstants:
    def test_profiles_match_and_differ(self):
        for matrix, alt in (
            (TERNARY_FORBIDDEN_6X6, TERNARY_FORBIDDEN_6X6_ALT),
            (TERNARY_FORBIDDEN_6X9, TERNARY_FORBIDDEN_6X9_ALT),
        ):
            assert matrix != alt
            assert structure_profile(matrix) == structure_profile(alt)

    def test_alternative_swap_is_involution(self):
        for matrix, alt in (
            (TERNARY_FORBIDDEN_6X6, TERNARY_FORBIDDEN_6X6_ALT),
            (TERNARY_FORBIDDEN_6X9, TERNARY_FORBIDDEN_6X9_ALT),
        ):
            support = [
                (i, j)
                for i in range(matrix.m)
                for j in range(matrix.n)
                if matrix.entries[i][j] != alt.entries[i][j]
            ]
            assert support
            grid = [list(row) for row in alt.entries]
            for i, j in support:
                grid[i][j] = matrix.entries[i][j]
            assert QMatrix(3, tuple(tuple(row) for row in grid)) == matrix

    def test_wide_trade_matrix_verdict(self):
        verdict = is_weak_lonesum(TERNARY_FORBIDDEN_6X9)
        assert verdict.status is WeakStatus.WITNESS
        assert verdict.witness == TERNARY_FORBIDDEN_6X9_ALT
