import itertools
import math

import pytest

from lonesum import (
    block_fillings,
    compositions,
    count_lonesum,
    count_symmetric_lonesum,
    poly_bernoulli_inclusion_exclusion,
    poly_bernoulli_stirling_pair,
    stairs_count,
    stirling2,
)
from lonesum.oracle import count_strong, count_symmetric, enumerate_matrices, margins
from lonesum.strong import is_strong_lonesum


def brute_set_partitions(n):
    """All partitions of {0..n-1} into nonempty blocks."""
    if n == 0:
        return [[]]
    out = []
    for smaller in brute_set_partitions(n - 1):
        for i in range(len(smaller)):
            out.append(smaller[:i] + [smaller[i] + [n - 1]] + smaller[i + 1 :])
        out.append(smaller + [[n - 1]])
    return out


class TestStirling:
    def test_diagonal(self):
        for n in range(11):
            assert stirling2(n, n) == 1

    def test_no_blocks(self):
        assert stirling2(0, 0) == 1
        for n in range(1, 11):
            assert stirling2(n, 0) == 0

    def test_against_partition_enumeration(self):
        for n in range(7):
            partitions = brute_set_partitions(n)
            for k in range(n + 2):
                assert stirling2(n, k) == sum(1 for p in partitions if len(p) == k)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            stirling2(-1, 0)


class TestPolyBernoulli:
    def test_zero_row_index(self):
        for n in range(8):
            assert poly_bernoulli_inclusion_exclusion(0, n) == 1

    def test_single_row(self):
        for n in range(8):
            assert poly_bernoulli_inclusion_exclusion(1, n) == 2**n
            # every 1 x n binary matrix is determined by its column sums
            assert count_strong(2, 1, n) == 2**n if n else True

    def test_two_by_two(self):
        assert poly_bernoulli_inclusion_exclusion(2, 2) == 14
        assert poly_bernoulli_stirling_pair(2, 2) == 14
        assert count_strong(2, 2, 2) == 14

    def test_formulas_agree(self):
        for m in range(11):
            for n in range(11):
                assert poly_bernoulli_inclusion_exclusion(
                    m, n
                ) == poly_bernoulli_stirling_pair(m, n)

    def test_symmetry(self):
        for m in range(8):
            for n in range(8):
                assert poly_bernoulli_stirling_pair(m, n) == poly_bernoulli_stirling_pair(n, m)


class TestStairsCount:
    def test_no_steps_is_zero_matrix(self):
        for m in range(1, 6):
            for n in range(1, 6):
                assert stairs_count(m, n, 0) == 1

    def test_total_over_steps(self):
        for m in range(1, 7):
            for n in range(1, 7):
                total = sum(stairs_count(m, n, j) for j in range(min(m, n) + 1))
                assert total == poly_bernoulli_stirling_pair(m, n)

    def test_two_by_two_with_three_stairs(self):
        assert stairs_count(2, 2, 2) == 4
        # brute force: lonesum binary 2x2 matrices with two distinct
        # nonzero row sums
        found = 0
        for matrix in enumerate_matrices(2, 2, 2):
            if not is_strong_lonesum(matrix):
                continue
            sums = {s for s in margins(matrix).row_sums if s}
            if len(sums) == 2:
                found += 1
        assert found == 4


class TestCompositions:
    def test_listing(self):
        assert list(compositions(2, 1)) == [(0, 2), (1, 1)]

    def test_empty_when_too_many_parts(self):
        assert list(compositions(2, 3)) == []

    def test_count_is_binomial(self):
        for l in range(1, 9):
            for j in range(1, l + 1):
                assert len(list(compositions(l, j))) == math.comb(l, j)

    def test_lexicographic_and_valid(self):
        for l in (3, 5):
            for j in (1, 2, 3):
                seen = list(compositions(l, j))
                assert seen == sorted(seen)
                for comp in seen:
                    assert sum(comp) == l
                    assert comp[0] >= 0 and all(part >= 1 for part in comp[1:])

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            list(compositions(0, 1))


def brute_block_fillings(q, r, s):
    """Assignments of 0..q-2 to an r x s block with nonzeros in one line."""
    count = 0
    for cells in itertools.product(range(q - 1), repeat=r * s):
        nonzero = [(i // s, i % s) for i, v in enumerate(cells) if v]
        rows = {i for i, _ in nonzero}
        cols = {j for _, j in nonzero}
        if len(rows) <= 1 or len(cols) <= 1:
            count += 1
    return count


class TestBlockFillings:
    def test_binary_blocks_carry_nothing(self):
        for r in range(1, 5):
            for s in range(1, 5):
                assert block_fillings(2, r, s) == 1

    def test_single_cell(self):
        for q in range(2, 7):
            assert block_fillings(q, 1, 1) == q - 1

    def test_ternary_square(self):
        assert block_fillings(3, 2, 2) == 9

    def test_against_enumeration(self):
        for q in (2, 3, 4):
            for r in range(1, 4):
                for s in range(1, 4):
                    assert block_fillings(q, r, s) == brute_block_fillings(q, r, s)


class TestCountLonesum:
    def test_reduces_to_poly_bernoulli_for_binary(self):
        for m in range(7):
            for n in range(7):
                assert count_lonesum(2, m, n) == poly_bernoulli_stirling_pair(m, n)

    def test_ternary_two_by_two(self):
        assert count_lonesum(3, 2, 2) == 50

    def test_single_row(self):
        for q in (2, 3, 5):
            for n in range(1, 6):
                assert count_lonesum(q, 1, n) == q**n

    def test_transpose_symmetry(self):
        for q in (2, 3, 4):
            for m in range(1, 6):
                for n in range(1, 6):
                    assert count_lonesum(q, m, n) == count_lonesum(q, n, m)

    def test_against_oracle(self):
        for q, m, n in [(2, 3, 3), (3, 2, 3), (3, 3, 3), (4, 2, 2), (5, 2, 2)]:
            assert count_lonesum(q, m, n) == count_strong(q, m, n)


class TestCountSymmetric:
    def test_single_cell(self):
        for q in range(2, 8):
            assert count_symmetric_lonesum(q, 1) == q

    def test_binary_column(self):
        assert [count_symmetric_lonesum(2, n) for n in range(1, 6)] == [
            2,
            6,
            26,
            150,
            1082,
        ]

    def test_ternary_values(self):
        # exhaustively verified: enumeration of all symmetric ternary
        # matrices gives 3, 12, 80, 742 for n = 1..4
        assert [count_symmetric_lonesum(3, n) for n in range(1, 5)] == [3, 12, 80, 742]

    def test_against_oracle(self):
        for q in (2, 3):
            for n in range(1, 4):
                assert count_symmetric_lonesum(q, n) == count_symmetric(q, n)
        assert count_symmetric_lonesum(2, 4) == count_symmetric(2, 4)
        assert count_symmetric_lonesum(3, 4) == count_symmetric(3, 4)
