"""Binary lonesum matrices versus bounded-displacement permutations.

A binary lonesum m x n matrix with k distinct nonzero column sums carries a
pair of k-tuples of disjoint nonempty index sets (columns grouped by their
sum, rows likewise).  Those tuples in turn pin down a permutation matrix of
order m + n whose every rook sits within n places left and m places right of
the diagonal: each part lists a chain of rooks, every member pointing back at
its predecessor, and the chain heads take the remaining free columns in
order.  Both directions are deterministic, and together they realize the
one-to-one correspondence between lonesum matrices and permutations sigma of
{1, ..., m+n} with -n <= sigma(i) - i <= m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .matrix import NotLonesumError, QMatrix, margins
from .strong import is_strong_lonesum

DEFAULT_PERMUTATION_LIMIT = 10


class EnumerationLimitError(ValueError):
    """The requested enumeration exceeds the configured size limit."""


@dataclass(frozen=True)
class TuplePair:
    """Disjoint nonempty index groups: columns by sum, rows by sum, ascending.

    ``col_parts[a]`` holds the 0-based columns having the (a+1)-th smallest
    distinct nonzero column sum; ``row_parts`` likewise for rows.  Zero-sum
    indices belong to neither and form the implicit leftover parts.
    """

    col_parts: tuple[tuple[int, ...], ...]
    row_parts: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.col_parts)


@dataclass(frozen=True)
class BoundedPermutation:
    """A permutation of {1, ..., m+n} with every displacement in [-n, m].

    ``images[i]`` is the image of i+1.
    """

    images: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self) -> None:
        size = self.m + self.n
        if sorted(self.images) != list(range(1, size + 1)):
            raise ValueError("images are not a permutation of 1..m+n")
        for i, image in enumerate(self.images, start=1):
            if not -self.n <= image - i <= self.m:
                raise ValueError(
                    f"displacement {image - i} at position {i} outside [-{self.n}, {self.m}]"
                )


def matrix_to_tuples(matrix: QMatrix) -> TuplePair:
    """Group columns and rows of a binary lonesum matrix by their sums."""
    if matrix.q != 2:
        raise ValueError("tuple correspondence is defined for binary matrices")
    if not is_strong_lonesum(matrix):
        raise NotLonesumError("tuple correspondence needs a lonesum matrix")
    row_sums, col_sums = margins(matrix)

    def parts(sums: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        distinct = sorted({s for s in sums if s > 0})
        return tuple(
            tuple(i for i, s in enumerate(sums) if s == value) for value in distinct
        )

    return TuplePair(parts(col_sums), parts(row_sums))


def tuples_to_matrix(pair: TuplePair, m: int, n: int) -> QMatrix:
    """Rebuild the binary matrix: entry (j, i) is 1 iff C(i) + R(j) > k."""
    k = pair.k
    if len(pair.row_parts) != k:
        raise ValueError("column and row tuples must have the same length")
    col_rank = _ranks(pair.col_parts, n, "column")
    row_rank = _ranks(pair.row_parts, m, "row")
    entries = tuple(
        tuple(1 if col_rank[i] + row_rank[j] > k else 0 for i in range(n))
        for j in range(m)
    )
    return QMatrix(2, entries)


def _ranks(parts: Sequence[Sequence[int]], size: int, what: str) -> list[int]:
    rank = [0] * size
    seen: set[int] = set()
    for a, part in enumerate(parts, start=1):
        if not part:
            raise ValueError(f"empty {what} part")
        for index in part:
            if not 0 <= index < size:
                raise ValueError(f"{what} index {index} out of range")
            if index in seen:
                raise ValueError(f"{what} index {index} appears twice")
            seen.add(index)
            rank[index] = a
    return rank


def _chain_rooks(
    parts: Sequence[Sequence[int]], side: int, offset: int
) -> tuple[dict[int, int], list[int]]:
    """Place the forced rooks for one side of the permutation matrix.

    Returns known rook columns per row (1-based, within the side's local
    frame of ``side + offset`` columns) and the rows of the chain heads whose
    columns are still open, in part order.  Part members are chained: the
    t-th member's rook points at the (t-1)-th member's column block; the
    leftover part's head is pinned to column ``side + 1``.
    """
    taken: dict[int, int] = {}
    open_heads: list[int] = []
    members = {index for part in parts for index in part}
    leftover = sorted(set(range(offset)) - members)
    for which, part in enumerate([leftover, *map(sorted, parts)]):
        if not part:
            continue
        head, *rest = part
        if which == 0:
            taken[head + 1] = side + 1
        else:
            open_heads.append(head + 1)
        previous = head
        for member in rest:
            taken[member + 1] = previous + side + 2
            previous = member
    return taken, open_heads


def matrix_to_permutation(matrix: QMatrix) -> BoundedPermutation:
    """Binary lonesum matrix to its bounded-displacement permutation."""
    pair = matrix_to_tuples(matrix)
    m, n = matrix.m, matrix.n
    size = m + n

    # Top rows of the permutation matrix (1..n) encode the column parts.
    col_known, col_heads = _chain_rooks(pair.col_parts, m, n)
    # Bottom rows encode the row parts after a half-turn of the board.
    row_known, row_heads = _chain_rooks(pair.row_parts, n, m)

    image = [0] * (size + 1)
    for row, col in col_known.items():
        image[row] = col
    for row, col in row_known.items():
        image[size + 1 - row] = size + 1 - col

    used = {col for col in image if col}
    low_free = sorted(set(range(1, m + 1)) - used)
    high_free = sorted(set(range(m + 1, size + 1)) - used, reverse=True)
    if len(low_free) != len(col_heads) or len(high_free) != len(row_heads):
        raise AssertionError("rook chains do not fill the board")
    for row, col in zip(col_heads, low_free):
        image[row] = col
    # high_free is already in board coordinates; earlier part labels sit on
    # smaller rotated columns, hence on larger board columns.
    for row, col in zip(row_heads, high_free):
        image[size + 1 - row] = col
    return BoundedPermutation(tuple(image[1:]), m, n)


def permutation_to_matrix(sigma: BoundedPermutation) -> QMatrix:
    """Bounded-displacement permutation back to its binary lonesum matrix."""
    m, n = sigma.m, sigma.n
    size = m + n

    def read_side(images: Sequence[int], rows: int, side: int) -> list[list[int]]:
        """Recover the parts from one side's rook chains (labels ascending)."""
        heads = sorted(
            (images[i - 1], i) for i in range(1, rows + 1) if images[i - 1] <= side
        )
        label = {row: a for a, (_, row) in enumerate(heads, start=1)}
        assignment = [0] * (rows + 1)
        for _, row in heads:
            assignment[row] = label[row]
        for i in range(1, rows + 1):
            col = images[i - 1]
            if col <= side + 1:
                continue
            predecessor = col - side - 1
            assignment[i] = assignment[predecessor]
        parts: list[list[int]] = [[] for _ in range(len(heads))]
        for i in range(1, rows + 1):
            if assignment[i]:
                parts[assignment[i] - 1].append(i - 1)
        return parts

    col_parts = read_side(sigma.images, n, m)
    rotated = tuple(size + 1 - sigma.images[size - i] for i in range(1, size + 1))
    row_parts = read_side(rotated, m, n)
    if len(col_parts) != len(row_parts):
        raise AssertionError("side chain counts disagree")
    pair = TuplePair(
        tuple(tuple(part) for part in col_parts),
        tuple(tuple(part) for part in row_parts),
    )
    return tuples_to_matrix(pair, m, n)


def count_bounded_permutations(
    m: int, n: int, limit: int = DEFAULT_PERMUTATION_LIMIT
) -> int:
    """Brute-force count of permutations with displacements in [-n, m]."""
    if m < 1 or n < 1:
        raise ValueError("dimensions must be at least 1")
    if m + n > limit:
        raise EnumerationLimitError(f"m + n = {m + n} exceeds limit {limit}")
    count = 0
    for perm in itertools.permutations(range(1, m + n + 1)):
        if all(-n <= image - i <= m for i, image in enumerate(perm, start=1)):
            count += 1
    return count
