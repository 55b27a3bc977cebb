"""Strong lonesum decisions, block decomposition, and margin reconstruction.

A matrix is strongly lonesum when it is the only q-ary matrix with its row
and column sums.  Equivalently, every 2x2 submatrix survives the swap test
below, and equivalently again the matrix sorts into the stair standard form.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .matrix import (
    NotLonesumError,
    QMatrix,
    margins,
    standard_form,
)


@dataclass(frozen=True)
class ForbiddenWitness:
    """A 2x2 submatrix that admits a second filling with the same margins."""

    rows: tuple[int, int]
    cols: tuple[int, int]
    values: tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class PartitionPair:
    """Ordered row and column parts describing a stair decomposition.

    ``row_parts[0]`` collects the rows without the top symbol and may be
    empty; ``row_parts[i]`` for i >= 1 holds the rows of the i-th stair,
    widest first.  ``col_parts[0]`` collects the columns the staircase never
    reaches (possibly empty) and ``col_parts[h]`` for h >= 1 the columns
    whose top-symbol run grows with h: a stair row in ``row_parts[i]``
    carries the top symbol exactly on ``col_parts[i] | ... | col_parts[j]``.
    """

    row_parts: tuple[tuple[int, ...], ...]
    col_parts: tuple[tuple[int, ...], ...]

    @property
    def steps(self) -> int:
        return len(self.row_parts) - 1


@dataclass(frozen=True)
class Block:
    """One content block: the cells where symbols 1..q-2 may appear."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: tuple[tuple[int, int, int], ...]  # (row, col, value), nonzero only


@dataclass(frozen=True)
class BlockDecomposition:
    q: int
    m: int
    n: int
    pair: PartitionPair
    blocks: tuple[Block, ...]

    def assemble(self) -> QMatrix:
        """Rebuild the matrix the decomposition was taken from."""
        top = self.q - 1
        grid = [[0] * self.n for _ in range(self.m)]
        row_parts, col_parts = self.pair.row_parts, self.pair.col_parts
        j = self.pair.steps
        for i in range(1, j + 1):
            stair_cols = [c for h in range(i, j + 1) for c in col_parts[h]]
            for r in row_parts[i]:
                for c in stair_cols:
                    grid[r][c] = top
        for block in self.blocks:
            for r, c, value in block.cells:
                grid[r][c] = value
        return QMatrix(self.q, tuple(tuple(row) for row in grid))


def allowed_2x2(q: int, values: Sequence[Sequence[int]]) -> bool:
    """Whether a 2x2 q-ary matrix is alone with its margins.

    For entries ((a, b), (c, d)), adding +1/-1 around the square keeps the
    margins; the matrix is lonesum exactly when neither direction stays
    inside the alphabet.
    """
    (a, b), (c, d) = values
    for value in (a, b, c, d):
        if not 0 <= value < q:
            raise ValueError(f"entry {value!r} outside 0..{q - 1}")
    if min(a, d) >= 1 and max(b, c) <= q - 2:
        return False
    if min(b, c) >= 1 and max(a, d) <= q - 2:
        return False
    return True


def is_strong_lonesum(matrix: QMatrix) -> bool:
    try:
        standard_form(matrix)
    except NotLonesumError:
        return False
    return True


def find_forbidden(matrix: QMatrix) -> ForbiddenWitness | None:
    """First forbidden 2x2 submatrix in lexicographic (i1, i2, j1, j2) order.

    Returns None when the matrix is strongly lonesum.  The scan only runs
    after the fast standard-form test fails.
    """
    if is_strong_lonesum(matrix):
        return None
    entries = matrix.entries
    q = matrix.q
    for i1 in range(matrix.m):
        for i2 in range(i1 + 1, matrix.m):
            for j1 in range(matrix.n):
                for j2 in range(j1 + 1, matrix.n):
                    quad = (
                        (entries[i1][j1], entries[i1][j2]),
                        (entries[i2][j1], entries[i2][j2]),
                    )
                    if not allowed_2x2(q, quad):
                        return ForbiddenWitness((i1, i2), (j1, j2), quad)
    raise AssertionError("non-lonesum matrix without forbidden 2x2")


def block_decomposition(matrix: QMatrix) -> BlockDecomposition:
    """Split a strongly lonesum matrix into its staircase and content blocks.

    The i-th stair's block sits on ``row_parts[i] x col_parts[i-1]``; rows
    without any top symbol keep their content in the corner block under the
    full-height columns ``col_parts[j]``.  Reassembling reproduces the input
    exactly.
    """
    if not is_strong_lonesum(matrix):
        raise NotLonesumError("block decomposition requires a strongly lonesum matrix")
    top = matrix.q - 1
    entries = matrix.entries
    row_counts = [sum(1 for v in row if v == top) for row in entries]
    col_counts = [sum(1 for row in entries if row[c] == top) for c in range(matrix.n)]

    width_classes = sorted({w for w in row_counts if w > 0}, reverse=True)
    j = len(width_classes)
    row_parts = [tuple(r for r, w in enumerate(row_counts) if w == 0)]
    row_parts += [
        tuple(r for r, w in enumerate(row_counts) if w == width)
        for width in width_classes
    ]
    cover_classes = sorted({c for c in col_counts if c > 0})
    if len(cover_classes) != j:  # guaranteed for lonesum input
        raise AssertionError("stair row and column class counts disagree")
    col_parts = [tuple(c for c, w in enumerate(col_counts) if w == 0)]
    col_parts += [
        tuple(c for c, w in enumerate(col_counts) if w == cover)
        for cover in cover_classes
    ]
    pair = PartitionPair(tuple(row_parts), tuple(col_parts))

    def content(rows: tuple[int, ...], cols: tuple[int, ...]) -> Block:
        cells = tuple(
            (r, c, entries[r][c]) for r in rows for c in cols if entries[r][c]
        )
        return Block(rows, cols, cells)

    blocks = [content(row_parts[i], col_parts[i - 1]) for i in range(1, j + 1)]
    if j >= 1:
        if row_parts[0]:
            blocks.append(content(row_parts[0], col_parts[j]))
    elif any(any(row) for row in entries):
        blocks.append(content(row_parts[0], col_parts[0]))
    return BlockDecomposition(matrix.q, matrix.m, matrix.n, pair, tuple(blocks))


class Reconstruction(Enum):
    """Non-matrix outcomes of margin reconstruction."""

    AMBIGUOUS = "ambiguous"
    INFEASIBLE = "infeasible"


def margins_feasible(q: int, row_sums: Sequence[int], col_sums: Sequence[int]) -> bool:
    """Bounded-entry Gale-Ryser dominance test.

    Some matrix with entries at most q-1 realizes the margins iff the totals
    agree and every k heaviest columns can be covered: sum of their demands
    never exceeds sum_i min(r_i, k*(q-1)).
    """
    m, n = len(row_sums), len(col_sums)
    bound = q - 1
    if any(r < 0 or r > n * bound for r in row_sums):
        return False
    if any(c < 0 or c > m * bound for c in col_sums):
        return False
    if sum(row_sums) != sum(col_sums):
        return False
    heavy = sorted(col_sums, reverse=True)
    demand = 0
    for k, c in enumerate(heavy, start=1):
        demand += c
        if demand > sum(min(r, k * bound) for r in row_sums):
            return False
    return True


def _realize(q: int, row_sums: Sequence[int], col_sums: Sequence[int]) -> QMatrix:
    """Build one realization of feasible margins.

    Columns are processed heaviest first; each column saturates the rows with
    the largest remaining demand.  This is the constructive half of the
    dominance criterion, so it never gets stuck on feasible input.
    """
    m, n = len(row_sums), len(col_sums)
    bound = q - 1
    remaining = list(row_sums)
    grid = [[0] * n for _ in range(m)]
    for c in sorted(range(n), key=lambda j: -col_sums[j]):
        need = col_sums[c]
        for r in sorted(range(m), key=lambda i: -remaining[i]):
            if need == 0:
                break
            give = min(bound, remaining[r], need)
            grid[r][c] = give
            remaining[r] -= give
            need -= give
        if need:
            raise AssertionError("greedy fill failed on feasible margins")
    return QMatrix(q, tuple(tuple(row) for row in grid))


def reconstruct_strong(
    q: int, row_sums: Sequence[int], col_sums: Sequence[int]
) -> QMatrix | Reconstruction:
    """Recover the unique matrix with the given margins, if there is one.

    Returns the matrix when exactly one realization exists, otherwise
    ``Reconstruction.AMBIGUOUS`` (two or more) or ``Reconstruction.INFEASIBLE``
    (none).  A lonesum realization is by definition the only realization, so
    building any realization and checking it is lonesum decides uniqueness
    without enumeration.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    row_sums = tuple(row_sums)
    col_sums = tuple(col_sums)
    if not row_sums or not col_sums:
        raise ValueError("margins must be nonempty")
    if any(not isinstance(s, int) for s in (*row_sums, *col_sums)):
        raise ValueError("margins must be integers")
    if not margins_feasible(q, row_sums, col_sums):
        return Reconstruction.INFEASIBLE
    candidate = _realize(q, row_sums, col_sums)
    if margins(candidate) != (row_sums, col_sums):
        raise AssertionError("realization does not match requested margins")
    if is_strong_lonesum(candidate):
        return candidate
    return Reconstruction.AMBIGUOUS
