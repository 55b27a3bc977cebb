"""Weak lonesum decisions: pruned search, alternating cycles, and the known
forbidden families.

A matrix is weakly lonesum when no other matrix shares its row and column
structure vectors.  The decision procedure is a backtracking search over row
fillings with column-demand pruning; a returned witness is always the
lexicographically least alternative.  Alternating cycles give cheap
certificates of non-uniqueness, and the module carries the standard
forbidden examples: the 5-ary family M^n and two ternary matrices with
their alternative fillings.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .matrix import QMatrix, structure_profile, submatrix

DEFAULT_BUDGET = 10**8


class WeakStatus(Enum):
    UNIQUE = "unique"
    WITNESS = "witness"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class WeakVerdict:
    status: WeakStatus
    witness: QMatrix | None
    nodes: int


@dataclass(frozen=True)
class Cycle:
    """An alternating two-symbol cycle: consecutive cells share a line,
    no three consecutive cells share one, values alternate, and the
    conditions keep holding around the wrap."""

    cells: tuple[tuple[int, int], ...]
    values: tuple[int, ...]
    symbols: tuple[int, int]


@dataclass(frozen=True)
class SmallForbidden:
    """Handle to a 2x2, 2x3 or 3x2 submatrix that is not weakly lonesum."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matrix: QMatrix


@lru_cache(maxsize=None)
def _row_arrangements(multiset: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Distinct permutations of a sorted value tuple, lexicographically."""
    values = sorted(set(multiset))
    counts = {v: multiset.count(v) for v in values}
    out: list[tuple[int, ...]] = []
    row: list[int] = []

    def build() -> None:
        if len(row) == len(multiset):
            out.append(tuple(row))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                row.append(v)
                build()
                row.pop()
                counts[v] += 1

    build()
    return tuple(out)


def is_weak_lonesum(matrix: QMatrix, budget: int = DEFAULT_BUDGET) -> WeakVerdict:
    """Search for a different matrix with the same structure profile.

    Rows are filled top-down; candidates for each row are the distinct
    permutations of that row's fixed multiset in lexicographic order, so the
    first alternative found is the lexicographically least one.  A branch is
    cut as soon as some column demands more of a symbol than it has seen or
    than the remaining rows can still deliver.  Each attempted row placement
    costs one node against the budget.
    """
    m, n, q = matrix.m, matrix.n, matrix.q
    profile = structure_profile(matrix)
    need = [list(col) for col in profile.col_structs]  # need[j][v]
    candidates = [_row_arrangements(tuple(sorted(row))) for row in matrix.entries]
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def place(row: tuple[int, ...]) -> int:
        """Apply a row to the column demands; undo and report on violation."""
        for j, v in enumerate(row):
            if need[j][v] == 0:
                for p in range(j):
                    need[p][row[p]] += 1
                return -1
            need[j][v] -= 1
        return 0

    def unplace(row: tuple[int, ...]) -> None:
        for j, v in enumerate(row):
            need[j][v] += 1

    def feasible(rows_left: int) -> bool:
        for j in range(n):
            for v in range(q):
                if need[j][v] > rows_left:
                    return False
        return True

    def search(depth: int) -> QMatrix | None:
        nonlocal nodes
        if depth == m:
            entries = tuple(chosen)
            if entries != matrix.entries:
                return QMatrix(q, entries)
            return None
        for row in candidates[depth]:
            nodes += 1
            if nodes > budget:
                raise _BudgetExhausted
            if place(row) < 0:
                continue
            if feasible(m - depth - 1):
                chosen.append(row)
                found = search(depth + 1)
                chosen.pop()
                if found is not None:
                    unplace(row)
                    return found
            unplace(row)
        return None

    try:
        witness = search(0)
    except _BudgetExhausted:
        return WeakVerdict(WeakStatus.BUDGET_EXCEEDED, None, nodes)
    if witness is None:
        return WeakVerdict(WeakStatus.UNIQUE, None, nodes)
    return WeakVerdict(WeakStatus.WITNESS, witness, nodes)


class _BudgetExhausted(Exception):
    pass


def _path_conditions(matrix: QMatrix, cells: tuple[tuple[int, int], ...]) -> bool:
    """Shared lines, no three in a line, and alternating values."""
    if len(cells) < 2:
        return False
    values = [matrix.entries[r][c] for r, c in cells]
    a, b = values[0], values[1]
    if a == b:
        return False
    if any(values[i] != (a if i % 2 == 0 else b) for i in range(len(values))):
        return False
    for (r1, c1), (r2, c2) in zip(cells, cells[1:]):
        if r1 != r2 and c1 != c2:
            return False
    for i in range(len(cells) - 2):
        rows = {cells[i][0], cells[i + 1][0], cells[i + 2][0]}
        cols = {cells[i][1], cells[i + 1][1], cells[i + 2][1]}
        if len(rows) < 2 or len(cols) < 2:
            return False
    return True


def validate_path(matrix: QMatrix, cells: tuple[tuple[int, int], ...]) -> bool:
    """Conditions for an alternating two-symbol path, without the wrap."""
    if len(set(cells)) != len(cells):
        return False
    return _path_conditions(matrix, cells)


def validate_cycle(matrix: QMatrix, cells: tuple[tuple[int, int], ...]) -> bool:
    """Path conditions extended around the wrap; even length at least 4.

    Only the original cells must be distinct; the wrap revisits the first
    two on purpose.
    """
    if len(cells) < 4 or len(cells) % 2:
        return False
    if len(set(cells)) != len(cells):
        return False
    return _path_conditions(matrix, cells + cells[:2])


def find_cycle(matrix: QMatrix) -> Cycle | None:
    """Depth-first search for an alternating cycle, smallest symbol pair first.

    Only walks that alternate row and column moves can satisfy the no-three-
    in-a-line condition, and a minimal cycle never needs more than two cells
    per line, so the search tracks both and stays tiny.
    """
    entries = matrix.entries
    m, n = matrix.m, matrix.n
    for a in range(matrix.q):
        for b in range(a + 1, matrix.q):
            by_row: list[list[int]] = [[] for _ in range(m)]
            by_col: list[list[int]] = [[] for _ in range(n)]
            count = 0
            for r in range(m):
                for c in range(n):
                    if entries[r][c] in (a, b):
                        by_row[r].append(c)
                        by_col[c].append(r)
                        count += 1
            if count < 4:
                continue
            cycle = _cycle_search(entries, (a, b), by_row, by_col)
            if cycle is not None:
                values = tuple(entries[r][c] for r, c in cycle)
                return Cycle(cycle, values, (a, b))
    return None


def _cycle_search(entries, pair, by_row, by_col):
    a, b = pair

    def extend(path, row_used, col_used, start):
        r, c = path[-1]
        want = a if entries[r][c] == b else b
        horizontal = len(path) % 2 == 1  # odd prefix: next move stays in the row
        if horizontal:
            neighbors = [(r, c2) for c2 in by_row[r] if c2 != c]
        else:
            neighbors = [(r2, c) for r2 in by_col[c] if r2 != r]
        for cell in neighbors:
            if entries[cell[0]][cell[1]] != want:
                continue
            if cell == start:
                # closing move must be vertical and the walk long enough
                if not horizontal and len(path) >= 4:
                    return tuple(path)
                continue
            if cell in path:
                continue
            if row_used.get(cell[0], 0) >= 2 or col_used.get(cell[1], 0) >= 2:
                continue
            row_used[cell[0]] = row_used.get(cell[0], 0) + 1
            col_used[cell[1]] = col_used.get(cell[1], 0) + 1
            path.append(cell)
            found = extend(path, row_used, col_used, start)
            path.pop()
            row_used[cell[0]] -= 1
            col_used[cell[1]] -= 1
            if found is not None:
                return found
        return None

    for r in range(len(by_row)):
        for c in by_row[r]:
            if entries[r][c] != a:
                continue
            start = (r, c)
            found = extend([start], {r: 1}, {c: 1}, start)
            if found is not None:
                return found
    return None


def swap_along_cycle(matrix: QMatrix, cycle: Cycle) -> QMatrix:
    """Exchange the cycle's two symbols on its cells; profiles are preserved."""
    a, b = cycle.symbols
    table = {a: b, b: a}
    grid = [list(row) for row in matrix.entries]
    for r, c in cycle.cells:
        grid[r][c] = table[grid[r][c]]
    return QMatrix(matrix.q, tuple(tuple(row) for row in grid))


def forbidden_family(n: int) -> QMatrix:
    """The 5-ary n x n matrix that is minimally non-weak-lonesum for n >= 3.

    Zero diagonal, ones on the superdiagonal and in the lower-left corner,
    threes above the superdiagonal, fours down the first column, twos filling
    the rest below the diagonal.
    """
    if n < 3:
        raise ValueError("the family starts at 3 x 3")
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                grid[i][j] = 0
            elif j == i + 1 or (i == n - 1 and j == 0):
                grid[i][j] = 1
            elif j == 0:
                grid[i][j] = 4
            elif j - i >= 2:
                grid[i][j] = 3
            else:
                grid[i][j] = 2
    return QMatrix(5, tuple(tuple(row) for row in grid))


def is_minimal_forbidden(matrix: QMatrix, budget: int = DEFAULT_BUDGET) -> bool | None:
    """Not weakly lonesum, while every maximal proper submatrix is.

    Checking the one-row- and one-column-deleted submatrices suffices since
    containment of a non-unique submatrix is monotone.  Returns None when any
    search hits the budget.
    """
    verdict = is_weak_lonesum(matrix, budget)
    if verdict.status is WeakStatus.BUDGET_EXCEEDED:
        return None
    if verdict.status is WeakStatus.UNIQUE:
        return False
    m, n = matrix.m, matrix.n
    parts = []
    if m > 1:
        parts += [
            submatrix(matrix, [r for r in range(m) if r != drop], range(n))
            for drop in range(m)
        ]
    if n > 1:
        parts += [
            submatrix(matrix, range(m), [c for c in range(n) if c != drop])
            for drop in range(n)
        ]
    for part in parts:
        verdict = is_weak_lonesum(part, budget)
        if verdict.status is WeakStatus.BUDGET_EXCEEDED:
            return None
        if verdict.status is WeakStatus.WITNESS:
            return False
    return True


@lru_cache(maxsize=None)
def _small_weak_unique(matrix: QMatrix) -> bool:
    return is_weak_lonesum(matrix).status is WeakStatus.UNIQUE


def small_forbidden_scan(matrix: QMatrix) -> SmallForbidden | None:
    """First 2x2, 2x3 or 3x2 submatrix that is not weakly lonesum, if any."""
    from itertools import combinations

    m, n = matrix.m, matrix.n
    for height, width in ((2, 2), (2, 3), (3, 2)):
        if m < height or n < width:
            continue
        for rows in combinations(range(m), height):
            for cols in combinations(range(n), width):
                sub = submatrix(matrix, rows, cols)
                if not _small_weak_unique(sub):
                    return SmallForbidden(rows, cols, sub)
    return None


def _annotated(q: int, rows) -> tuple[QMatrix, QMatrix]:
    """Build a matrix and its alternative from rows where a trade cell is a
    (value, alternative) pair and every other cell a plain value."""
    base = []
    alt = []
    for row in rows:
        base.append(tuple(v[0] if isinstance(v, tuple) else v for v in row))
        alt.append(tuple(v[1] if isinstance(v, tuple) else v for v in row))
    return QMatrix(q, tuple(base)), QMatrix(q, tuple(alt))


TERNARY_FORBIDDEN_6X6, TERNARY_FORBIDDEN_6X6_ALT = _annotated(
    3,
    (
        ((0, 1), (1, 2), (2, 0), 0, 0, 0),
        (1, 1, (0, 1), 0, 0, (1, 0)),
        (1, 1, (1, 2), (2, 0), (0, 1), 1),
        (1, (2, 1), 2, 2, (1, 2), 1),
        ((1, 2), 2, 2, 2, (2, 0), (0, 1)),
        ((2, 0), 2, 2, (0, 2), 0, 0),
    ),
)

TERNARY_FORBIDDEN_6X9, TERNARY_FORBIDDEN_6X9_ALT = _annotated(
    3,
    (
        (1, (0, 1), (1, 2), (2, 0), 2, 0, 0, 0, 0),
        (1, 1, 1, (0, 2), (2, 1), 0, 0, 0, (1, 0)),
        (1, 1, 1, 2, (1, 2), (2, 0), (0, 1), 0, 1),
        (1, 1, (2, 1), 2, 2, 2, (1, 0), (0, 2), 1),
        ((1, 2), 1, 2, 2, 2, 2, 0, (2, 0), (0, 1)),
        ((2, 1), (1, 0), 2, 2, 2, (0, 2), 0, 0, 0),
    ),
)
