"""Brute-force reference implementations.

Everything in this module enumerates the full matrix space and decides
lonesum-ness by definition (grouping by margins or structure profiles), so it
is exact and slow.  It exists to cross-check the closed formulas and the
structural criteria elsewhere in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .matrix import QMatrix, margins, structure_profile
from .strong import is_strong_lonesum

DEFAULT_LIMIT = 2**24


class EnumerationLimitError(ValueError):
    """The requested enumeration exceeds the configured size limit."""


@dataclass(frozen=True)
class EnumerationReport:
    q: int
    m: int
    n: int
    total: int
    lonesum: int
    kind: str  # "strong" | "weak" | "symmetric"


def _check_limit(space: int, limit: int) -> None:
    if space > limit:
        raise EnumerationLimitError(
            f"enumeration space {space} exceeds limit {limit}"
        )


def enumerate_matrices(q: int, m: int, n: int, limit: int = DEFAULT_LIMIT):
    """Yield every q-ary m x n matrix, in lexicographic entry order."""
    _check_limit(q ** (m * n), limit)
    for flat in itertools.product(range(q), repeat=m * n):
        entries = tuple(flat[i * n : (i + 1) * n] for i in range(m))
        yield QMatrix(q, entries)


def count_strong(q: int, m: int, n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Number of matrices that are alone in their margin class."""
    _check_limit(q ** (m * n), limit)
    classes: dict[tuple, int] = {}
    for matrix in enumerate_matrices(q, m, n, limit):
        key = margins(matrix)
        classes[key] = classes.get(key, 0) + 1
    return sum(1 for size in classes.values() if size == 1)


def count_weak(q: int, m: int, n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Number of matrices that are alone in their structure-profile class."""
    _check_limit(q ** (m * n), limit)
    classes: dict[tuple, int] = {}
    for matrix in enumerate_matrices(q, m, n, limit):
        key = structure_profile(matrix)
        classes[key] = classes.get(key, 0) + 1
    return sum(1 for size in classes.values() if size == 1)


def symmetric_matrices(q: int, n: int, limit: int = DEFAULT_LIMIT):
    """Yield every symmetric q-ary n x n matrix via its upper triangle."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    _check_limit(q ** len(cells), limit)
    for values in itertools.product(range(q), repeat=len(cells)):
        grid = [[0] * n for _ in range(n)]
        for (i, j), value in zip(cells, values):
            grid[i][j] = value
            grid[j][i] = value
        yield QMatrix(q, tuple(tuple(row) for row in grid))


def count_symmetric(q: int, n: int, limit: int = DEFAULT_LIMIT) -> int:
    """Number of symmetric matrices that are strongly lonesum.

    Decided matrix by matrix with the structural criterion; the margin
    grouping used by :func:`count_strong` would give the same answer but
    wastes the symmetry.
    """
    return sum(
        1 for matrix in symmetric_matrices(q, n, limit) if is_strong_lonesum(matrix)
    )


def margin_class(matrix: QMatrix, limit: int = DEFAULT_LIMIT) -> list[QMatrix]:
    """All matrices sharing the margins of the given one, itself included."""
    target = margins(matrix)
    return [
        other
        for other in enumerate_matrices(matrix.q, matrix.m, matrix.n, limit)
        if margins(other) == target
    ]


def profile_class(matrix: QMatrix, limit: int = DEFAULT_LIMIT) -> list[QMatrix]:
    """All matrices sharing the structure profile of the given one."""
    target = structure_profile(matrix)
    return [
        other
        for other in enumerate_matrices(matrix.q, matrix.m, matrix.n, limit)
        if structure_profile(other) == target
    ]


def report(
    q: int, m: int, n: int, kind: str = "strong", limit: int = DEFAULT_LIMIT
) -> EnumerationReport:
    if kind == "strong":
        count = count_strong(q, m, n, limit)
        total = q ** (m * n)
    elif kind == "weak":
        count = count_weak(q, m, n, limit)
        total = q ** (m * n)
    elif kind == "symmetric":
        if m != n:
            raise ValueError("symmetric enumeration needs m == n")
        count = count_symmetric(q, n, limit)
        total = q ** (n * (n + 1) // 2)
    else:
        raise ValueError(f"unknown enumeration kind {kind!r}")
    return EnumerationReport(q, m, n, total, count, kind)
