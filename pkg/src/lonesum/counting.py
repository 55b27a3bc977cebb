"""Closed-form counting: Stirling numbers, poly-Bernoulli numbers, and the
lonesum matrix counts they specialize to.  All arithmetic is exact."""

from __future__ import annotations

import math
import threading
from functools import lru_cache
from typing import Iterator

_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of an n-set into k blocks."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if k > n:
        return 0
    if len(_stirling_rows) <= n:
        with _stirling_lock:
            while len(_stirling_rows) <= n:
                prev = _stirling_rows[-1]
                size = len(_stirling_rows)
                row = [0] * (size + 1)
                for j in range(1, size):
                    row[j] = j * prev[j] + prev[j - 1]
                row[size] = 1
                _stirling_rows.append(row)
    return _stirling_rows[n][k]


def poly_bernoulli_inclusion_exclusion(m: int, n: int) -> int:
    """Count of binary lonesum m x n matrices by inclusion-exclusion."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    return sum(
        (-1) ** (l + m) * math.factorial(l) * stirling2(m, l) * (l + 1) ** n
        for l in range(m + 1)
    )


def poly_bernoulli_stirling_pair(m: int, n: int) -> int:
    """Same count via paired Stirling numbers; symmetric in m and n."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    return sum(
        math.factorial(l) ** 2 * stirling2(m + 1, l + 1) * stirling2(n + 1, l + 1)
        for l in range(min(m, n) + 1)
    )


def stairs_count(m: int, n: int, j: int) -> int:
    """Binary lonesum m x n matrices whose staircase has exactly j+1 stairs."""
    if j < 0:
        raise ValueError("stair index must be nonnegative")
    return math.factorial(j) ** 2 * stirling2(m + 1, j + 1) * stirling2(n + 1, j + 1)


def compositions(l: int, j: int) -> Iterator[tuple[int, ...]]:
    """All (l_0, ..., l_j) with l_0 >= 0, l_i >= 1 and total l, lexicographically."""
    if l < 1 or j < 1:
        raise ValueError("compositions need l >= 1 and j >= 1")

    def tail(total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(1, total - parts + 2):
            for rest in tail(total - first, parts - 1):
                yield (first, *rest)

    for head in range(l - j + 1):
        for rest in tail(l - head, j):
            yield (head, *rest)


@lru_cache(maxsize=None)
def block_fillings(q: int, r: int, s: int) -> int:
    """Ways to place symbols 1..q-2 inside an r x s content block.

    The nonzero symbols must occupy a single row or a single column of the
    block: nothing, one cell, at least two cells of one column, or at least
    two cells of one row.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if r < 1 or s < 1:
        raise ValueError("block sides must be at least 1")
    inner = q - 2
    return (
        1
        + inner * r * s
        + r * ((q - 1) ** s - inner * s - 1)
        + s * ((q - 1) ** r - inner * r - 1)
    )


@lru_cache(maxsize=None)
def _multinomial(total: int, parts: tuple[int, ...]) -> int:
    value = math.factorial(total)
    for part in parts:
        value //= math.factorial(part)
    return value


def count_lonesum(q: int, m: int, n: int) -> int:
    """Number of q-ary strongly lonesum m x n matrices.

    Sums over the number of stairs j and the ordered part sizes on each side;
    each stair contributes one content block counted by
    :func:`block_fillings`.  Degenerate dimensions count the empty matrix.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    if m == 0 or n == 0:
        return 1
    total = 1
    for j in range(1, min(m, n) + 1):
        row_comps = [(c, _multinomial(m, c)) for c in compositions(m, j)]
        col_comps = [(c, _multinomial(n, c)) for c in compositions(n, j)]
        for mc, m_ways in row_comps:
            for nc, n_ways in col_comps:
                product = m_ways * n_ways
                for i in range(1, j + 1):
                    product *= block_fillings(q, mc[i], nc[j + 1 - i])
                total += product
    return total


def count_symmetric_lonesum(q: int, n: int) -> int:
    """Number of q-ary symmetric strongly lonesum n x n matrices.

    One ordered partition drives both sides.  Stair parts pair up into
    off-diagonal content blocks (mirrored, so each pair is counted once);
    when the step count is odd the middle part meets itself on the diagonal,
    where symmetry allows at most one nonzero cell.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if n == 0:
        return 1
    total = 1
    for j in range(1, n + 1):
        for comp in compositions(n, j):
            ways = _multinomial(n, comp)
            for i in range(1, j // 2 + 1):
                ways *= block_fillings(q, comp[2 * i - 1], comp[2 * i])
            leftover = n - sum(comp[i] for i in range(2 * (j // 2) + 1))
            ways *= 1 + (q - 2) * leftover
            total += ways
    return total
