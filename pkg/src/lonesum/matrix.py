"""Dense q-ary matrices and the profile machinery shared by the whole package.

Everything here is an immutable value: operations return new objects, so
instances can be shared freely between threads and enumeration loops without
defensive copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence


class MatrixFormatError(ValueError):
    """Malformed matrix text."""


class NotLonesumError(ValueError):
    """The matrix is not strongly lonesum, so the requested form does not exist."""


@dataclass(frozen=True)
class QMatrix:
    """An m-by-n matrix with entries drawn from {0, ..., q-1}.

    Empty matrices are rejected; entries are validated at construction so the
    rest of the package never re-checks ranges.
    """

    q: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"alphabet size must be at least 2, got {self.q}")
        rows = tuple(tuple(row) for row in self.entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("rows must all have the same length")
            for value in row:
                if not isinstance(value, int) or not 0 <= value < self.q:
                    raise ValueError(f"entry {value!r} outside 0..{self.q - 1}")
        object.__setattr__(self, "entries", rows)

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> QMatrix:
        return QMatrix(self.q, tuple(zip(*self.entries)))


class MarginProfile(NamedTuple):
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]


class StructureProfile(NamedTuple):
    row_structs: tuple[tuple[int, ...], ...]
    col_structs: tuple[tuple[int, ...], ...]


class StandardForm(NamedTuple):
    """Row/column permutations and the canonical matrix they produce.

    ``canon.entries[i][j] == original.entries[row_perm[i]][col_perm[j]]``.
    """

    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    canon: QMatrix


def structure_vector(values: Sequence[int], q: int) -> tuple[int, ...]:
    """Histogram of symbol multiplicities: result[v] counts occurrences of v."""
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    counts = [0] * q
    for value in values:
        if not 0 <= value < q:
            raise ValueError(f"symbol {value!r} outside 0..{q - 1}")
        counts[value] += 1
    return tuple(counts)


def margins(matrix: QMatrix) -> MarginProfile:
    row_sums = tuple(sum(row) for row in matrix.entries)
    col_sums = tuple(sum(col) for col in zip(*matrix.entries))
    return MarginProfile(row_sums, col_sums)


def structure_profile(matrix: QMatrix) -> StructureProfile:
    q = matrix.q
    rows = tuple(structure_vector(row, q) for row in matrix.entries)
    cols = tuple(structure_vector(col, q) for col in zip(*matrix.entries))
    return StructureProfile(rows, cols)


def _check_permutation(perm: Sequence[int], size: int, what: str) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(size)):
        raise ValueError(f"{what} is not a permutation of 0..{size - 1}: {perm!r}")
    return perm


def permute(matrix: QMatrix, row_perm: Sequence[int], col_perm: Sequence[int]) -> QMatrix:
    """Reorder rows and columns: result[i][j] = matrix[row_perm[i]][col_perm[j]]."""
    row_perm = _check_permutation(row_perm, matrix.m, "row permutation")
    col_perm = _check_permutation(col_perm, matrix.n, "column permutation")
    entries = tuple(
        tuple(matrix.entries[ri][cj] for cj in col_perm) for ri in row_perm
    )
    return QMatrix(matrix.q, entries)


def swap_values(matrix: QMatrix, a: int, b: int) -> QMatrix:
    """Exchange two symbols everywhere in the matrix."""
    for symbol in (a, b):
        if not 0 <= symbol < matrix.q:
            raise ValueError(f"symbol {symbol!r} outside 0..{matrix.q - 1}")
    table = {a: b, b: a}
    entries = tuple(
        tuple(table.get(value, value) for value in row) for row in matrix.entries
    )
    return QMatrix(matrix.q, entries)


def submatrix(matrix: QMatrix, rows: Sequence[int], cols: Sequence[int]) -> QMatrix:
    """Restriction to the given row and column indices, kept in the given order."""
    entries = tuple(tuple(matrix.entries[r][c] for c in cols) for r in rows)
    return QMatrix(matrix.q, entries)


def _is_standard(entries: tuple[tuple[int, ...], ...], q: int) -> bool:
    """Check the stair/block structure of a row- and column-sorted matrix.

    A strongly lonesum matrix in sorted order consists of a staircase of the
    top symbol q-1, one content block per stair step just right of the step
    (plus a corner block under the full-height columns for stair-less rows),
    and zeros elsewhere; inside each block the nonzero symbols, all at most
    q-2, sit in a single row or a single column.  Entrywise monotonicity is
    necessary but not sufficient once q exceeds 2, which is why the block
    structure is verified instead.
    """
    m, n = len(entries), len(entries[0])
    top = q - 1
    widths = []
    for row in entries:
        w = 0
        while w < n and row[w] == top:
            w += 1
        if top in row[w:]:
            return False
        widths.append(w)
    for i in range(m - 1):
        if widths[i] < widths[i + 1]:
            return False
    # (rows, band_lo, band_hi): nonzeros confined to columns [band_lo, band_hi)
    blocks: list[tuple[range, int, int]] = []
    start = 0
    prev = n
    while start < m and widths[start] > 0:
        stop = start
        while stop < m and widths[stop] == widths[start]:
            stop += 1
        blocks.append((range(start, stop), widths[start], prev))
        prev = widths[start]
        start = stop
    blocks.append((range(start, m), 0, prev))
    for rows, lo, hi in blocks:
        cells = [(r, c) for r in rows for c in range(lo, hi) if entries[r][c]]
        if len(cells) > 1:
            if len({r for r, _ in cells}) > 1 and len({c for _, c in cells}) > 1:
                return False
        for r in rows:
            if any(entries[r][c] for c in range(hi, n)):
                return False
    return True


def standard_form(matrix: QMatrix) -> StandardForm:
    """Sort rows and columns into the canonical stair shape.

    Rows are ordered by descending count of the top symbol, then descending
    row sum, ties kept in original order; columns likewise.  Raises
    :class:`NotLonesumError` when no such arrangement exists, which happens
    exactly when the matrix is not strongly lonesum.
    """
    q = matrix.q
    top = q - 1
    entries = matrix.entries

    def row_key(i: int) -> tuple[int, int]:
        row = entries[i]
        return (-sum(1 for v in row if v == top), -sum(row))

    cols = tuple(zip(*entries))

    def col_key(j: int) -> tuple[int, int]:
        col = cols[j]
        return (-sum(1 for v in col if v == top), -sum(col))

    row_perm = tuple(sorted(range(matrix.m), key=row_key))
    col_perm = tuple(sorted(range(matrix.n), key=col_key))
    canon_entries = tuple(
        tuple(entries[ri][cj] for cj in col_perm) for ri in row_perm
    )
    if not _is_standard(canon_entries, q):
        raise NotLonesumError("matrix has no standard form: not strongly lonesum")
    return StandardForm(row_perm, col_perm, QMatrix(q, canon_entries))


def parse_matrix(text: str) -> QMatrix:
    """Read the plain text matrix format: a `q m n` header line, then m rows."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise MatrixFormatError("empty input")
    header = lines[0].split()
    if len(header) != 3:
        raise MatrixFormatError(f"header must be 'q m n', got {lines[0]!r}")
    try:
        q, m, n = (int(part) for part in header)
    except ValueError as exc:
        raise MatrixFormatError(f"non-integer header field in {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise MatrixFormatError(f"expected {m} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise MatrixFormatError(f"expected {n} entries per row, got {line!r}")
        try:
            rows.append(tuple(int(part) for part in parts))
        except ValueError as exc:
            raise MatrixFormatError(f"non-integer entry in {line!r}") from exc
    try:
        return QMatrix(q, tuple(rows))
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def format_matrix(matrix: QMatrix) -> str:
    lines = [f"{matrix.q} {matrix.m} {matrix.n}"]
    lines.extend(" ".join(str(v) for v in row) for row in matrix.entries)
    return "\n".join(lines) + "\n"
