"""Truncated power series with exact rational coefficients.

Coefficients are stored as ordinary (non-exponential) terms, so products are
plain Cauchy convolutions; the factorial scaling happens only when an EGF
coefficient is extracted.  Orders default to 8, which already pushes counts
past 64 bits and exercises the big-rational paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_ORDER = 8

_Coeffs2 = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class BiSeries:
    """A series in x and y truncated at x^order_x * y^order_y."""

    order_x: int
    order_y: int
    coeffs: _Coeffs2  # coeffs[i][j] multiplies x^i y^j

    @staticmethod
    def zero(order_x: int, order_y: int) -> BiSeries:
        rows = tuple(
            tuple(Fraction(0) for _ in range(order_y + 1)) for _ in range(order_x + 1)
        )
        return BiSeries(order_x, order_y, rows)

    @staticmethod
    def constant(value: int | Fraction, order_x: int, order_y: int) -> BiSeries:
        return BiSeries.zero(order_x, order_y)._set(0, 0, Fraction(value))

    @staticmethod
    def monomial(i: int, j: int, order_x: int, order_y: int) -> BiSeries:
        base = BiSeries.zero(order_x, order_y)
        if i <= order_x and j <= order_y:
            base = base._set(i, j, Fraction(1))
        return base

    def _set(self, i: int, j: int, value: Fraction) -> BiSeries:
        rows = [list(row) for row in self.coeffs]
        rows[i][j] = value
        return BiSeries(self.order_x, self.order_y, tuple(tuple(r) for r in rows))

    def _match(self, other: BiSeries) -> None:
        if (self.order_x, self.order_y) != (other.order_x, other.order_y):
            raise ValueError("truncation orders differ")

    def __add__(self, other: BiSeries) -> BiSeries:
        self._match(other)
        rows = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.coeffs, other.coeffs)
        )
        return BiSeries(self.order_x, self.order_y, rows)

    def __sub__(self, other: BiSeries) -> BiSeries:
        self._match(other)
        rows = tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.coeffs, other.coeffs)
        )
        return BiSeries(self.order_x, self.order_y, rows)

    def __neg__(self) -> BiSeries:
        rows = tuple(tuple(-a for a in row) for row in self.coeffs)
        return BiSeries(self.order_x, self.order_y, rows)

    def scale(self, value: int | Fraction) -> BiSeries:
        factor = Fraction(value)
        rows = tuple(tuple(a * factor for a in row) for row in self.coeffs)
        return BiSeries(self.order_x, self.order_y, rows)

    def __mul__(self, other: BiSeries) -> BiSeries:
        self._match(other)
        nx, ny = self.order_x, self.order_y
        rows = [[Fraction(0)] * (ny + 1) for _ in range(nx + 1)]
        for i, row in enumerate(self.coeffs):
            for j, a in enumerate(row):
                if not a:
                    continue
                for p in range(nx + 1 - i):
                    other_row = other.coeffs[p]
                    for s in range(ny + 1 - j):
                        b = other_row[s]
                        if b:
                            rows[i + p][j + s] += a * b
        return BiSeries(nx, ny, tuple(tuple(r) for r in rows))

    def is_zero(self) -> bool:
        return all(not c for row in self.coeffs for c in row)

    def valuation(self) -> int:
        """Smallest total degree with a nonzero coefficient; large if zero."""
        best = self.order_x + self.order_y + 1
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c and i + j < best:
                    best = i + j
        return best

    def reciprocal(self) -> BiSeries:
        """Multiplicative inverse; requires a nonzero constant term."""
        c00 = self.coeffs[0][0]
        if not c00:
            raise ValueError("reciprocal needs a nonzero constant term")
        nx, ny = self.order_x, self.order_y
        inv = [[Fraction(0)] * (ny + 1) for _ in range(nx + 1)]
        inv[0][0] = 1 / c00
        for total in range(1, nx + ny + 1):
            for i in range(min(total, nx), -1, -1):
                j = total - i
                if j > ny:
                    continue
                acc = Fraction(0)
                for p in range(i + 1):
                    for s in range(j + 1):
                        if p == i and s == j:
                            continue
                        a = self.coeffs[i - p][j - s]
                        if a:
                            acc += a * inv[p][s]
                inv[i][j] = -acc / c00
        return BiSeries(nx, ny, tuple(tuple(r) for r in inv))

    def exp(self) -> BiSeries:
        """Exponential of a series with zero constant term."""
        if self.coeffs[0][0]:
            raise ValueError("exp needs a zero constant term")
        result = BiSeries.constant(1, self.order_x, self.order_y)
        power = BiSeries.constant(1, self.order_x, self.order_y)
        limit = self.order_x + self.order_y
        for l in range(1, limit + 1):
            power = power * self
            if power.is_zero():
                break
            result = result + power.scale(Fraction(1, math.factorial(l)))
        return result

    def substitute_diagonal(self) -> UniSeries:
        """Set y := x, producing a single-variable series of the same order."""
        order = max(self.order_x, self.order_y)
        out = [Fraction(0)] * (order + 1)
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c and i + j <= order:
                    out[i + j] += c
        return UniSeries(order, tuple(out))

    def egf(self, i: int, j: int) -> Fraction:
        """Coefficient of x^i y^j / (i! j!)."""
        return self.coeffs[i][j] * math.factorial(i) * math.factorial(j)


@dataclass(frozen=True)
class UniSeries:
    """A single-variable series truncated at x^order."""

    order: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def zero(order: int) -> UniSeries:
        return UniSeries(order, tuple(Fraction(0) for _ in range(order + 1)))

    @staticmethod
    def constant(value: int | Fraction, order: int) -> UniSeries:
        return UniSeries(order, (Fraction(value),) + tuple(Fraction(0) for _ in range(order)))

    @staticmethod
    def monomial(i: int, order: int) -> UniSeries:
        coeffs = [Fraction(0)] * (order + 1)
        if i <= order:
            coeffs[i] = Fraction(1)
        return UniSeries(order, tuple(coeffs))

    @staticmethod
    def exp_linear(rate: int | Fraction, order: int) -> UniSeries:
        """The series of e^(rate * x)."""
        factor = Fraction(rate)
        return UniSeries(
            order,
            tuple(factor**k / math.factorial(k) for k in range(order + 1)),
        )

    def _match(self, other: UniSeries) -> None:
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other: UniSeries) -> UniSeries:
        self._match(other)
        return UniSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: UniSeries) -> UniSeries:
        self._match(other)
        return UniSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> UniSeries:
        return UniSeries(self.order, tuple(-a for a in self.coeffs))

    def scale(self, value: int | Fraction) -> UniSeries:
        factor = Fraction(value)
        return UniSeries(self.order, tuple(a * factor for a in self.coeffs))

    def __mul__(self, other: UniSeries) -> UniSeries:
        self._match(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for p in range(self.order + 1 - i):
                b = other.coeffs[p]
                if b:
                    out[i + p] += a * b
        return UniSeries(self.order, tuple(out))

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def reciprocal(self) -> UniSeries:
        c0 = self.coeffs[0]
        if not c0:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv = [Fraction(0)] * (self.order + 1)
        inv[0] = 1 / c0
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for p in range(k):
                a = self.coeffs[k - p]
                if a:
                    acc += a * inv[p]
            inv[k] = -acc / c0
        return UniSeries(self.order, tuple(inv))

    def exp(self) -> UniSeries:
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        result = UniSeries.constant(1, self.order)
        power = UniSeries.constant(1, self.order)
        for l in range(1, self.order + 1):
            power = power * self
            if power.is_zero():
                break
            result = result + power.scale(Fraction(1, math.factorial(l)))
        return result

    def egf(self, i: int) -> Fraction:
        """Coefficient of x^i / i!."""
        return self.coeffs[i] * math.factorial(i)


def _exp_xy(a: int, b: int, order_x: int, order_y: int) -> BiSeries:
    """The series of e^(a*x + b*y)."""
    rows = tuple(
        tuple(
            Fraction(a) ** i / math.factorial(i) * Fraction(b) ** j / math.factorial(j)
            for j in range(order_y + 1)
        )
        for i in range(order_x + 1)
    )
    return BiSeries(order_x, order_y, rows)


def block_fillings_egf(
    q: int, order_x: int = DEFAULT_ORDER, order_y: int = DEFAULT_ORDER
) -> BiSeries:
    """Bivariate EGF whose (r, s) coefficient counts r x s block contents.

    Closed form: 1 - e^x - e^y + (1 - x - y - (q-2)xy) e^(x+y)
    + x e^(x + (q-1)y) + y e^((q-1)x + y).
    """
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    nx, ny = order_x, order_y
    one = BiSeries.constant(1, nx, ny)
    x = BiSeries.monomial(1, 0, nx, ny)
    y = BiSeries.monomial(0, 1, nx, ny)
    xy = BiSeries.monomial(1, 1, nx, ny)
    res = (
        one
        - _exp_xy(1, 0, nx, ny)
        - _exp_xy(0, 1, nx, ny)
        + (one - x - y - xy.scale(q - 2)) * _exp_xy(1, 1, nx, ny)
        + x * _exp_xy(1, q - 1, nx, ny)
        + y * _exp_xy(q - 1, 1, nx, ny)
    )
    return res


def lonesum_egf(
    q: int, order_x: int = DEFAULT_ORDER, order_y: int = DEFAULT_ORDER
) -> BiSeries:
    """EGF of q-ary lonesum counts: e^(x+y) / (1 - F) with F the block EGF."""
    one = BiSeries.constant(1, order_x, order_y)
    blocks = block_fillings_egf(q, order_x, order_y)
    return _exp_xy(1, 1, order_x, order_y) * (one - blocks).reciprocal()


def poly_bernoulli_egf(
    order_x: int = DEFAULT_ORDER, order_y: int = DEFAULT_ORDER
) -> BiSeries:
    """EGF of the binary counts: e^(x+y) / (e^x + e^y - e^(x+y))."""
    denom = (
        _exp_xy(1, 0, order_x, order_y)
        + _exp_xy(0, 1, order_x, order_y)
        - _exp_xy(1, 1, order_x, order_y)
    )
    return _exp_xy(1, 1, order_x, order_y) * denom.reciprocal()


def symmetric_lonesum_egf(q: int, order: int = DEFAULT_ORDER) -> UniSeries:
    """EGF of symmetric q-ary lonesum counts: (1 + (q-2)x) e^(2x) / (1 - F(x, x))."""
    diagonal = block_fillings_egf(q, order, order).substitute_diagonal()
    one = UniSeries.constant(1, order)
    front = one + UniSeries.monomial(1, order).scale(q - 2)
    return front * UniSeries.exp_linear(2, order) * (one - diagonal).reciprocal()


def fixed_column_series(q: int, cols: int, order: int = DEFAULT_ORDER) -> UniSeries:
    """EGF in the row count with the column count fixed.

    Expands 1/(1 - F) into powers of F's four summands and extracts the
    y-coefficient of order ``cols`` in closed form.  Only finitely many
    exponent tuples survive the truncation: the four base series have
    valuations 1, 2, 2 and 1, and the third exponent is capped by ``cols``.
    The coefficient of x^n / n! equals the number of q-ary lonesum
    n x cols matrices.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if cols < 0:
        raise ValueError("column count must be nonnegative")
    one = UniSeries.constant(1, order)
    x = UniSeries.monomial(1, order)
    e1 = UniSeries.exp_linear(1, order)
    base1 = one - e1                      # valuation 1
    base2 = e1 - one - x * e1             # valuation 2
    base3 = UniSeries.exp_linear(q - 2, order) - one - x.scale(q - 2)  # valuation 2
    if q == 2:
        base3 = UniSeries.zero(order)

    def powers(base: UniSeries, count: int) -> list[UniSeries]:
        out = [one]
        for _ in range(count):
            out.append(out[-1] * base)
        return out

    pow1 = powers(base1, order)
    pow2 = powers(base2, order // 2)
    pow3 = powers(base3, min(cols, order // 2 if q > 2 else 0))
    exp_cache = {rate: UniSeries.exp_linear(rate, order) for rate in range(1, order + cols + 3)}

    total = UniSeries.zero(order)
    for l3 in range(len(pow3)):
        for l2 in range(len(pow2)):
            for l1 in range(len(pow1)):
                for l4 in range(order + 1):
                    if l1 + 2 * l2 + 2 * l3 + l4 > order and q > 2:
                        break
                    if l1 + 2 * l2 + l4 > order:
                        break
                    l = l1 + l2 + l3 + l4
                    ways = (
                        math.factorial(l)
                        // math.factorial(l1)
                        // math.factorial(l2)
                        // math.factorial(l3)
                        // math.factorial(l4)
                    )
                    ways *= math.factorial(cols) // math.factorial(cols - l3)
                    ways *= (l2 + l3 + (q - 1) * l4 + 1) ** (cols - l3)
                    rate = l3 + l4 + 1
                    term = pow1[l1] * pow2[l2]
                    if l3:
                        term = term * pow3[l3]
                    if l4:
                        term = term * UniSeries.monomial(l4, order)
                    term = term * exp_cache[rate]
                    total = total + term.scale(ways)
    return total
