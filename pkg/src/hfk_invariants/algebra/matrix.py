"""Dense matrices over the rational-function field, with exact det / inverse.

Elimination picks, among all still-unused rows and columns, the nonzero entry
with the fewest terms (ties broken by (row, column)), and reduces every entry
after each step.  Sparse monomial pivots are the common case for Fox
Jacobians, and picking them first keeps the entries Laurent polynomials for
as long as possible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..errors import DimensionError, SingularMatrixError
from .laurent import LaurentPolynomial
from .ratfunc import RationalFunction

Entry = RationalFunction


def _as_entry(x, nvars: int) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPolynomial):
        return RationalFunction.from_poly(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunction.constant(x, nvars)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


class FieldMatrix:
    """Immutable rows x cols matrix of :class:`RationalFunction` entries (row-major)."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable, nvars: int):
        entries = tuple(_as_entry(e, nvars) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if e.nvars != nvars:
                raise DimensionError("entry variable count does not match the matrix")
        self.rows = rows
        self.cols = cols
        self.nvars = nvars
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], nvars: int) -> FieldMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionError("ragged rows")
        return cls(r, c, [x for row in rows for x in row], nvars)

    @classmethod
    def identity(cls, n: int, nvars: int) -> FieldMatrix:
        one, zero = RationalFunction.one(nvars), RationalFunction.zero(nvars)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)], nvars)

    @classmethod
    def zeros(cls, rows: int, cols: int, nvars: int) -> FieldMatrix:
        zero = RationalFunction.zero(nvars)
        return cls(rows, cols, [zero] * (rows * cols), nvars)

    def __getitem__(self, ij: tuple[int, int]) -> RationalFunction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[RationalFunction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[RationalFunction]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> FieldMatrix:
        return FieldMatrix(self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.nvars)

    def map(self, fn: Callable[[RationalFunction], RationalFunction], nvars: int | None = None) -> FieldMatrix:
        return FieldMatrix(self.rows, self.cols, [fn(e) for e in self.entries],
                           self.nvars if nvars is None else nvars)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> FieldMatrix:
        return FieldMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols], self.nvars)

    def vstack(self, other: FieldMatrix) -> FieldMatrix:
        if self.cols != other.cols:
            raise DimensionError("column counts differ")
        return FieldMatrix(self.rows + other.rows, self.cols, self.entries + other.entries, self.nvars)

    def __neg__(self) -> FieldMatrix:
        return self.map(lambda e: -e)

    def __add__(self, other: FieldMatrix) -> FieldMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return FieldMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.nvars)

    def __sub__(self, other: FieldMatrix) -> FieldMatrix:
        return self + (-other)

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        zero = RationalFunction.zero(self.nvars)
        out = []
        for i in range(self.rows):
            arow = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(arow):
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return FieldMatrix(self.rows, other.cols, out, self.nvars)

    def scale(self, c) -> FieldMatrix:
        c = _as_entry(c, self.nvars)
        return self.map(lambda e: e * c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def pretty(self, symbol: str = "g") -> str:
        cells = [[e.pretty(symbol) for e in row] for row in self.to_rows()]
        if not cells:
            return "[]"
        width = max(len(c) for row in cells for c in row) if self.cols else 0
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols}, nvars={self.nvars})"


def _choose_pivot(work: list[list[RationalFunction]], rows: Iterable[int], cols: Iterable[int]):
    best = None
    best_size = None
    cols = list(cols)
    for i in rows:
        r = work[i]
        for j in cols:
            e = r[j]
            if e:
                s = e.size()
                if best is None or s < best_size:
                    best, best_size = (i, j), s
                    if s == 1:
                        return best
    return best


def _permutation_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def mat_det(m: FieldMatrix) -> RationalFunction:
    """Exact determinant by fraction-field elimination."""
    if not m.is_square():
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    work = m.to_rows()
    free_rows = list(range(n))
    free_cols = list(range(n))
    det = RationalFunction.one(m.nvars)
    perm = [0] * n
    for step in range(n):
        piv = _choose_pivot(work, free_rows, free_cols)
        if piv is None:
            return RationalFunction.zero(m.nvars)
        pr, pc = piv
        free_rows.remove(pr)
        free_cols.remove(pc)
        perm[pr] = pc
        p = work[pr][pc]
        det = det * p
        pinv = p.inverse()
        prow = work[pr]
        targets = [j for j in free_cols if prow[j]]
        for i in free_rows:
            f = work[i][pc]
            if not f:
                continue
            f = f * pinv
            row = work[i]
            for j in targets:
                row[j] = row[j] - f * prow[j]
            row[pc] = RationalFunction.zero(m.nvars)
    return det if _permutation_sign(perm) > 0 else -det


def mat_solve(m: FieldMatrix, rhs: FieldMatrix) -> FieldMatrix:
    """Solve m X = rhs exactly (Gauss-Jordan with full pivoting)."""
    if not m.is_square():
        raise DimensionError(f"cannot solve with non-square {m.rows}x{m.cols} matrix")
    if rhs.rows != m.rows:
        raise DimensionError("right-hand side has the wrong number of rows")
    n, k = m.rows, rhs.cols
    zero = RationalFunction.zero(m.nvars)
    work = [m.row(i) + rhs.row(i) for i in range(n)]
    free_rows = list(range(n))
    free_cols = list(range(n))
    pivot_row_of_col = [0] * n
    for step in range(n):
        piv = _choose_pivot(work, free_rows, free_cols)
        if piv is None:
            raise SingularMatrixError(step, (free_rows[0], free_cols[0]))
        pr, pc = piv
        free_rows.remove(pr)
        free_cols.remove(pc)
        pivot_row_of_col[pc] = pr
        pinv = work[pr][pc].inverse()
        prow = work[pr]
        active = [j for j in free_cols if prow[j]] + [n + j for j in range(k) if prow[n + j]]
        for j in active:
            prow[j] = prow[j] * pinv
        prow[pc] = RationalFunction.one(m.nvars)
        for i in range(n):
            if i == pr:
                continue
            f = work[i][pc]
            if not f:
                continue
            row = work[i]
            for j in active:
                row[j] = row[j] - f * prow[j]
            row[pc] = zero
    out = []
    for c in range(n):
        out.extend(work[pivot_row_of_col[c]][n:])
    return FieldMatrix(n, k, out, m.nvars)


def mat_inverse(m: FieldMatrix) -> FieldMatrix:
    """Exact inverse; raises :class:`SingularMatrixError` when det = 0."""
    if not m.is_square():
        raise DimensionError(f"inverse of non-square {m.rows}x{m.cols} matrix")
    return mat_solve(m, FieldMatrix.identity(m.rows, m.nvars))
