"""Dense matrices over Z[t, t^-1] with exact determinants and minors."""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from .laurent import ONE, ZERO, LaurentPoly, divexact

__all__ = [
    "RingMatrix",
    "det",
    "det_cofactor",
    "minor",
    "jacobi_complementary",
    "complement",
]


def _lp(x) -> LaurentPoly:
    return LaurentPoly.coerce(x)


class RingMatrix:
    """An immutable ``rows x cols`` matrix with :class:`LaurentPoly` entries.

    Zero-row and zero-column shapes are allowed; they stand for the maps to
    and from the zero module.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        data = tuple(_lp(e) for e in entries)
        if len(data) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(data)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("RingMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RingMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RingMatrix":
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RingMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RingMatrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    # -- access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for shape {self.shape}")
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[LaurentPoly, ...]:
        return self._data[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def entries(self) -> tuple[LaurentPoly, ...]:
        return self._data

    def is_zero(self) -> bool:
        return not any(self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- algebra --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return RingMatrix(self.rows, self.cols, [a + b for a, b in zip(self._data, other._data)])

    def __neg__(self) -> "RingMatrix":
        return RingMatrix(self.rows, self.cols, [-a for a in self._data])

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + (-other)

    def scale(self, c) -> "RingMatrix":
        c = _lp(c)
        return RingMatrix(self.rows, self.cols, [c * a for a in self._data])

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self._data, other._data
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for j in range(p):
                acc = ZERO
                for k, x in enumerate(arow):
                    if x:
                        y = b[k * p + j]
                        if y:
                            acc = acc + x * y
                out.append(acc)
        return RingMatrix(n, p, out)

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> "RingMatrix":
        return self.transpose()

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RingMatrix":
        return RingMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def hstack(self, other: "RingMatrix") -> "RingMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return RingMatrix.from_rows([list(self.row(i)) + list(other.row(i)) for i in range(self.rows)],
                                    self.cols + other.cols)

    def map(self, f) -> "RingMatrix":
        return RingMatrix(self.rows, self.cols, [f(a) for a in self._data])

    def det(self) -> LaurentPoly:
        return det(self)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"RingMatrix({self.rows}x{self.cols}: [{body}])"


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def det_cofactor(a: RingMatrix) -> LaurentPoly:
    """Determinant by the Leibniz sum; a slow reference for small matrices."""
    if not a.is_square():
        raise ValueError(f"determinant of non-square {a.shape} matrix")
    n = a.rows
    total = ZERO
    for p in permutations(range(n)):
        term = ONE
        for i in range(n):
            x = a[i, p[i]]
            if not x:
                term = ZERO
                break
            term = term * x
        if term:
            total = total + term if _perm_sign(p) > 0 else total - term
    return total


def _pivot_cost(x: LaurentPoly) -> tuple[int, int]:
    return len(x.coeffs), max(abs(c) for c in x.coeffs)


def det(a: RingMatrix) -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Pivots are chosen anywhere in the remaining block, preferring entries
    with few terms; every division is exact by Sylvester's identity.
    """
    if not a.is_square():
        raise ValueError(f"determinant of non-square {a.shape} matrix")
    n = a.rows
    if n == 0:
        return ONE
    m = [list(a.row(i)) for i in range(n)]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        best = None
        for i in range(k, n):
            row = m[i]
            for j in range(k, n):
                x = row[j]
                if x:
                    cost = _pivot_cost(x)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == (1, 1):
                            break
            if best is not None and best[0] == (1, 1):
                break
        if best is None:
            return ZERO
        _, pi, pj = best
        if pi != k:
            m[k], m[pi] = m[pi], m[k]
            sign = -sign
        if pj != k:
            for row in m:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        piv = m[k][k]
        pivrow = m[k]
        for i in range(k + 1, n):
            row = m[i]
            lead = row[k]
            for j in range(k + 1, n):
                x = piv * row[j]
                if lead and pivrow[j]:
                    x = x - lead * pivrow[j]
                row[j] = divexact(x, prev) if x else ZERO
            row[k] = ZERO
        prev = piv
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def minor(a: RingMatrix, rows: Sequence[int], cols: Sequence[int]) -> LaurentPoly:
    """Determinant of the submatrix on ``rows`` x ``cols`` (taken in increasing order)."""
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    if len(rows) > min(a.rows, a.cols):
        raise ValueError("minor larger than the matrix")
    return det(a.submatrix(sorted(rows), sorted(cols)))


def complement(index_set: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(index_set)
    return tuple(i for i in range(n) if i not in s)


def jacobi_complementary(a: RingMatrix, rows: Sequence[int], cols: Sequence[int]) -> LaurentPoly:
    """``det(A) * (Lambda^r A^-1)[rows, cols]`` without inverting ``A``.

    Jacobi's identity turns this into the complementary minor of ``A`` on
    the rows outside ``cols`` and the columns outside ``rows``, with sign
    ``(-1)^(sum(rows) + sum(cols))``.
    """
    if not a.is_square():
        raise ValueError(f"jacobi_complementary needs a square matrix, got {a.shape}")
    if len(rows) != len(cols):
        raise ValueError("index sets must have equal size")
    n = a.rows
    if any(not 0 <= i < n for i in (*rows, *cols)):
        raise ValueError("index out of range")
    value = minor(a, complement(cols, n), complement(rows, n))
    return -value if (sum(rows) + sum(cols)) % 2 else value
