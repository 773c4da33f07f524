"""Exterior powers of free Z[t, t^-1]-modules.

Basis elements of ``Lambda^r R^n`` are indexed by strictly increasing tuples
of 0-based indices, ordered lexicographically.  That is also the row and
column order of every matrix built here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping

from .laurent import ONE, ZERO, LaurentPoly
from .matrix import RingMatrix, minor

__all__ = [
    "IndexSet",
    "index_sets",
    "check_index_set",
    "wedge_sign",
    "ExteriorElement",
    "wedge",
    "exterior_power_matrix",
    "contract",
    "duality_d",
    "duality_d_inverse",
]

IndexSet = tuple[int, ...]


def index_sets(n: int, r: int) -> list[IndexSet]:
    """All ``r``-subsets of ``range(n)`` in lexicographic order (empty if ``r`` is out of range)."""
    if r < 0 or r > n:
        return []
    return list(combinations(range(n), r))


def check_index_set(index_set: Iterable[int], n: int) -> IndexSet:
    s = tuple(index_set)
    if any(b <= a for a, b in zip(s, s[1:])):
        raise ValueError(f"index set {s} is not strictly increasing")
    if s and (s[0] < 0 or s[-1] >= n):
        raise ValueError(f"index set {s} outside rank {n}")
    return s


def wedge_sign(first: IndexSet, second: IndexSet) -> tuple[int, IndexSet]:
    """Sign of the shuffle sorting ``first + second`` and the sorted union.

    Returns ``(0, ())`` when the sets meet.
    """
    if set(first) & set(second):
        return 0, ()
    # Count inversions between the two increasing runs.
    inversions = 0
    j = 0
    for a in first:
        while j < len(second) and second[j] < a:
            j += 1
        inversions += j
    merged = tuple(sorted(first + second))
    return (-1 if inversions % 2 else 1), merged


@dataclass(frozen=True)
class ExteriorElement:
    """A homogeneous element of ``Lambda^degree R^rank``."""

    rank: int
    degree: int
    coeffs: Mapping[IndexSet, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, value in self.coeffs.items():
            key = check_index_set(key, self.rank)
            if len(key) != self.degree:
                raise ValueError(f"index set {key} has size != degree {self.degree}")
            value = LaurentPoly.coerce(value)
            if value:
                clean[key] = clean.get(key, ZERO) + value
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(clean.items()) if v})

    @classmethod
    def basis(cls, rank: int, index_set: Iterable[int]) -> "ExteriorElement":
        s = tuple(index_set)
        return cls(rank, len(s), {s: ONE})

    @classmethod
    def from_vector(cls, vector: Iterable) -> "ExteriorElement":
        vector = list(vector)
        return cls(len(vector), 1, {(i,): v for i, v in enumerate(vector)})

    @classmethod
    def from_column(cls, column: Iterable, rank: int, degree: int) -> "ExteriorElement":
        """Inverse of :meth:`to_column` for the lexicographic basis."""
        keys = index_sets(rank, degree)
        column = list(column)
        if len(column) != len(keys):
            raise ValueError("column length does not match C(rank, degree)")
        return cls(rank, degree, dict(zip(keys, column)))

    def to_column(self) -> list[LaurentPoly]:
        return [self.coeffs.get(k, ZERO) for k in index_sets(self.rank, self.degree)]

    def __getitem__(self, key: Iterable[int]) -> LaurentPoly:
        return self.coeffs.get(tuple(key), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        self._check_same(other)
        merged = dict(self.coeffs)
        for k, v in other.coeffs.items():
            merged[k] = merged.get(k, ZERO) + v
        return ExteriorElement(self.rank, self.degree, merged)

    def __neg__(self) -> "ExteriorElement":
        return ExteriorElement(self.rank, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "ExteriorElement") -> "ExteriorElement":
        return self + (-other)

    def scale(self, c) -> "ExteriorElement":
        c = LaurentPoly.coerce(c)
        return ExteriorElement(self.rank, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __xor__(self, other: "ExteriorElement") -> "ExteriorElement":
        return wedge(self, other)

    def _check_same(self, other: "ExteriorElement"):
        if (self.rank, self.degree) != (other.rank, other.degree):
            raise ValueError("exterior elements live in different modules")


def wedge(x: ExteriorElement, y: ExteriorElement) -> ExteriorElement:
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch {x.rank} vs {y.rank}")
    out: dict[IndexSet, LaurentPoly] = {}
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            s, merged = wedge_sign(i, j)
            if s:
                term = a * b
                out[merged] = out.get(merged, ZERO) + (term if s > 0 else -term)
    return ExteriorElement(x.rank, x.degree + y.degree, out)


def exterior_power_matrix(a: RingMatrix, r: int) -> RingMatrix:
    """Matrix of ``Lambda^r A``: entry ``(I, J)`` is the minor on rows ``I``, columns ``J``."""
    row_sets = index_sets(a.rows, r)
    col_sets = index_sets(a.cols, r)
    return RingMatrix(len(row_sets), len(col_sets),
                      [minor(a, i, j) if r else ONE for i in row_sets for j in col_sets])


def contract(rank: int, alpha: ExteriorElement) -> Callable[[ExteriorElement], LaurentPoly]:
    """Contraction of the volume form along ``alpha``: ``v -> vol-coefficient of v ^ alpha``."""
    if alpha.degree != 1 or alpha.rank != rank:
        raise ValueError("contraction needs a degree-1 element of the same rank")
    top = tuple(range(rank))

    def pairing(v: ExteriorElement) -> LaurentPoly:
        if v.rank != rank or v.degree != rank - 1:
            raise ValueError(f"expected an element of Lambda^{rank - 1}")
        return wedge(v, alpha)[top]

    return pairing


def duality_d(x: ExteriorElement) -> dict[IndexSet, LaurentPoly]:
    """The functional ``y -> (x ^ y) / w`` on ``Lambda^(n - r)``, as its values on basis elements.

    ``w`` is the ordered wedge of all basis vectors.
    """
    n, r = x.rank, x.degree
    values = {}
    for k in index_sets(n, n - r):
        comp = tuple(i for i in range(n) if i not in k)
        s, _ = wedge_sign(comp, k)
        c = x[comp]
        values[k] = c if s > 0 else -c
    return values


def duality_d_inverse(functional: Mapping[IndexSet, LaurentPoly], rank: int, degree: int) -> ExteriorElement:
    """Recover ``x`` in ``Lambda^degree`` from its pairing functional on ``Lambda^(rank - degree)``."""
    coeffs = {}
    for i in index_sets(rank, degree):
        comp = tuple(j for j in range(rank) if j not in i)
        s, _ = wedge_sign(i, comp)
        c = LaurentPoly.coerce(functional.get(comp, ZERO))
        coeffs[i] = c if s > 0 else -c
    return ExteriorElement(rank, degree, coeffs)


def binomial(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0
