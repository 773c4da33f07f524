"""Alexander functions of presented modules and graded maps between exterior powers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exterior import binomial
from .laurent import ONE, ZERO, LaurentPoly, Unit, normalize
from .matrix import RingMatrix, complement, det

__all__ = [
    "Presentation",
    "alexander_function",
    "alexander_function_units",
    "GradedMap",
    "graded_map_compose",
    "graded_map_eq",
    "identity_map",
]


@dataclass(frozen=True)
class Presentation:
    """A module presented by ``matrix``: one row per generator, one column per relator."""

    matrix: RingMatrix

    @property
    def generator_count(self) -> int:
        return self.matrix.rows

    @property
    def relator_count(self) -> int:
        return self.matrix.cols

    @property
    def deficiency(self) -> int:
        return self.matrix.rows - self.matrix.cols


def alexander_function(p: Presentation, u_columns: Sequence[Sequence]) -> LaurentPoly:
    """``phi(u_1 ^ ... ^ u_k)``: the determinant of ``[u_1 ... u_k | relators]``."""
    if len(u_columns) != p.deficiency:
        raise ValueError(f"need {p.deficiency} columns, got {len(u_columns)}")
    g = p.generator_count
    cols = [list(c) for c in u_columns]
    if any(len(c) != g for c in cols):
        raise ValueError(f"columns must have length {g}")
    cols += [list(p.matrix.column(j)) for j in range(p.relator_count)]
    if g == 0:
        return ONE
    return det(RingMatrix.from_columns(cols, g))


def alexander_function_units(p: Presentation, indices: Sequence[int]) -> LaurentPoly:
    """``alexander_function`` on the standard basis vectors ``e_s``, ``s`` in ``indices``.

    Expanding along the unit columns leaves the minor of the relator matrix
    on the other rows, up to the sign of the shuffle.
    """
    if len(indices) != p.deficiency:
        raise ValueError(f"need {p.deficiency} indices, got {len(indices)}")
    g = p.generator_count
    if len(set(indices)) < len(indices):
        return ZERO
    order = sorted(range(len(indices)), key=lambda a: indices[a])
    sign = _perm_parity(order) + sum(indices) + sum(range(len(indices)))
    rows = complement(indices, g)
    value = det(p.matrix.submatrix(rows, range(p.relator_count))) if rows else ONE
    return -value if sign % 2 else value


def _perm_parity(p: Sequence[int]) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


@dataclass(frozen=True)
class GradedMap:
    """A family of maps ``Lambda^i R^source_rank -> Lambda^(i + shift) R^target_rank``.

    ``blocks[i]`` exists for ``0 <= i <= min(source_rank, (source_rank + target_rank) // 2)``;
    a block whose target degree is out of range has zero rows.  Two graded
    maps are treated as equal when one global unit relates all blocks.
    """

    source_rank: int
    target_rank: int
    blocks: tuple[RingMatrix, ...]

    def __post_init__(self):
        if (self.target_rank - self.source_rank) % 2:
            raise ValueError("source and target ranks must have the same parity")
        blocks = tuple(self.blocks)
        if len(blocks) != self.degree_count:
            raise ValueError(f"expected {self.degree_count} blocks, got {len(blocks)}")
        for i, b in enumerate(blocks):
            if b.shape != self.block_shape(i):
                raise ValueError(f"block {i} has shape {b.shape}, expected {self.block_shape(i)}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def shift(self) -> int:
        return (self.target_rank - self.source_rank) // 2

    @property
    def k(self) -> int:
        return (self.source_rank + self.target_rank) // 2

    @property
    def degree_count(self) -> int:
        return min(self.source_rank, self.k) + 1

    def block_shape(self, i: int) -> tuple[int, int]:
        return binomial(self.target_rank, i + self.shift), binomial(self.source_rank, i)

    def block(self, i: int) -> RingMatrix:
        """Block ``i``, or the zero matrix of the right shape outside the stored range."""
        if 0 <= i < len(self.blocks):
            return self.blocks[i]
        return RingMatrix.zeros(*self.block_shape(i))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def scale(self, c) -> "GradedMap":
        return GradedMap(self.source_rank, self.target_rank, tuple(b.scale(c) for b in self.blocks))

    def first_nonzero(self) -> LaurentPoly | None:
        for b in self.blocks:
            for e in b.entries:
                if e:
                    return e
        return None

    def normalized(self) -> "GradedMap":
        """Rescale by a unit so the first nonzero entry is in canonical form."""
        lead = self.first_nonzero()
        if lead is None:
            return self
        _, u = normalize(lead)
        if u == Unit():
            return self
        return self.scale(u.inverse().poly)

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """``self`` followed by ``other`` (reading order, bottom to top)."""
        return graded_map_compose(self, other)


def identity_map(rank: int) -> GradedMap:
    return GradedMap(rank, rank, tuple(RingMatrix.identity(binomial(rank, i)) for i in range(rank + 1)))


def graded_map_compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """``g`` after ``f``: degree ``i`` is ``g_(i + f.shift) @ f_i``."""
    if f.target_rank != g.source_rank:
        raise ValueError(f"cannot compose: rank {f.target_rank} vs {g.source_rank}")
    blocks = []
    count = min(f.source_rank, (f.source_rank + g.target_rank) // 2) + 1
    for i in range(count):
        blocks.append(g.block(i + f.shift) @ f.block(i))
    return GradedMap(f.source_rank, g.target_rank, tuple(blocks))


def graded_map_eq(f: GradedMap, g: GradedMap) -> bool:
    """True when ``f = u * g`` in every degree for one unit ``u``."""
    if (f.source_rank, f.target_rank) != (g.source_rank, g.target_rank):
        return False
    unit = None
    for bf, bg in zip(f.blocks, g.blocks):
        for x, y in zip(bf.entries, bg.entries):
            if bool(x) != bool(y):
                return False
            if x and unit is None:
                cx, ux = normalize(x)
                cy, uy = normalize(y)
                if cx != cy:
                    return False
                unit = (ux * uy.inverse()).poly
    if unit is None:
        return True
    return all(bf == bg.scale(unit) for bf, bg in zip(f.blocks, g.blocks))
