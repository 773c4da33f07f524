"""Tangle words and the Alexander invariant of their generators.

A tangle word starts from a bottom sign sequence and stacks letters upward:

* ``Braid(i, e)`` is ``s_i^e``, exchanging positions ``i-1`` and ``i``;
* ``Cup(j, (a, b))`` inserts a new pair of endpoints with signs ``a, b`` at
  positions ``j, j+1`` (``j`` endpoints stay on its left);
* ``Cap(j, (a, b))`` joins the endpoints at positions ``j, j+1``.

Every graded map is written in the bases ``u_0 .. u_{m-2}`` of
:mod:`alextangle.burau`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .alexander import GradedMap, graded_map_compose, identity_map
from .burau import SignSequence, burau_generator, check_signs, render_signs
from .exterior import index_sets, wedge_sign
from .laurent import ONE, ZERO
from .matrix import RingMatrix, jacobi_complementary, minor

__all__ = [
    "Braid",
    "Cup",
    "Cap",
    "Letter",
    "TangleWord",
    "IllFormedError",
    "validate",
    "inclusion_matrix",
    "rho_identity",
    "rho_braid",
    "rho_cup",
    "rho_cap",
    "rho_letter",
    "rho_word",
]


class IllFormedError(ValueError):
    """A letter does not fit the running sign sequence."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"letter {index}: {reason}")
        self.index = index
        self.reason = reason


def _orientation(o) -> tuple[int, int]:
    a, b = (int(x) for x in o)
    if {a, b} != {1, -1}:
        raise ValueError(f"cup/cap orientation must be (+1, -1) or (-1, +1), got {o}")
    return a, b


@dataclass(frozen=True)
class Braid:
    i: int
    sign: int = 1


@dataclass(frozen=True)
class Cup:
    position: int
    orientation: tuple[int, int] = (1, -1)

    def __post_init__(self):
        object.__setattr__(self, "orientation", _orientation(self.orientation))


@dataclass(frozen=True)
class Cap:
    position: int
    orientation: tuple[int, int] = (1, -1)

    def __post_init__(self):
        object.__setattr__(self, "orientation", _orientation(self.orientation))


Letter = Union[Braid, Cup, Cap]


@dataclass(frozen=True)
class TangleWord:
    bottom: SignSequence
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bottom", check_signs(self.bottom))
        object.__setattr__(self, "letters", tuple(self.letters))

    def then(self, other: "TangleWord") -> "TangleWord":
        """Stack ``other`` on top of ``self``."""
        if validate(self) != other.bottom:
            raise ValueError("tangle words are not composable")
        return TangleWord(self.bottom, self.letters + other.letters)


def step(signs: SignSequence, letter: Letter, index: int = 0) -> SignSequence:
    """Sign sequence just above ``letter``."""
    m = len(signs)
    if isinstance(letter, Braid):
        if letter.sign not in (1, -1):
            raise IllFormedError(index, f"braid exponent must be +-1, got {letter.sign}")
        if not 1 <= letter.i <= m - 1:
            raise IllFormedError(index, f"s{letter.i} needs at least {letter.i + 1} endpoints, have {m}")
        s = list(signs)
        s[letter.i - 1], s[letter.i] = s[letter.i], s[letter.i - 1]
        return tuple(s)
    if isinstance(letter, Cup):
        if not 0 <= letter.position <= m:
            raise IllFormedError(index, f"cup position {letter.position} outside 0..{m}")
        j = letter.position
        return signs[:j] + letter.orientation + signs[j:]
    if isinstance(letter, Cap):
        j = letter.position
        if not 0 <= j <= m - 2:
            raise IllFormedError(index, f"cap position {j} outside 0..{m - 2}")
        if m - 2 < 1:
            raise IllFormedError(index, "a cap may not remove the last endpoints")
        pair = signs[j:j + 2]
        if pair[0] == pair[1]:
            raise IllFormedError(index, f"cap over equal signs {render_signs(pair)}")
        if pair != letter.orientation:
            raise IllFormedError(index, f"cap expects {render_signs(letter.orientation)}, "
                                        f"found {render_signs(pair)}")
        return signs[:j] + signs[j + 2:]
    raise TypeError(f"unknown letter {letter!r}")


def validate(word: TangleWord) -> SignSequence:
    """Check every letter against the running sign sequence and return the top."""
    signs = word.bottom
    for index, letter in enumerate(word.letters):
        signs = step(signs, letter, index)
    if sum(signs) != sum(word.bottom):
        raise IllFormedError(len(word.letters), "total sign changed")
    return signs


def inclusion_matrix(small: int, j: int) -> RingMatrix:
    """Map from the homology of ``small`` punctures to that with a pair inserted at ``j``.

    Loops around the old punctures keep their shape; only ``u_{j-1}``, which
    straddles the new pair, picks up the three terms ``u_{j-1} + u_j + u_{j+1}``.
    """
    rows, cols = small + 1, small - 1
    columns = []
    for a in range(cols):
        col = [ZERO] * rows
        if a < j - 1:
            col[a] = ONE
        elif a == j - 1:
            col[j - 1] = col[j] = col[j + 1] = ONE
        else:
            col[a + 2] = ONE
        columns.append(col)
    return RingMatrix.from_columns(columns, rows)


def rho_identity(signs: Sequence[int]) -> GradedMap:
    return identity_map(len(check_signs(signs)) - 1)


def rho_braid(signs: Sequence[int], i: int, sign: int = 1) -> GradedMap:
    """``det(b) Lambda^d(b^-1)`` for the Burau matrix ``b`` of one crossing."""
    b = burau_generator(signs, i, sign).matrix
    n = b.rows
    blocks = []
    for d in range(n + 1):
        sets = index_sets(n, d)
        blocks.append(RingMatrix(len(sets), len(sets),
                                 [jacobi_complementary(b, rows, cols) for rows in sets for cols in sets]))
    return GradedMap(n, n, tuple(blocks))


def rho_cup(signs: Sequence[int], j: int, orientation=(1, -1)) -> GradedMap:
    """``x -> (-1)^(k-d) i(x) ^ alpha`` where ``alpha`` is the loop around the new pair."""
    signs = check_signs(signs)
    step(signs, Cup(j, orientation))
    m = len(signs)
    src, tgt = m - 1, m + 1
    k = (src + tgt) // 2
    inc = inclusion_matrix(m, j)
    blocks = []
    for d in range(src + 1):
        cols = index_sets(src, d)
        rows = index_sets(tgt, d + 1)
        entries = []
        for big in rows:
            if j not in big:
                entries.extend([ZERO] * len(cols))
                continue
            rest = tuple(x for x in big if x != j)
            s, _ = wedge_sign(rest, (j,))
            if (k - d) % 2:
                s = -s
            for c in cols:
                value = minor(inc, rest, c) if d else ONE
                entries.append(value if s > 0 else -value)
        blocks.append(RingMatrix(len(rows), len(cols), entries))
    return GradedMap(src, tgt, tuple(blocks))


def rho_cap(signs: Sequence[int], j: int, orientation=(1, -1)) -> GradedMap:
    """Split the bottom homology as ``i(H_top) + R beta + R alpha`` and contract along ``beta``.

    ``alpha`` is the loop around the capped pair; ``beta`` is the neighbouring
    basis loop, which survives the cap and is not hit by the top.
    """
    signs = check_signs(signs)
    step(signs, Cap(j, orientation))
    m = len(signs)
    src, tgt = m - 1, m - 3
    k = (src + tgt) // 2
    inc = inclusion_matrix(m - 2, j)
    beta = j - 1 if j >= 1 else j + 1
    columns = [list(inc.column(c)) for c in range(tgt)]
    columns.append([ONE if a == beta else ZERO for a in range(src)])
    columns.append([ONE if a == j else ZERO for a in range(src)])
    q = RingMatrix.from_columns(columns, src)
    blocks = []
    for d in range(min(src, k) + 1):
        cols = index_sets(src, d)
        rows = index_sets(tgt, d - 1)
        sign = -1 if (k - d) % 2 else 1
        entries = []
        for small in rows:
            picked = small + (tgt,)
            for c in cols:
                value = jacobi_complementary(q, picked, c)
                entries.append(value if sign > 0 else -value)
        blocks.append(RingMatrix(len(rows), len(cols), entries))
    return GradedMap(src, tgt, tuple(blocks))


def rho_letter(signs: SignSequence, letter: Letter) -> GradedMap:
    if isinstance(letter, Braid):
        return rho_braid(signs, letter.i, letter.sign)
    if isinstance(letter, Cup):
        return rho_cup(signs, letter.position, letter.orientation)
    if isinstance(letter, Cap):
        return rho_cap(signs, letter.position, letter.orientation)
    raise TypeError(f"unknown letter {letter!r}")


def rho_word(word: TangleWord, normalize: bool = True) -> GradedMap:
    """Compose the letters' graded maps bottom to top."""
    validate(word)
    signs = word.bottom
    result = rho_identity(signs)
    for letter in word.letters:
        result = graded_map_compose(result, rho_letter(signs, letter))
        signs = step(signs, letter)
    return result.normalized() if normalize else result
