"""The oriented reduced Burau representation, as a groupoid over sign sequences.

Punctures are numbered ``0 .. m-1`` and carry signs ``+1``/``-1``.  The free
basis of the twisted first homology is ``u_0 .. u_{m-2}``, where ``u_j`` is
the difference of the lifts of the loops around ``p_j`` and ``p_{j+1}``,
each loop oriented so that it maps to ``t``.  The Artin generator ``s_i``
(``1 <= i <= m-1``) exchanges punctures ``i-1`` and ``i``.

:func:`burau_word` returns the matrix of the map from the top disk to the
bottom disk of the braid: column ``c`` holds the image of ``u_c`` of the top
in the basis of the bottom.  With that convention the representation is
multiplicative in reading order, ``b(v w) = b(v) b(w)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import ONE, ZERO, LaurentPoly, monomial
from .matrix import RingMatrix

__all__ = [
    "SignSequence",
    "parse_signs",
    "render_signs",
    "check_signs",
    "BraidWord",
    "parse_braid",
    "BurauMorphism",
    "burau_generator",
    "burau_word",
    "permute_signs",
]

SignSequence = tuple[int, ...]


def check_signs(signs: Iterable[int]) -> SignSequence:
    s = tuple(int(x) for x in signs)
    if not s:
        raise ValueError("a sign sequence needs at least one puncture")
    if any(x not in (1, -1) for x in s):
        raise ValueError(f"signs must be +1 or -1: {s}")
    return s


def parse_signs(text: str) -> SignSequence:
    """``"+-+"`` -> ``(1, -1, 1)``; commas and spaces are ignored."""
    cleaned = re.sub(r"[\s,]", "", text)
    if not cleaned or set(cleaned) - {"+", "-"}:
        raise ValueError(f"invalid sign sequence {text!r}")
    return tuple(1 if c == "+" else -1 for c in cleaned)


def render_signs(signs: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators; letters are ``(i, +-1)`` with 1-based ``i``."""

    strand_count: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i < self.strand_count:
                raise ValueError(f"generator s{i} does not exist on {self.strand_count} strands")
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +-1, got {e}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strand_count != self.strand_count:
            raise ValueError("braid words on different strand counts")
        return BraidWord(self.strand_count, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple((i, -e) for i, e in reversed(self.letters)))

    def widen(self, strand_count: int, offset: int = 0) -> "BraidWord":
        """The same word on more strands, with every index shifted by ``offset``."""
        return BraidWord(strand_count, tuple((i + offset, e) for i, e in self.letters))

    def permutation(self) -> tuple[int, ...]:
        """``perm[p]`` is the bottom position of the strand ending at top position ``p``."""
        perm = list(range(self.strand_count))
        for i, _ in self.letters:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return tuple(perm)

    def __str__(self) -> str:
        return " ".join(f"s{i}" if e > 0 else f"s{i}^-1" for i, e in self.letters)


_BRAID_TOKEN = re.compile(r"^s(\d+)(?:\^([+-]?\d+))?$")


def parse_braid(text: str, strand_count: int | None = None) -> BraidWord:
    """Parse ``"s1 s2^-1 s1^3"``; the strand count defaults to one more than the largest index."""
    letters: list[tuple[int, int]] = []
    for token in text.replace(",", " ").split():
        m = _BRAID_TOKEN.match(token)
        if not m:
            raise ValueError(f"invalid braid letter {token!r}")
        i = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([(i, 1 if power > 0 else -1)] * abs(power))
    if strand_count is None:
        strand_count = max((i for i, _ in letters), default=0) + 1
    return BraidWord(strand_count, tuple(letters))


def permute_signs(signs: Sequence[int], word: BraidWord) -> SignSequence:
    """Signs at the top of ``word`` given the signs at its bottom."""
    s = list(signs)
    if len(s) != word.strand_count:
        raise ValueError("sign sequence length differs from the strand count")
    for i, _ in word.letters:
        s[i - 1], s[i] = s[i], s[i - 1]
    return tuple(s)


@dataclass(frozen=True)
class BurauMorphism:
    source: SignSequence
    target: SignSequence
    matrix: RingMatrix

    def __matmul__(self, other: "BurauMorphism") -> "BurauMorphism":
        """``self`` followed (upward) by ``other``."""
        if self.target != other.source:
            raise ValueError("morphisms are not composable")
        return BurauMorphism(self.source, other.target, self.matrix @ other.matrix)


def burau_generator(signs: Sequence[int], i: int, crossing: int = 1) -> BurauMorphism:
    """The Burau morphism of ``s_i`` (``crossing=+1``) or ``s_i^-1`` starting at ``signs``.

    For ``s_i`` only row ``i-1`` differs from the identity; it reads
    ``(t^e, -t^e, 1)`` in columns ``i-2, i-1, i`` (clipped at the edges),
    where ``e`` is the sign of the strand that starts at position ``i-1``.
    """
    signs = check_signs(signs)
    m = len(signs)
    if not 1 <= i <= m - 1:
        raise ValueError(f"generator s{i} does not exist on {m} strands")
    target = list(signs)
    target[i - 1], target[i] = target[i], target[i - 1]
    target = tuple(target)
    n = m - 1
    r = i - 1
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    if crossing > 0:
        a = monomial(1, signs[i - 1])
        entries = ((r - 1, a), (r, -a), (r + 1, ONE))
    elif crossing < 0:
        # Inverse of the positive block for the crossing that starts at ``target``.
        a_inv = monomial(1, -target[i - 1])
        entries = ((r - 1, ONE), (r, -a_inv), (r + 1, a_inv))
    else:
        raise ValueError("crossing sign must be +1 or -1")
    for c, value in entries:
        if 0 <= c < n:
            rows[r][c] = value
    return BurauMorphism(signs, target, RingMatrix.from_rows(rows, n))


def burau_word(signs: Sequence[int], word: BraidWord) -> BurauMorphism:
    """Composite of the generator morphisms of ``word``, read bottom to top."""
    signs = check_signs(signs)
    if len(signs) != word.strand_count:
        raise ValueError("sign sequence length differs from the strand count")
    result = BurauMorphism(signs, signs, RingMatrix.identity(len(signs) - 1))
    for i, e in word.letters:
        result = result @ burau_generator(result.target, i, e)
    return result
