"""The Alexander invariant of a tangle in plat position.

A plat description is a braid on ``N`` strands with cups joining the
rightmost ``N - m_minus`` bottom endpoints in adjacent pairs and caps joining
the rightmost ``N - m_plus`` top endpoints.  ``middle_signs`` are the signs
at the bottom of the braid, just above the cups.

The middle disk ``S`` splits the complement into two handlebody pieces and
Mayer-Vietoris turns that into a presentation of the tangle module with
generators ``gamma-, beta-, gamma+, beta+`` and one relator per basis loop
of ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alexander import GradedMap, Presentation, alexander_function_units
from .burau import BraidWord, SignSequence, burau_word, check_signs, permute_signs, render_signs
from .exterior import index_sets, wedge_sign
from .laurent import ONE, ZERO
from .matrix import RingMatrix, complement
from .tangle import Braid, Cap, Cup, TangleWord, validate

__all__ = [
    "PlatDescription",
    "MVPresentation",
    "build_presentation",
    "rho_plat",
    "canonical_word",
    "hilden_generators",
    "hilden_bottom",
    "hilden_top",
    "stabilize",
    "glue",
    "plat_from_word",
]


@dataclass(frozen=True)
class PlatDescription:
    braid: BraidWord
    middle_signs: SignSequence
    m_minus: int
    m_plus: int

    def __post_init__(self):
        signs = check_signs(self.middle_signs)
        object.__setattr__(self, "middle_signs", signs)
        n = self.strands
        if len(signs) != n:
            raise ValueError(f"{len(signs)} middle signs for {n} strands")
        for label, m in (("bottom", self.m_minus), ("top", self.m_plus)):
            if not 1 <= m <= n or (n - m) % 2:
                raise ValueError(f"{label} endpoint count {m} invalid for {n} strands")
        for c in range(self.n_minus):
            a = self.m_minus + 2 * c
            if signs[a] == signs[a + 1]:
                raise ValueError(f"cup {c} joins equal signs at positions {a}, {a + 1}")
        top = self.top_strand_signs
        for c in range(self.n_plus):
            a = self.m_plus + 2 * c
            if top[a] == top[a + 1]:
                raise ValueError(f"cap {c} joins equal signs at positions {a}, {a + 1}")

    @property
    def strands(self) -> int:
        return self.braid.strand_count

    @property
    def n_minus(self) -> int:
        return (self.strands - self.m_minus) // 2

    @property
    def n_plus(self) -> int:
        return (self.strands - self.m_plus) // 2

    @property
    def top_strand_signs(self) -> SignSequence:
        return permute_signs(self.middle_signs, self.braid)

    @property
    def bottom(self) -> SignSequence:
        return self.middle_signs[:self.m_minus]

    @property
    def top(self) -> SignSequence:
        return self.top_strand_signs[:self.m_plus]

    def __str__(self) -> str:
        return (f"plat(strands={self.strands}, signs={render_signs(self.middle_signs)}, "
                f"braid='{self.braid}', bottom={self.m_minus}, top={self.m_plus})")


@dataclass(frozen=True)
class MVPresentation:
    presentation: Presentation
    gamma_minus: tuple[int, ...]
    gamma_plus: tuple[int, ...]

    @property
    def deficiency(self) -> int:
        return self.presentation.deficiency


def _kept(n_loops: int, m: int) -> list[int]:
    """Basis loops of S that survive in a handlebody half: all but the cup/cap loops."""
    caps = {m + 2 * c for c in range((n_loops + 1 - m) // 2)}
    return [a for a in range(n_loops) if a not in caps]


def build_presentation(pd: PlatDescription) -> MVPresentation:
    n_loops = pd.strands - 1
    b = burau_word(pd.middle_signs, pd.braid).matrix
    lower = _kept(n_loops, pd.m_minus)
    upper = _kept(n_loops, pd.m_plus)
    g = len(lower) + len(upper)
    columns = []
    # For each loop of the top of the braid: its image in S on the lower side
    # equals the loop itself on the upper side.
    for c in range(n_loops):
        col = [ZERO] * g
        for r, a in enumerate(lower):
            col[r] = b[a, c]
        for r, a in enumerate(upper):
            if a == c:
                col[len(lower) + r] = -ONE
        columns.append(col)
    matrix = RingMatrix.from_columns(columns, g)
    gamma_minus = tuple(range(pd.m_minus - 1))
    gamma_plus = tuple(len(lower) + r for r in range(pd.m_plus - 1))
    return MVPresentation(Presentation(matrix), gamma_minus, gamma_plus)


def rho_plat(pd: PlatDescription, normalize: bool = True) -> GradedMap:
    """The graded map read off from Alexander-function values on unit columns.

    The coefficient of ``gamma+_J`` in the image of ``gamma-_I`` is
    ``sign(J, J') * phi(E_I, E_J')`` with ``J'`` the complement of ``J``.
    """
    mv = build_presentation(pd)
    pres = mv.presentation
    src, tgt = pd.m_minus - 1, pd.m_plus - 1
    k = mv.deficiency
    shift = (tgt - src) // 2

    blocks = []
    for d in range(min(src, k) + 1):
        cols = index_sets(src, d)
        rows = index_sets(tgt, d + shift)
        entries = []
        for js in rows:
            rest = complement(js, tgt)
            s, _ = wedge_sign(js, rest)
            plus = [mv.gamma_plus[b] for b in rest]
            for ids in cols:
                value = alexander_function_units(pres, [mv.gamma_minus[a] for a in ids] + plus)
                entries.append(value if s > 0 else -value)
        blocks.append(RingMatrix(len(rows), len(cols), entries))
    result = GradedMap(src, tgt, tuple(blocks))
    return result.normalized() if normalize else result


def canonical_word(pd: PlatDescription) -> TangleWord:
    """Cups appended at the right, the braid, then caps removed from the right."""
    letters = []
    for c in range(pd.n_minus):
        a = pd.m_minus + 2 * c
        letters.append(Cup(a, pd.middle_signs[a:a + 2]))
    letters.extend(Braid(i, e) for i, e in pd.braid.letters)
    top = pd.top_strand_signs
    for c in reversed(range(pd.n_plus)):
        a = pd.m_plus + 2 * c
        letters.append(Cap(a, top[a:a + 2]))
    return TangleWord(pd.bottom, tuple(letters))


def hilden_generators(m: int, n: int) -> list[BraidWord]:
    """Braids on ``m + 2n`` strands that carry ``n`` right-hand cups to themselves.

    ``m`` endpoints on the left stay free.  Generators whose indices do not
    exist for small ``n`` are left out.
    """
    if n < 1:
        raise ValueError("need at least one cup")
    size = m + 2 * n
    words = [BraidWord(size, ((m + 1, 1),))]
    if n >= 2:
        words.append(BraidWord(size, ((m + 2, 1), (m + 1, 1), (m + 1, 1), (m + 2, 1))))
    for i in range(1, n):
        words.append(BraidWord(size, ((m + 2 * i, 1), (m + 2 * i - 1, 1),
                                      (m + 2 * i + 1, 1), (m + 2 * i, 1))))
    return words


def hilden_bottom(pd: PlatDescription, h: BraidWord) -> PlatDescription:
    """Insert ``h`` (a cup-preserving braid) between the cups and the braid."""
    signs = permute_signs(pd.middle_signs, h.inverse())
    return PlatDescription(h * pd.braid, signs, pd.m_minus, pd.m_plus)


def hilden_top(pd: PlatDescription, h: BraidWord) -> PlatDescription:
    """Insert ``h`` (a cap-preserving braid) between the braid and the caps."""
    return PlatDescription(pd.braid * h, pd.middle_signs, pd.m_minus, pd.m_plus)


def stabilize(pd: PlatDescription) -> PlatDescription:
    """Add a cup and a cap on two new strands at the right, linked by one crossing.

    The new crossing ``s_N`` sits at the top of the braid, and the new pair's
    signs copy the last top strand so every sign sequence is preserved.
    """
    n = pd.strands
    e = pd.top_strand_signs[-1]
    braid = pd.braid.widen(n + 2) * BraidWord(n + 2, ((n, 1),))
    return PlatDescription(braid, pd.middle_signs + (e, -e), pd.m_minus, pd.m_plus)


def glue(lower: PlatDescription, upper: PlatDescription) -> PlatDescription:
    """A plat description of ``upper`` stacked on ``lower``.

    The cups of ``upper`` slide down to the right of the cups of ``lower``;
    the caps of ``lower`` slide up to the far right, passing the new strands
    on one side only.
    """
    if lower.top != upper.bottom:
        raise ValueError(f"cannot glue: top {render_signs(lower.top)} "
                         f"vs bottom {render_signs(upper.bottom)}")
    p = 2 * lower.n_plus
    q = 2 * upper.n_minus
    n = lower.strands + q
    letters = list(lower.braid.letters)
    for pos in range(lower.m_plus + p - 1, lower.m_plus - 1, -1):
        letters.extend((x, 1) for x in range(pos + 1, pos + q + 1))
    letters.extend(upper.braid.letters)
    signs = lower.middle_signs + upper.middle_signs[upper.m_minus:]
    return PlatDescription(BraidWord(n, tuple(letters)), signs, lower.m_minus, upper.m_plus)


def plat_from_word(word: TangleWord, crossing: int = 1) -> PlatDescription:
    """Put a tangle word in plat position.

    Each cup is pulled down to the bottom far right and enters along a riser;
    each cap is slid to the right and parked until the top.  Moving pairs
    pass every other strand on the same side (``crossing`` picks which).
    """
    signs = validate(word)
    active = len(word.bottom)
    parked = 0
    risers: list[tuple[int, int]] = []
    letters: list[tuple[int, int]] = []
    for letter in word.letters:
        if isinstance(letter, Braid):
            letters.append((letter.i, letter.sign))
        elif isinstance(letter, Cup):
            risers.append(letter.orientation)
            p, j = active + parked, letter.position
            letters.extend((x, crossing) for x in range(p, j, -1))
            letters.extend((x, crossing) for x in range(p + 1, j + 1, -1))
            active += 2
        else:
            j, end = letter.position, active + parked
            letters.extend((x, crossing) for x in range(j + 2, end))
            letters.extend((x, crossing) for x in range(j + 1, end - 1))
            active -= 2
            parked += 2
    middle = word.bottom + tuple(e for pair in risers for e in pair)
    pd = PlatDescription(BraidWord(len(middle), tuple(letters)), middle, len(word.bottom), active)
    if pd.top != signs:
        raise AssertionError("plat conversion lost track of the signs")
    return pd
