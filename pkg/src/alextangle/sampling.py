"""Random sign sequences, braids and plat descriptions for tests and demos."""

from __future__ import annotations

import random

from .burau import BraidWord, SignSequence, permute_signs
from .plat import PlatDescription
from .tangle import Braid, Cap, Cup, TangleWord

__all__ = ["random_signs", "random_braid", "random_plat", "random_word"]


def random_signs(rng: random.Random, n: int) -> SignSequence:
    return tuple(rng.choice((1, -1)) for _ in range(n))


def random_braid(rng: random.Random, strands: int, length: int) -> BraidWord:
    if strands < 2:
        return BraidWord(strands)
    return BraidWord(strands, tuple((rng.randint(1, strands - 1), rng.choice((1, -1)))
                                    for _ in range(length)))


def _pairs_ok(signs, m: int) -> bool:
    return all(signs[a] != signs[a + 1] for a in range(m, len(signs), 2))


def random_plat(rng: random.Random, max_strands: int = 6, max_length: int = 8,
                min_strands: int = 1, bottom: SignSequence | None = None) -> PlatDescription:
    """A random valid plat description with at most ``max_strands`` strands.

    ``bottom`` fixes the bottom endpoints, which must fit in ``max_strands``.
    """
    if bottom is None:
        n = rng.randint(min_strands, max_strands)
        m_minus = rng.choice([m for m in range(1, n + 1) if (n - m) % 2 == 0])
        signs = list(random_signs(rng, m_minus))
    else:
        m_minus = len(bottom)
        if m_minus > max_strands:
            raise ValueError("bottom does not fit in max_strands")
        n = rng.choice([x for x in range(max(m_minus, min_strands), max_strands + 1) if (x - m_minus) % 2 == 0]
                       or [m_minus])
        signs = list(bottom)
    while len(signs) < n:
        e = rng.choice((1, -1))
        signs += [e, -e]
    braid = random_braid(rng, n, rng.randint(0, max_length))
    top = permute_signs(signs, braid)
    m_plus = rng.choice([m for m in range(1, n + 1) if (n - m) % 2 == 0 and _pairs_ok(top, m)])
    return PlatDescription(braid, tuple(signs), m_minus, m_plus)


def random_word(rng: random.Random, bottom: SignSequence, length: int, max_width: int = 6) -> TangleWord:
    """A random valid tangle word; the running width never exceeds ``max_width``."""
    signs = tuple(bottom)
    letters = []
    for _ in range(length):
        m = len(signs)
        options = []
        if m >= 2:
            options.append("braid")
        if m + 2 <= max_width:
            options.append("cup")
        caps = [j for j in range(m - 1) if signs[j] != signs[j + 1]] if m >= 3 else []
        if caps:
            options.append("cap")
        if not options:
            break
        kind = rng.choice(options)
        if kind == "braid":
            letter = Braid(rng.randint(1, m - 1), rng.choice((1, -1)))
            i = letter.i
            signs = signs[:i - 1] + (signs[i], signs[i - 1]) + signs[i + 1:]
        elif kind == "cup":
            j = rng.randint(0, m)
            e = rng.choice((1, -1))
            letter = Cup(j, (e, -e))
            signs = signs[:j] + (e, -e) + signs[j:]
        else:
            j = rng.choice(caps)
            letter = Cap(j, signs[j:j + 2])
            signs = signs[:j] + signs[j + 2:]
        letters.append(letter)
    return TangleWord(tuple(bottom), tuple(letters))
