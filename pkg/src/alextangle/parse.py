"""Text forms of tangle words and plat descriptions.

Tangle words::

    bottom:+ ; cup@1(+-) ; s1 ; s1 ; s1 ; cap@1(+-)

Letters are separated by ``;`` or newlines and ``#`` starts a comment.
``s<i>`` and ``s<i>^-1`` are braid letters (``s<i>^k`` expands to ``|k|``
letters).  ``cup@<j>`` inserts its pair after the first ``j`` endpoints and
``cap@<j>`` joins the endpoints after the first ``j``.

Plat descriptions::

    signs=++- ; braid=s1 s1 s1 ; bottom=1 ; top=1
"""

from __future__ import annotations

import re

from .burau import parse_braid, parse_signs, render_signs
from .plat import PlatDescription
from .tangle import Braid, Cap, Cup, IllFormedError, TangleWord

__all__ = ["ParseError", "parse_tangle_word", "render_tangle_word", "parse_plat", "render_plat"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_BRAID = re.compile(r"s(\d+)(?:\^([+-]?\d+))?$")
_PAIR = re.compile(r"(cup|cap)@(\d+)\(([+-])([+-])\)$")


def _chunks(text: str):
    """Yield ``(token, line, column)`` for every ``;``/newline-separated piece."""
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        line = line.split("#", 1)[0]
        start = 0
        for piece in line.split(";"):
            stripped = piece.strip()
            if stripped:
                col = start + piece.index(stripped[0]) + 1
                yield stripped, lineno, col
            start += len(piece) + 1


def parse_tangle_word(text: str) -> TangleWord:
    bottom = None
    letters = []
    for token, line, col in _chunks(text):
        compact = re.sub(r"\s+", "", token)
        if bottom is None:
            if not compact.startswith("bottom:"):
                raise ParseError("expected 'bottom:<signs>' first", line, col)
            try:
                bottom = parse_signs(compact[len("bottom:"):])
            except ValueError as exc:
                raise ParseError(str(exc), line, col) from None
            continue
        m = _BRAID.match(compact)
        if m:
            i = int(m.group(1))
            power = int(m.group(2)) if m.group(2) is not None else 1
            if power == 0:
                raise ParseError("zero braid exponent", line, col)
            letters.extend([Braid(i, 1 if power > 0 else -1)] * abs(power))
            continue
        m = _PAIR.match(compact)
        if m:
            kind = Cup if m.group(1) == "cup" else Cap
            orientation = tuple(1 if c == "+" else -1 for c in m.group(3, 4))
            if orientation[0] == orientation[1]:
                # Well-formed text, but no oriented tangle has such a letter.
                raise IllFormedError(len(letters), f"{m.group(1)} joins equal signs "
                                                   f"{render_signs(orientation)}")
            letters.append(kind(int(m.group(2)), orientation))
            continue
        raise ParseError(f"unknown letter {token!r}", line, col)
    if bottom is None:
        raise ParseError("missing 'bottom:<signs>'", 1, 1)
    return TangleWord(bottom, tuple(letters))


def _render_letter(letter) -> str:
    if isinstance(letter, Braid):
        return f"s{letter.i}" if letter.sign > 0 else f"s{letter.i}^-1"
    name = "cup" if isinstance(letter, Cup) else "cap"
    return f"{name}@{letter.position}({render_signs(letter.orientation)})"


def render_tangle_word(word: TangleWord) -> str:
    return " ; ".join([f"bottom:{render_signs(word.bottom)}"] + [_render_letter(x) for x in word.letters])


def parse_plat(text: str) -> PlatDescription:
    fields = {}
    for token, line, col in _chunks(text):
        key, sep, value = token.partition("=")
        key = key.strip()
        if not sep or key not in ("signs", "braid", "bottom", "top", "strands"):
            raise ParseError(f"expected key=value with key signs/braid/bottom/top, got {token!r}", line, col)
        fields[key] = (value.strip(), line, col)
    for key in ("signs", "bottom", "top"):
        if key not in fields:
            raise ParseError(f"missing '{key}='", 1, 1)
    try:
        signs = parse_signs(fields["signs"][0])
        strands = int(fields["strands"][0]) if "strands" in fields else len(signs)
        braid = parse_braid(fields.get("braid", ("", 0, 0))[0], strands)
        return PlatDescription(braid, signs, int(fields["bottom"][0]), int(fields["top"][0]))
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def render_plat(pd: PlatDescription) -> str:
    return (f"signs={render_signs(pd.middle_signs)} ; braid={pd.braid} ; "
            f"bottom={pd.m_minus} ; top={pd.m_plus}")
