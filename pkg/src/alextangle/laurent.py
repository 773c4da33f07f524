"""Exact arithmetic in the Laurent polynomial ring Z[t, t^-1].

A :class:`LaurentPoly` stores the exponent of its lowest term and the dense
list of integer coefficients from that term upward.  Values are immutable and
hashable, so they can be used as dictionary keys and shared freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "Unit",
    "ZERO",
    "ONE",
    "T",
    "T_INV",
    "monomial",
    "poly",
    "normalize",
    "eq_up_to_unit",
    "divexact",
    "parse_poly",
    "render",
    "NotDivisibleError",
]


class NotDivisibleError(ArithmeticError):
    """Raised by :func:`divexact` when the division leaves a remainder."""


Coercible = Union["LaurentPoly", int]


def _trim(min_exp: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return min_exp + lo, tuple(coeffs[lo:hi])


class LaurentPoly:
    """An element of Z[t, t^-1].

    ``LaurentPoly(min_exp, coeffs)`` is ``sum(c * t**(min_exp + j))`` over
    ``enumerate(coeffs)``.  The representation is trimmed on construction so
    equal polynomials always compare equal.
    """

    __slots__ = ("min_exp", "coeffs", "_hash")

    def __init__(self, min_exp: int = 0, coeffs: Iterable[int] = ()):
        lo, cs = _trim(int(min_exp), [int(c) for c in coeffs])
        object.__setattr__(self, "min_exp", lo)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @staticmethod
    def coerce(value: Coercible) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly(0, (value,))
        raise TypeError(f"cannot convert {type(value).__name__} to LaurentPoly")

    # -- inspection ---------------------------------------------------------

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def terms(self) -> dict[int, int]:
        """Nonzero terms as ``{exponent: coefficient}``."""
        return {self.min_exp + j: c for j, c in enumerate(self.coeffs) if c}

    def coefficient(self, exp: int) -> int:
        j = exp - self.min_exp
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, value):
        """Evaluate at ``value`` (any number type supporting ``**`` and ``*``)."""
        total = 0
        for e, c in self.terms().items():
            total += c * value**e
        return total

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.min_exp, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_exp, [-c for c in self.coeffs])

    def __add__(self, other: Coercible) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for j, c in enumerate(self.coeffs, self.min_exp - lo):
            out[j] += c
        for j, c in enumerate(other.coeffs, other.min_exp - lo):
            out[j] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "LaurentPoly":
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: Coercible) -> "LaurentPoly":
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other: Coercible) -> "LaurentPoly":
        other = LaurentPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            k = b[0]
            return LaurentPoly(self.min_exp + other.min_exp, [k * c for c in a])
        if len(a) == 1:
            k = a[0]
            return LaurentPoly(self.min_exp + other.min_exp, [k * c for c in b])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(self.min_exp + other.min_exp, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise NotDivisibleError(f"{self} is not a unit")
            return LaurentPoly(n * self.min_exp, (self.coeffs[0] ** (-n),))
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.min_exp + k, self.coeffs)

    def bar(self) -> "LaurentPoly":
        """The involution ``t -> t^-1``."""
        if not self.coeffs:
            return self
        return LaurentPoly(-self.max_exp, reversed(self.coeffs))

    # -- text ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self.min_exp}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Unit:
    """The unit ``sign * t**exp`` of Z[t, t^-1]."""

    sign: int = 1
    exp: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"unit sign must be +1 or -1, got {self.sign}")

    @property
    def poly(self) -> LaurentPoly:
        return LaurentPoly(self.exp, (self.sign,))

    def inverse(self) -> "Unit":
        return Unit(self.sign, -self.exp)

    def __mul__(self, other: "Unit") -> "Unit":
        return Unit(self.sign * other.sign, self.exp + other.exp)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "Unit":
        if not p.is_unit():
            raise ValueError(f"{p} is not a unit of Z[t, t^-1]")
        return cls(p.coeffs[0], p.min_exp)


ZERO = LaurentPoly()
ONE = LaurentPoly(0, (1,))
T = LaurentPoly(1, (1,))
T_INV = LaurentPoly(-1, (1,))


def monomial(coeff: int, exp: int) -> LaurentPoly:
    return LaurentPoly(exp, (coeff,))


def poly(*coeffs: int, low: int = 0) -> LaurentPoly:
    """``poly(1, -1, 1)`` is ``1 - t + t^2``; ``low`` shifts the lowest exponent."""
    return LaurentPoly(low, coeffs)


def normalize(p: LaurentPoly) -> tuple[LaurentPoly, Unit]:
    """Split ``p`` as ``u * canonical``.

    The canonical representative has lowest exponent 0 and a positive
    constant term.  Zero maps to ``(0, +1)``.
    """
    if not p.coeffs:
        return ZERO, Unit()
    sign = 1 if p.coeffs[0] > 0 else -1
    u = Unit(sign, p.min_exp)
    canonical = LaurentPoly(0, [sign * c for c in p.coeffs])
    return canonical, u


def eq_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True when ``p = u * q`` for some unit ``u = ±t^k``."""
    return normalize(p)[0] == normalize(q)[0]


def divexact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``p / q``, raising :class:`NotDivisibleError` unless exact."""
    if not q.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p.coeffs:
        return ZERO
    if len(q.coeffs) == 1:
        d = q.coeffs[0]
        if any(c % d for c in p.coeffs):
            raise NotDivisibleError(f"{p} is not divisible by {q}")
        return LaurentPoly(p.min_exp - q.min_exp, [c // d for c in p.coeffs])
    n = len(p.coeffs) - len(q.coeffs) + 1
    if n <= 0:
        raise NotDivisibleError(f"{p} is not divisible by {q}")
    rem = list(p.coeffs)
    qc = q.coeffs
    lead = qc[0]
    quot = [0] * n
    # Cancel from the lowest term upward.
    for i in range(n):
        c = rem[i]
        if c:
            if c % lead:
                raise NotDivisibleError(f"{p} is not divisible by {q}")
            k = c // lead
            quot[i] = k
            for j, y in enumerate(qc):
                rem[i + j] -= k * y
    if any(rem[n:]):
        raise NotDivisibleError(f"{p} is not divisible by {q}")
    return LaurentPoly(p.min_exp - q.min_exp, quot)


# -- text rendering and parsing -------------------------------------------


def _term_body(exp: int) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return "t"
    return f"t^{exp}"


def render(p: LaurentPoly) -> str:
    """Render as ``-2*t^-1 + 3 - t^2`` (terms in increasing exponent)."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for exp, c in sorted(p.terms().items()):
        body = _term_body(exp)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*\s*(?P<t1>t)(?:\s*\^\s*(?P<e1>[+-]?\d+))?)?
        | (?P<t2>t)(?:\s*\^\s*(?P<e2>[+-]?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the text form produced by :func:`render`.

    Terms may come in any order; a repeated exponent is summed.

    >>> parse_poly("-2*t^-1 + 3 - t^2")
    LaurentPoly(-1, [-2, 3, -1])
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = int(m.group("coef"))
            if m.group("t1"):
                exp = int(m.group("e1")) if m.group("e1") is not None else 1
            else:
                exp = 0
        else:
            coef = 1
            exp = int(m.group("e2")) if m.group("e2") is not None else 1
        terms[exp] = terms.get(exp, 0) + sign * coef
        pos = m.end()
        first = False
    return LaurentPoly.from_dict(terms)
