"""Alexander polynomials of closed braids, as an independent reference.

Only the classical all-positive Burau matrices are used here, with none of
the sign-twisted machinery of the rest of the package.
"""

from __future__ import annotations

from .burau import BraidWord
from .laurent import ONE, ZERO, LaurentPoly, T, T_INV, divexact, normalize, poly
from .matrix import RingMatrix, det

__all__ = [
    "closure_components",
    "unreduced_burau",
    "reduced_burau",
    "closed_braid_oracle",
    "closed_braid_minor",
]


def closure_components(w: BraidWord) -> int:
    """Number of components of the closure: the cycle count of the permutation."""
    perm = w.permutation()
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if not seen[start]:
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count


def _product(n: int, w: BraidWord, generator) -> RingMatrix:
    m = RingMatrix.identity(n)
    for i, e in w.letters:
        m = m @ generator(i, e)
    return m


def unreduced_burau(w: BraidWord) -> RingMatrix:
    """``s_i -> I + [[1-t, t], [1, 0]]`` on rows and columns ``i-1, i``."""
    n = w.strand_count

    def gen(i: int, e: int) -> RingMatrix:
        rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
        a = i - 1
        if e > 0:
            block = ((ONE - T, T), (ONE, ZERO))
        else:
            block = ((ZERO, ONE), (T_INV, ONE - T_INV))
        for r in range(2):
            for c in range(2):
                rows[a + r][a + c] = block[r][c]
        return RingMatrix.from_rows(rows, n)

    return _product(n, w, gen)


def reduced_burau(w: BraidWord) -> RingMatrix:
    """The ``(n-1)``-dimensional reduced Burau matrix with every strand positive."""
    n = w.strand_count - 1

    def gen(i: int, e: int) -> RingMatrix:
        rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
        r = i - 1
        if e > 0:
            entries = ((r - 1, T), (r, -T), (r + 1, ONE))
        else:
            entries = ((r - 1, ONE), (r, -T_INV), (r + 1, T_INV))
        for c, value in entries:
            if 0 <= c < n:
                rows[r][c] = value
        return RingMatrix.from_rows(rows, n)

    return _product(n, w, gen)


def closed_braid_oracle(w: BraidWord) -> LaurentPoly:
    """``det(I - B_r) (1 - t) / (1 - t^n)``, normalized.

    This is the Alexander polynomial of the closure for knots and the
    single-variable one for links; split closures give 0.
    """
    n = w.strand_count
    b = reduced_burau(w)
    d = det(RingMatrix.identity(b.rows) - b)
    numerator = d * poly(1, -1)
    divisor = LaurentPoly(0, [1] + [0] * (n - 1) + [-1]) if n > 1 else poly(1, -1)
    return normalize(divexact(numerator, divisor))[0]


def closed_braid_minor(w: BraidWord) -> LaurentPoly:
    """The same polynomial as a principal minor of ``I - B`` for the unreduced representation."""
    n = w.strand_count
    if n == 1:
        return ONE
    b = unreduced_burau(w)
    a = RingMatrix.identity(n) - b
    keep = range(n - 1)
    return normalize(det(a.submatrix(keep, keep)))[0]
