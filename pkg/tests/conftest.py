import sys
import random

import pytest
import sympy
from hypothesis import strategies as st

from alextangle.laurent import LaurentPoly
from alextangle.matrix import RingMatrix

t = sympy.Symbol("t")


def to_sympy(p: LaurentPoly):
    return sum((c * t**e for e, c in p.terms().items()), sympy.Integer(0))


def from_sympy(expr) -> LaurentPoly:
    expr = sympy.expand(expr)
    terms = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        c, e = term.as_coeff_exponent(t)
        terms[int(e)] = terms.get(int(e), 0) + int(c)
    return LaurentPoly.from_dict(terms)


def matrix_to_sympy(a: RingMatrix):
    return sympy.Matrix(a.rows, a.cols, [to_sympy(x) for x in a.entries])


laurent = st.builds(
    LaurentPoly,
    st.integers(-4, 4),
    st.lists(st.integers(-6, 6), max_size=5),
)

SMALL_ENTRIES = [LaurentPoly(e, (c,)) for e in (-1, 0, 1) for c in (1, -1)] + [LaurentPoly()]


def random_matrix(rng: random.Random, n: int, m: int | None = None, entries=SMALL_ENTRIES) -> RingMatrix:
    m = n if m is None else m
    return RingMatrix(n, m, [rng.choice(entries) for _ in range(n * m)])


def random_poly(rng: random.Random, span: int = 3, size: int = 3) -> LaurentPoly:
    return LaurentPoly(rng.randint(-span, span), [rng.randint(-3, 3) for _ in range(rng.randint(0, size))])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[key])
