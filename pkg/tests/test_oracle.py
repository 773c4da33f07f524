import random

import sympy

from alextangle.burau import BraidWord, parse_braid
from alextangle.laurent import ONE, ZERO, eq_up_to_unit, parse_poly, poly
from alextangle.oracle import (
    closed_braid_minor, closed_braid_oracle, closure_components, reduced_burau, unreduced_burau,
)
from alextangle.sampling import random_braid

from conftest import from_sympy, matrix_to_sympy, t

# standard knot-table values
TABLE = [
    ("s1 s1 s1", 2, "1 - t + t^2"),
    ("s1 s2^-1 s1 s2^-1", 3, "1 - 3*t + t^2"),
    ("s1^5", 2, "1 - t + t^2 - t^3 + t^4"),
    ("s1^3 s2 s1^-1 s2", 3, "2 - 3*t + 2*t^2"),
    ("s1^2 s2 s1^-1 s3^-1 s2 s3^-1", 4, "2 - 5*t + 2*t^2"),
    ("s1^3 s2^-1 s1 s2^-1", 3, "1 - 3*t + 3*t^2 - 3*t^3 + t^4"),
    ("s1^2 s2^-1 s1 s2^-2", 3, "1 - 3*t + 5*t^2 - 3*t^3 + t^4"),
]


def test_knot_table():
    for text, n, expected in TABLE:
        w = parse_braid(text, n)
        assert closure_components(w) == 1
        assert eq_up_to_unit(closed_braid_oracle(w), parse_poly(expected)), text


def test_hand_computed_trefoil():
    # B_2: reduced Burau of s1^3 is [-t^3]; det(1 + t^3) * (1 - t) / (1 - t^2)
    w = parse_braid("s1 s1 s1", 2)
    assert reduced_burau(w).entries == (parse_poly("-t^3"),)
    assert closed_braid_oracle(w) == poly(1, -1, 1)


def test_unknot_and_links():
    assert closed_braid_oracle(BraidWord(1)) == ONE
    assert closed_braid_oracle(parse_braid("s1", 2)) == ONE
    hopf = parse_braid("s1 s1", 2)
    assert closure_components(hopf) == 2
    assert eq_up_to_unit(closed_braid_oracle(hopf), poly(1, -1))
    split = BraidWord(2)
    assert closure_components(split) == 2
    assert closed_braid_oracle(split) == ZERO
    assert closure_components(BraidWord(3)) == 3


def test_symmetric_under_t_inverse(rng):
    for _ in range(20):
        w = random_braid(rng, rng.randint(2, 4), rng.randint(1, 8))
        p = closed_braid_oracle(w)
        assert eq_up_to_unit(p, p.bar())


def test_reduced_and_minor_agree(rng):
    for _ in range(30):
        w = random_braid(rng, rng.randint(1, 5), rng.randint(0, 9))
        assert eq_up_to_unit(closed_braid_oracle(w), closed_braid_minor(w))


def test_against_sympy_determinant(rng):
    # independent determinant and division in sympy
    for _ in range(10):
        n = rng.randint(2, 4)
        w = random_braid(rng, n, rng.randint(1, 7))
        b = matrix_to_sympy(reduced_burau(w))
        value = sympy.cancel((sympy.eye(n - 1) - b).det() * (1 - t) / (1 - t**n))
        assert eq_up_to_unit(closed_braid_oracle(w), from_sympy(value))


def test_unreduced_is_representation(rng):
    a, b = random_braid(rng, 4, 5), random_braid(rng, 4, 5)
    assert unreduced_burau(a * b) == unreduced_burau(a) @ unreduced_burau(b)
    assert unreduced_burau(a * a.inverse()) == unreduced_burau(BraidWord(4))
