import itertools
import random

import pytest
import sympy

from alextangle.laurent import ONE, T, T_INV, ZERO, LaurentPoly
from alextangle.matrix import RingMatrix, complement, det, det_cofactor, jacobi_complementary, minor

from conftest import from_sympy, matrix_to_sympy, random_matrix, random_poly


def test_det_examples():
    assert det(RingMatrix.from_rows([[T, ONE], [ZERO, T_INV]])) == ONE
    for n in range(5):
        assert det(RingMatrix.identity(n)) == ONE


def test_det_requires_square():
    with pytest.raises(ValueError):
        det(RingMatrix.zeros(2, 3))


def test_det_matches_cofactor(rng):
    for n in range(1, 6):
        for _ in range(12 if n < 5 else 4):
            a = random_matrix(rng, n)
            assert det(a) == det_cofactor(a)


def test_det_matches_cofactor_dense(rng):
    polys = [random_poly(rng) for _ in range(30)]
    for n in range(1, 5):
        for _ in range(6):
            a = random_matrix(rng, n, entries=polys)
            assert det(a) == det_cofactor(a)


def test_det_sparse_and_singular():
    # zero leading entries force pivot search
    a = RingMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert det(a) == -ONE
    b = RingMatrix.from_rows([[T, 1 + T], [T * T, T + T * T]])
    assert det(b) == ZERO
    assert det(RingMatrix.zeros(3, 3)) == ZERO


def test_det_multiplicative(rng):
    for n in (2, 3, 4):
        for _ in range(5):
            a, b = random_matrix(rng, n), random_matrix(rng, n)
            assert det(a @ b) == det(a) * det(b)


def test_minor_examples(rng):
    i3 = RingMatrix.identity(3)
    assert minor(i3, (1, 2), (1, 2)) == ONE
    a = random_matrix(rng, 4)
    assert minor(a, range(4), range(4)) == det(a)
    # 1-based {1,3} x {2,4} of the written example
    assert minor(a, (0, 2), (1, 3)) == det_cofactor(a.submatrix((0, 2), (1, 3)))
    with pytest.raises(ValueError):
        minor(a, (0,), (0, 1))


def test_jacobi_examples():
    a, b, c, d = (LaurentPoly(0, (x,)) for x in (2, 3, 5, 7))
    m = RingMatrix.from_rows([[a, b], [c, d]])
    assert jacobi_complementary(m, (0,), (0,)) == d
    assert jacobi_complementary(m, (0,), (1,)) == -b
    assert jacobi_complementary(m, (0, 1), (0, 1)) == ONE


def _jacobi_oracle(a: RingMatrix, rows, cols) -> LaurentPoly:
    s = matrix_to_sympy(a)
    inv = s.inv()
    value = s.det() * inv.extract(list(rows), list(cols)).det()
    return from_sympy(sympy.cancel(sympy.together(value)))


def test_jacobi_matches_fraction_field_inverse(rng):
    checked = 0
    entries = [LaurentPoly(e, (c,)) for e in (0, 1) for c in (1, -1)]
    while checked < 6:
        a = random_matrix(rng, 3, entries=entries)
        if not det(a):
            continue
        checked += 1
        for r in (1, 2):
            for rows in itertools.combinations(range(3), r):
                for cols in itertools.combinations(range(3), r):
                    assert jacobi_complementary(a, rows, cols) == _jacobi_oracle(a, rows, cols)


def test_jacobi_adjugate_consistency(rng):
    # det(A)^(r-1) * J(I, J) equals the r x r minor of the adjugate
    for n in (3, 4):
        a = random_matrix(rng, n)
        adj = RingMatrix(n, n, [jacobi_complementary(a, (i,), (j,)) for i in range(n) for j in range(n)])
        d = det(a)
        for r in (1, 2):
            for rows in itertools.combinations(range(n), r):
                for cols in itertools.combinations(range(n), r):
                    assert d ** (r - 1) * jacobi_complementary(a, rows, cols) == minor(adj, rows, cols)


def test_arithmetic_and_shapes(rng):
    a, b = random_matrix(rng, 2, 3), random_matrix(rng, 3, 2)
    assert (a @ b).shape == (2, 2)
    assert a.T.T == a
    assert (a @ b).T == b.T @ a.T
    assert a + RingMatrix.zeros(2, 3) == a
    assert a - a == RingMatrix.zeros(2, 3)
    assert RingMatrix.zeros(0, 3) @ RingMatrix.zeros(3, 2) == RingMatrix.zeros(0, 2)
    assert complement((0, 2), 4) == (1, 3)
    with pytest.raises(ValueError):
        a @ a
    with pytest.raises(AttributeError):
        a.rows = 5
