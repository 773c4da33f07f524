import itertools
import random

import pytest

from alextangle.alexander import graded_map_compose, graded_map_eq, identity_map
from alextangle.burau import BraidWord
from alextangle.laurent import ONE, ZERO, eq_up_to_unit, poly
from alextangle.matrix import RingMatrix
from alextangle.plat import plat_from_word, rho_plat
from alextangle.tangle import (
    Braid, Cap, Cup, IllFormedError, TangleWord, inclusion_matrix, rho_braid, rho_cap, rho_cup,
    rho_identity, rho_word, validate,
)

TREFOIL = TangleWord((1,), (Cup(1, (1, -1)), Braid(1), Braid(1), Braid(1), Cap(1, (1, -1))))


def test_validate_examples():
    assert validate(TREFOIL) == (1,)
    with pytest.raises(IllFormedError) as info:
        validate(TangleWord((1, 1), (Cap(0, (1, -1)),)))
    assert info.value.index == 0
    assert validate(TangleWord((1, -1))) == (1, -1)


def test_validate_rejections():
    with pytest.raises(ValueError):
        Cup(0, (1, 1))
    with pytest.raises(IllFormedError):
        validate(TangleWord((1,), (Braid(1),)))
    with pytest.raises(IllFormedError):
        validate(TangleWord((1, -1), (Cap(0, (1, -1)),)))  # would leave nothing
    with pytest.raises(IllFormedError):
        validate(TangleWord((1, -1, 1), (Cap(0, (-1, 1)),)))  # orientation mismatch
    with pytest.raises(IllFormedError):
        validate(TangleWord((1,), (Cup(2, (1, -1)),)))
    with pytest.raises(IllFormedError) as info:
        validate(TangleWord((1,), (Cup(1, (1, -1)), Braid(3))))
    assert info.value.index == 1


def test_then_composes():
    a = TangleWord((1,), (Cup(1, (1, -1)), Braid(1)))
    b = TangleWord((1, 1, -1), (Braid(1), Braid(1), Cap(1, (1, -1))))
    assert a.then(b).letters == TREFOIL.letters
    with pytest.raises(ValueError):
        a.then(a)


def test_identity():
    assert rho_identity((1,)).blocks == (RingMatrix.identity(1),)
    f = rho_identity((1, -1))
    assert f.blocks[1] == RingMatrix.identity(1)
    g = rho_word(TREFOIL)
    assert graded_map_eq(graded_map_compose(rho_identity((1,)), g), g)


def test_braid_blocks():
    for signs in itertools.product((1, -1), repeat=4):
        for i in (1, 2, 3):
            for e in (1, -1):
                f = rho_braid(signs, i, e)
                assert f.blocks[0][0, 0].is_unit()
                assert f.blocks[-1] == RingMatrix.identity(1)
    assert rho_braid((1, 1), 1).blocks[1] == RingMatrix.identity(1)


def test_braid_relations_on_rho():
    # exact equality: both sides come from one groupoid morphism
    for signs in itertools.product((1, -1), repeat=4):
        for i in (1, 2):
            a = TangleWord(signs, (Braid(i), Braid(i + 1), Braid(i)))
            b = TangleWord(signs, (Braid(i + 1), Braid(i), Braid(i + 1)))
            assert rho_word(a, normalize=False) == rho_word(b, normalize=False)


def test_word_times_inverse(rng):
    for _ in range(20):
        m = rng.randint(2, 5)
        signs = tuple(rng.choice((1, -1)) for _ in range(m))
        letters = [Braid(rng.randint(1, m - 1), rng.choice((1, -1))) for _ in range(rng.randint(1, 6))]
        mirror = [Braid(x.i, -x.sign) for x in reversed(letters)]
        w = TangleWord(signs, tuple(letters + mirror))
        assert graded_map_eq(rho_word(w), identity_map(m - 1))


def test_empty_word_is_identity():
    assert graded_map_eq(rho_word(TangleWord((1, -1, 1))), identity_map(2))


def test_bare_cup_on_one_point():
    f = rho_cup((1,), 1, (1, -1))
    assert (f.source_rank, f.target_rank) == (0, 2)
    col = list(f.blocks[0].column(0))
    assert sum(1 for x in col if x) == 1 and all(x.is_unit() for x in col if x)


def test_cap_kills_degree_zero():
    f = rho_cap((1, 1, -1), 1, (1, -1))
    assert (f.source_rank, f.target_rank) == (2, 0)
    assert f.blocks[0].is_zero()


def test_trefoil():
    assert eq_up_to_unit(rho_word(TREFOIL).blocks[0][0, 0], poly(1, -1, 1))


def test_inclusion_matrix():
    inc = inclusion_matrix(3, 1)
    assert inc.shape == (4, 2)
    assert list(inc.column(0)) == [ONE, ONE, ONE, ZERO]
    assert list(inc.column(1)) == [ZERO, ZERO, ZERO, ONE]


def _cup_cap_cases(m):
    for signs in itertools.product((1, -1), repeat=m):
        for j in range(m + 1):
            for o in ((1, -1), (-1, 1)):
                yield TangleWord(signs, (Cup(j, o),))
        for j in range(m - 1):
            if m > 2 and signs[j] != signs[j + 1]:
                yield TangleWord(signs, (Cap(j, signs[j:j + 2]),))


def test_cup_cap_match_plat_engine_exhaustive():
    for m in range(1, 5):
        for w in _cup_cap_cases(m):
            assert graded_map_eq(rho_word(w), rho_plat(plat_from_word(w))), w


def test_cup_cap_match_plat_engine_sampled():
    rng = random.Random(7)
    for m in (5, 6):
        cases = list(_cup_cap_cases(m))
        for w in rng.sample(cases, 12):
            assert graded_map_eq(rho_word(w), rho_plat(plat_from_word(w))), w
