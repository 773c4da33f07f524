import itertools

import pytest

from alextangle.burau import (
    BraidWord, burau_generator, burau_word, parse_braid, parse_signs, permute_signs, render_signs,
)
from alextangle.laurent import ONE, T, ZERO, divexact, monomial
from alextangle.matrix import RingMatrix, det


def all_signs(m):
    return itertools.product((1, -1), repeat=m)


# --- Fox calculus reference ------------------------------------------------
# Words in the free group on the bottom loops x_0 .. x_{m-1} are lists of
# (generator, +-1).  A loop around a puncture of sign e is weighted t^e.

def fox_vector(word, chi):
    m = len(chi)
    out = [ZERO] * m
    prefix = ONE
    for g, e in word:
        if e > 0:
            out[g] = out[g] + prefix
            prefix = prefix * chi[g]
        else:
            prefix = prefix * chi[g] ** -1
            out[g] = out[g] - prefix
    return out


def artin_image(m, i, crossing):
    """Top loops as words in bottom loops for s_i (crossing=+1) or its inverse."""
    a, b = i - 1, i
    images = {k: [(k, 1)] for k in range(m)}
    if crossing > 0:
        images[a] = [(a, 1), (b, 1), (a, -1)]
        images[b] = [(a, 1)]
    else:
        images[a] = [(b, 1)]
        images[b] = [(b, -1), (a, 1), (b, 1)]
    return images


def fox_burau(signs, i, crossing):
    m = len(signs)
    chi = [monomial(1, s) for s in signs]
    top = list(signs)
    top[i - 1], top[i] = top[i], top[i - 1]
    images = artin_image(m, i, crossing)

    def lift(k, sign):
        # lift of the loop around top puncture k, oriented to map to t
        word = images[k] if sign > 0 else [(g, -e) for g, e in reversed(images[k])]
        return fox_vector(word, chi)

    scale = [ONE if s > 0 else -T for s in signs]  # bottom lifts z_j = scale_j * e_j
    columns = []
    for c in range(m - 1):
        v = [x - y for x, y in zip(lift(c, top[c]), lift(c + 1, top[c + 1]))]
        coords, acc = [], ZERO
        for k in range(m):
            acc = acc + divexact(v[k], scale[k])
            coords.append(acc)
        assert coords[-1] == ZERO
        columns.append(coords[:-1])
    return RingMatrix.from_columns(columns, m - 1)


def test_generator_matches_fox_calculus():
    for m in range(2, 6):
        for signs in all_signs(m):
            for i in range(1, m):
                for crossing in (1, -1):
                    assert burau_generator(signs, i, crossing).matrix == fox_burau(signs, i, crossing), \
                        (signs, i, crossing)


def test_all_positive_example():
    b = burau_generator((1, 1, 1), 1).matrix
    assert b == RingMatrix.from_rows([[-T, ONE], [ZERO, ONE]])
    assert burau_word((1, 1), parse_braid("s1^3")).matrix == RingMatrix.from_rows([[-T**3]])


def test_mixed_sign_block():
    # exponent comes from the strand leaving position i-1
    b = burau_generator((1, -1, 1, -1), 2).matrix
    a = monomial(1, -1)
    assert b.row(1) == (a, -a, ONE)
    assert b.row(0) == (ONE, ZERO, ZERO) and b.row(2) == (ZERO, ZERO, ONE)


def test_generator_target_and_inverse():
    for m in range(2, 6):
        for signs in all_signs(m):
            for i in range(1, m):
                g = burau_generator(signs, i, 1)
                assert g.target == permute_signs(signs, BraidWord(m, ((i, 1),)))
                h = burau_generator(g.target, i, -1)
                assert h.target == g.source
                assert (g @ h).matrix == RingMatrix.identity(m - 1)
                n = burau_generator(signs, i, -1)
                assert (n @ burau_generator(n.target, i, 1)).matrix == RingMatrix.identity(m - 1)
                d = det(g.matrix)
                assert d.is_unit() and len(d.terms()) == 1


def test_braid_relations_exhaustive():
    for m in range(3, 6):
        for signs in all_signs(m):
            for i in range(1, m - 1):
                for e in (1, -1):
                    lhs = BraidWord(m, ((i, e), (i + 1, e), (i, e)))
                    rhs = BraidWord(m, ((i + 1, e), (i, e), (i + 1, e)))
                    assert burau_word(signs, lhs) == burau_word(signs, rhs)
                mixed_l = BraidWord(m, ((i, 1), (i + 1, 1), (i, -1)))
                mixed_r = BraidWord(m, ((i + 1, -1), (i, 1), (i + 1, 1)))
                assert burau_word(signs, mixed_l) == burau_word(signs, mixed_r)


def test_far_commutation_exhaustive():
    for m in range(4, 6):
        for signs in all_signs(m):
            for i in range(1, m):
                for j in range(i + 2, m):
                    for e, f in itertools.product((1, -1), repeat=2):
                        a = BraidWord(m, ((i, e), (j, f)))
                        b = BraidWord(m, ((j, f), (i, e)))
                        assert burau_word(signs, a) == burau_word(signs, b)


def test_word_inverse_is_identity(rng):
    for _ in range(30):
        m = rng.randint(2, 6)
        signs = tuple(rng.choice((1, -1)) for _ in range(m))
        w = BraidWord(m, tuple((rng.randint(1, m - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))))
        f = burau_word(signs, w)
        g = burau_word(f.target, w.inverse())
        assert (f @ g).matrix == RingMatrix.identity(m - 1)
        assert g.target == signs


def test_empty_word_and_multiplicativity(rng):
    assert burau_word((1, -1, 1), BraidWord(3)).matrix == RingMatrix.identity(2)
    for _ in range(20):
        m = rng.randint(2, 5)
        signs = tuple(rng.choice((1, -1)) for _ in range(m))
        v = BraidWord(m, tuple((rng.randint(1, m - 1), rng.choice((1, -1))) for _ in range(4)))
        w = BraidWord(m, tuple((rng.randint(1, m - 1), rng.choice((1, -1))) for _ in range(4)))
        bv = burau_word(signs, v)
        assert burau_word(signs, v * w).matrix == bv.matrix @ burau_word(bv.target, w).matrix


def test_errors():
    with pytest.raises(ValueError):
        burau_generator((1, 1), 2)
    with pytest.raises(ValueError):
        burau_generator((1, 1), 0)
    with pytest.raises(ValueError):
        BraidWord(2, ((2, 1),))
    with pytest.raises(ValueError):
        burau_word((1, 1), BraidWord(3))
    with pytest.raises(ValueError):
        parse_signs("+x")


def test_braid_text():
    w = parse_braid("s1 s2^-1 s1^3")
    assert w.strand_count == 3
    assert w.letters == ((1, 1), (2, -1), (1, 1), (1, 1), (1, 1))
    assert parse_braid(str(w), 3) == w
    assert parse_braid("", 4) == BraidWord(4)
    assert parse_braid("s1^-2").letters == ((1, -1), (1, -1))
    assert render_signs(parse_signs("+-, +")) == "+-+"
    with pytest.raises(ValueError):
        parse_braid("t1")


def test_permutation():
    w = parse_braid("s1 s2", 3)
    assert w.permutation() == (1, 2, 0)
    assert permute_signs((1, -1, -1), w) == (-1, -1, 1)
