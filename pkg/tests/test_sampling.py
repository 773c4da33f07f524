import random

from alextangle.sampling import random_braid, random_plat, random_word
from alextangle.tangle import validate


def test_random_plat_respects_bounds():
    rng = random.Random(0)
    for _ in range(200):
        pd = random_plat(rng, max_strands=6, max_length=8)
        assert 1 <= pd.strands <= 6 and len(pd.braid) <= 8


def test_random_plat_with_fixed_bottom():
    rng = random.Random(1)
    for bottom in [(1,), (1, -1, -1), (-1, 1, 1, 1)]:
        for _ in range(20):
            assert random_plat(rng, 6, 4, bottom=bottom).bottom == bottom


def test_random_word_is_valid():
    rng = random.Random(2)
    for _ in range(200):
        w = random_word(rng, (1, -1)[: rng.randint(1, 2)], rng.randint(0, 8), max_width=5)
        validate(w)
        width = len(w.bottom)
        for x in w.letters:
            width += {"Cup": 2, "Cap": -2}.get(type(x).__name__, 0)
            assert width <= 5


def test_random_braid():
    rng = random.Random(3)
    assert len(random_braid(rng, 1, 5)) == 0
    w = random_braid(rng, 4, 7)
    assert w.strand_count == 4 and len(w) == 7
