"""Quick end-to-end consistency checks run by ``alextangle selftest``."""

from __future__ import annotations

import itertools
import random
import time
from typing import Callable

from .alexander import graded_map_compose, graded_map_eq
from .burau import BraidWord, burau_word
from .corpus import closed_braid_word
from .laurent import eq_up_to_unit
from .oracle import closed_braid_oracle
from .plat import canonical_word, glue, hilden_bottom, hilden_generators, hilden_top, rho_plat, stabilize
from .sampling import random_braid, random_plat
from .tangle import rho_word

__all__ = ["CHECKS", "run_selftest"]


def check_braid_relations(max_strands: int = 5) -> str:
    count = 0
    for m in range(3, max_strands + 1):
        for signs in itertools.product((1, -1), repeat=m):
            for i in range(1, m - 1):
                a = BraidWord(m, ((i, 1), (i + 1, 1), (i, 1)))
                b = BraidWord(m, ((i + 1, 1), (i, 1), (i + 1, 1)))
                if burau_word(signs, a) != burau_word(signs, b):
                    raise AssertionError(f"braid relation fails at s{i} on {signs}")
                count += 1
            for i in range(1, m):
                for j in range(i + 2, m):
                    a = BraidWord(m, ((i, 1), (j, 1)))
                    b = BraidWord(m, ((j, 1), (i, 1)))
                    if burau_word(signs, a) != burau_word(signs, b):
                        raise AssertionError(f"far commutation fails at s{i}, s{j} on {signs}")
                    count += 1
    return f"{count} relations"


def check_plat_vs_word(rng: random.Random, samples: int = 60) -> str:
    for _ in range(samples):
        pd = random_plat(rng)
        if not graded_map_eq(rho_plat(pd), rho_word(canonical_word(pd))):
            raise AssertionError(f"plat and word disagree on {pd}")
    return f"{samples} plats"


def check_moves(rng: random.Random, samples: int = 40) -> str:
    for _ in range(samples):
        pd = random_plat(rng, min_strands=3)
        moves = [stabilize(pd)]
        if pd.n_minus:
            h = rng.choice(hilden_generators(pd.m_minus, pd.n_minus))
            moves.append(hilden_bottom(pd, rng.choice((h, h.inverse()))))
        if pd.n_plus:
            h = rng.choice(hilden_generators(pd.m_plus, pd.n_plus))
            moves.append(hilden_top(pd, rng.choice((h, h.inverse()))))
        base = rho_plat(pd)
        for moved in moves:
            if not graded_map_eq(base, rho_plat(moved)):
                raise AssertionError(f"invariance fails on {pd}")
    return f"{samples} plats"


def check_gluing(rng: random.Random, samples: int = 30) -> str:
    for _ in range(samples):
        lower = random_plat(rng, 5, 6)
        upper = random_plat(rng, 5, 6, bottom=lower.top)
        expected = graded_map_compose(rho_plat(lower, False), rho_plat(upper, False))
        if not graded_map_eq(rho_plat(glue(lower, upper)), expected):
            raise AssertionError(f"gluing fails on {lower} / {upper}")
    return f"{samples} pairs"


def check_oracle(rng: random.Random, samples: int = 20) -> str:
    for _ in range(samples):
        n = rng.randint(1, 4)
        braid = random_braid(rng, n, rng.randint(0, 7))
        got = rho_word(closed_braid_word(braid)).blocks[0][0, 0]
        if not eq_up_to_unit(got, closed_braid_oracle(braid)):
            raise AssertionError(f"oracle disagrees on the closure of '{braid}' ({n} strands)")
    return f"{samples} closed braids"


CHECKS: list[tuple[str, Callable]] = [
    ("burau braid relations", lambda rng: check_braid_relations()),
    ("plat vs word", check_plat_vs_word),
    ("hilden and stabilization", check_moves),
    ("gluing", check_gluing),
    ("closed-braid oracle", check_oracle),
]


def run_selftest(seed: int = 0) -> list[tuple[str, bool, str, float]]:
    results = []
    for name, check in CHECKS:
        rng = random.Random(seed)
        start = time.perf_counter()
        try:
            detail, ok = check(rng), True
        except AssertionError as exc:
            detail, ok = str(exc), False
        results.append((name, ok, detail, time.perf_counter() - start))
    return results
