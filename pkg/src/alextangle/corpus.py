"""Known knots and links as (1,1)-tangles, with oracle-derived expected polynomials.

The shipped ``data/corpus.json`` is produced by :func:`build_corpus`; every
expected value comes from :func:`alextangle.oracle.closed_braid_oracle` and
names the braid it was computed from.
"""

from __future__ import annotations

import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path

from .burau import BraidWord, parse_braid
from .laurent import LaurentPoly, eq_up_to_unit, parse_poly, render
from .oracle import closed_braid_oracle
from .parse import parse_plat, parse_tangle_word, render_plat, render_tangle_word
from .plat import PlatDescription, plat_from_word, rho_plat
from .tangle import Braid, Cap, Cup, TangleWord, rho_word

__all__ = [
    "CorpusEntry",
    "closed_braid_word",
    "KNOWN_BRAIDS",
    "build_corpus",
    "load_corpus",
    "save_corpus",
    "run_entry",
    "run_corpus",
]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str
    input: str
    expected: str
    provenance: str


def closed_braid_word(braid: BraidWord) -> TangleWord:
    """A (1,1)-tangle whose closure is the closure of ``braid``.

    Strand 0 is cut open; strands ``1 .. n-1`` are closed by nested
    cups below and caps above.
    """
    n = braid.strand_count
    cups = [Cup(j, (1, -1)) for j in range(1, n)]
    caps = [Cap(j, (1, -1)) for j in range(n - 1, 0, -1)]
    return TangleWord((1,), tuple(cups + [Braid(i, e) for i, e in braid.letters] + caps))


# Name, braid, strand count.  Plat entries are added for the first few.
KNOWN_BRAIDS = [
    ("unknot", "", 1),
    ("unknot (one-crossing closure)", "s1", 2),
    ("trefoil", "s1 s1 s1", 2),
    ("mirror trefoil", "s1^-1 s1^-1 s1^-1", 2),
    ("figure-eight", "s1 s2^-1 s1 s2^-1", 3),
    ("5_1", "s1^5", 2),
    ("5_2", "s1^3 s2 s1^-1 s2", 3),
    ("6_1", "s1^2 s2 s1^-1 s3^-1 s2 s3^-1", 4),
    ("6_2", "s1^3 s2^-1 s1 s2^-1", 3),
    ("6_3", "s1^2 s2^-1 s1 s2^-2", 3),
    ("Hopf link", "s1 s1", 2),
    ("split two-component link", "", 2),
]

_PLAT_NAMES = {"trefoil", "figure-eight", "5_2", "Hopf link", "split two-component link"}


def _provenance(braid: BraidWord) -> str:
    return f"closed_braid_oracle(strands={braid.strand_count}, braid='{braid}')"


_PROVENANCE = re.compile(r"closed_braid_oracle\(strands=(\d+), braid='([^']*)'\)")


def build_corpus() -> list[CorpusEntry]:
    entries = []
    for name, text, n in KNOWN_BRAIDS:
        braid = parse_braid(text, n)
        expected = render(closed_braid_oracle(braid))
        word = closed_braid_word(braid)
        entries.append(CorpusEntry(name, "word", render_tangle_word(word), expected, _provenance(braid)))
        if name in _PLAT_NAMES:
            pd = plat_from_word(word)
            entries.append(CorpusEntry(f"{name} (plat)", "plat", render_plat(pd), expected, _provenance(braid)))
    return entries


def regenerate_expected(entry: CorpusEntry) -> str:
    m = _PROVENANCE.fullmatch(entry.provenance)
    if not m:
        raise ValueError(f"unrecognised provenance {entry.provenance!r}")
    return render(closed_braid_oracle(parse_braid(m.group(2), int(m.group(1)))))


def default_path():
    return resources.files("alextangle").joinpath("data/corpus.json")


def load_corpus(path=None) -> list[CorpusEntry]:
    source = Path(path).read_text() if path else default_path().read_text()
    return [CorpusEntry(**item) for item in json.loads(source)]


def save_corpus(entries, path) -> None:
    Path(path).write_text(json.dumps([asdict(e) for e in entries], indent=2) + "\n")


def compute_polynomial(kind: str, text: str) -> LaurentPoly:
    """The degree-0 entry of rho for a (1,1) input."""
    if kind == "word":
        rho = rho_word(parse_tangle_word(text))
    elif kind == "plat":
        rho = rho_plat(parse_plat(text))
    else:
        raise ValueError(f"unknown corpus kind {kind!r}")
    if (rho.source_rank, rho.target_rank) != (0, 0):
        raise ValueError("corpus inputs must be (1,1)-tangles")
    return rho.blocks[0][0, 0]


def run_entry(entry: CorpusEntry) -> tuple[str, bool, str]:
    got = compute_polynomial(entry.kind, entry.input)
    return entry.name, eq_up_to_unit(got, parse_poly(entry.expected)), render(got)


def run_corpus(entries, jobs: int | None = None) -> list[tuple[str, bool, str]]:
    entries = list(entries)
    if jobs == 1:
        return [run_entry(e) for e in entries]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_entry, entries))
