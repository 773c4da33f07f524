import json

from alextangle.corpus import (
    KNOWN_BRAIDS, build_corpus, closed_braid_word, load_corpus, regenerate_expected, run_corpus,
)
from alextangle.burau import parse_braid
from alextangle.laurent import parse_poly
from alextangle.oracle import closed_braid_oracle
from alextangle.parse import parse_plat, parse_tangle_word
from alextangle.tangle import validate


def test_shipped_corpus_matches_builder():
    shipped = load_corpus()
    assert shipped == build_corpus()
    assert {e.kind for e in shipped} == {"word", "plat"}
    assert len(shipped) >= len(KNOWN_BRAIDS)


def test_entries_are_valid_and_oracle_backed():
    for e in load_corpus():
        parse_poly(e.expected)
        if e.kind == "word":
            assert validate(parse_tangle_word(e.input)) == (1,)
        else:
            pd = parse_plat(e.input)
            assert pd.m_minus == pd.m_plus == 1
        assert e.provenance.startswith("closed_braid_oracle(")
        assert regenerate_expected(e) == e.expected


def test_run_corpus_inline_and_parallel():
    entries = load_corpus()
    inline = run_corpus(entries, jobs=1)
    assert all(ok for _, ok, _ in inline)
    assert run_corpus(entries[:4], jobs=2) == inline[:4]


def test_closed_braid_word():
    w = closed_braid_word(parse_braid("s1 s2^-1 s1 s2^-1", 3))
    assert w.bottom == (1,)
    assert validate(w) == (1,)
    assert len(w.letters) == 2 + 4 + 2


def test_corpus_file_schema(tmp_path):
    from alextangle.corpus import default_path
    data = json.loads(default_path().read_text())
    for item in data:
        assert set(item) == {"name", "kind", "input", "expected", "provenance"}
