"""Command-line interface: ``alextangle {word,plat,oracle,selftest,corpus}``.

Results are printed as JSON.  Exit status 1 means the input was rejected,
2 means an internal check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .alexander import GradedMap
from .burau import parse_braid, parse_signs
from .corpus import load_corpus, regenerate_expected, run_corpus, save_corpus
from .exterior import index_sets
from .laurent import LaurentPoly, normalize, render
from .oracle import closed_braid_oracle, closure_components
from .parse import ParseError, parse_plat, parse_tangle_word
from .plat import PlatDescription, rho_plat
from .selftest import run_selftest
from .tangle import IllFormedError, rho_word, validate

__all__ = ["main", "graded_map_json", "symmetric_form"]


class InputError(Exception):
    pass


def symmetric_form(p: LaurentPoly) -> str | None:
    """``p`` shifted so its exponents are balanced around 0, when that is possible."""
    canonical, _ = normalize(p)
    if not canonical or canonical.max_exp % 2:
        return None
    return render(canonical.shift(-canonical.max_exp // 2))


def graded_map_json(rho: GradedMap, normalized: bool, degree: int | None = None) -> dict:
    grades = []
    for i, block in enumerate(rho.blocks):
        if degree is not None and i != degree:
            continue
        grades.append({
            "i": i,
            "rows": block.rows,
            "cols": block.cols,
            # Index sets are 1-based here, as in the usual written notation.
            "row_basis": [[a + 1 for a in s] for s in index_sets(rho.target_rank, i + rho.shift)],
            "col_basis": [[a + 1 for a in s] for s in index_sets(rho.source_rank, i)],
            "matrix": [[render(x) for x in block.row(r)] for r in range(block.rows)],
        })
    out = {
        "source_rank": rho.source_rank,
        "target_rank": rho.target_rank,
        "shift": rho.shift,
        "grades": grades,
        "unit_normalized": normalized,
    }
    if (rho.source_rank, rho.target_rank) == (0, 0):
        p = rho.blocks[0][0, 0]
        out["alexander_polynomial"] = render(normalize(p)[0])
        out["alexander_polynomial_symmetric"] = symmetric_form(p)
    return out


def _read_text(args) -> str:
    if args.file:
        with open(args.file) as fh:
            return fh.read()
    if args.text is None:
        raise InputError("give the input as an argument or with --file")
    return args.text


def _cmd_word(args) -> int:
    try:
        word = parse_tangle_word(_read_text(args))
        validate(word)
    except (ParseError, IllFormedError, InputError, ValueError) as exc:
        raise InputError(str(exc)) from None
    rho = rho_word(word, normalize=args.normalize)
    _emit(graded_map_json(rho, args.normalize, args.degree))
    return 0


def _cmd_plat(args) -> int:
    try:
        if args.text is not None or args.file:
            pd = parse_plat(_read_text(args))
        else:
            if args.signs is None or args.bottom_ends is None or args.top_ends is None:
                raise InputError("plat needs --signs, --bottom-ends and --top-ends (or a text form)")
            signs = parse_signs(args.signs)
            strands = args.strands if args.strands is not None else len(signs)
            pd = PlatDescription(parse_braid(args.braid, strands), signs, args.bottom_ends, args.top_ends)
    except (ParseError, InputError, ValueError) as exc:
        raise InputError(str(exc)) from None
    rho = rho_plat(pd, normalize=args.normalize)
    _emit(graded_map_json(rho, args.normalize, args.degree))
    return 0


def _cmd_oracle(args) -> int:
    try:
        braid = parse_braid(args.braid, args.strands)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    p = closed_braid_oracle(braid)
    _emit({
        "strands": braid.strand_count,
        "components": closure_components(braid),
        "alexander_polynomial": render(p),
        "alexander_polynomial_symmetric": symmetric_form(p),
    })
    return 0


def _cmd_selftest(args) -> int:
    results = run_selftest(args.seed)
    for name, ok, detail, seconds in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name:<26} {seconds:6.2f}s  {detail}")
    return 0 if all(ok for _, ok, _, _ in results) else 2


def _cmd_corpus(args) -> int:
    try:
        entries = load_corpus(args.file)
    except (OSError, ValueError, TypeError) as exc:
        raise InputError(f"cannot read corpus: {exc}") from None
    if args.regenerate:
        if not args.file:
            raise InputError("--regenerate needs --file")
        from dataclasses import replace
        save_corpus([replace(e, expected=regenerate_expected(e)) for e in entries], args.file)
        print(f"regenerated {len(entries)} entries")
        return 0
    results = run_corpus(entries, args.jobs)
    for (name, ok, got), entry in zip(results, entries):
        print(f"{'PASS' if ok else 'FAIL'}  {name:<36} expected {entry.expected:<32} got {got}")
    failed = sum(1 for _, ok, _ in results if not ok)
    print(f"{len(results) - failed}/{len(results)} passed")
    return 0 if not failed else 1


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alextangle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        p.add_argument("--normalize", action=argparse.BooleanOptionalAction, default=True,
                       help="rescale by a unit so the first nonzero entry is canonical (default on)")
        p.add_argument("--degree", type=int, default=None, metavar="I", help="print only block I")
        p.add_argument("--file", help="read the input text from a file")

    p = sub.add_parser("word", help="invariant of a tangle word")
    p.add_argument("text", nargs="?", help="e.g. 'bottom:+ ; cup@1(+-) ; s1 ; s1 ; s1 ; cap@1(+-)'")
    output_flags(p)
    p.set_defaults(func=_cmd_word)

    p = sub.add_parser("plat", help="invariant of a plat description")
    p.add_argument("text", nargs="?", help="e.g. 'signs=++- ; braid=s1 s1 s1 ; bottom=1 ; top=1'")
    p.add_argument("--strands", type=int)
    p.add_argument("--signs")
    p.add_argument("--braid", default="")
    p.add_argument("--bottom-ends", type=int)
    p.add_argument("--top-ends", type=int)
    output_flags(p)
    p.set_defaults(func=_cmd_plat)

    p = sub.add_parser("oracle", help="Alexander polynomial of a closed braid")
    p.add_argument("--braid", required=True)
    p.add_argument("--strands", type=int)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("selftest", help="run the built-in consistency checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("corpus", help="check the known-knot corpus")
    p.add_argument("--file", help="corpus JSON (default: the shipped one)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (1 runs inline)")
    p.add_argument("--regenerate", action="store_true", help="rewrite expected values from the oracle")
    p.set_defaults(func=_cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # anything else is our bug, not the user's
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
