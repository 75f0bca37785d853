"""Command line front end: ``b3geo <command> ...``.

Exit status is 0 on success, 1 for bad input (unparseable word, unknown
form) and 2 when a verification (``selftest``, ``growth --verify``) fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import acceptance
from .automata import build_geodesic_dfa, build_sl_dfa, count_words, to_dot, to_json
from .cayley import ball, export_dot
from .fingerprint import bfs_ball, geodesic_word_counts
from .geodesics import check, translation_length
from .normal_forms import element_length, equal, normalize
from .series import geodesic_gf_closed_form, gf_from_dfa, series_coefficients, spherical_gf_closed_form
from .words import WordError, parse

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2


def _word(text: str) -> str:
    return parse(text)


def cmd_geodesic(args) -> int:
    w = _word(args.word)
    report = check(w)
    print("true" if report.geodesic else "false")
    for line in report.describe(w):
        print(f"  {line}")
    return EXIT_OK


def cmd_normalize(args) -> int:
    print(normalize(_word(args.word), args.form))
    return EXIT_OK


def cmd_equal(args) -> int:
    print("true" if equal(_word(args.first), _word(args.second)) else "false")
    return EXIT_OK


def cmd_length(args) -> int:
    print(element_length(_word(args.word)))
    return EXIT_OK


def cmd_translation_length(args) -> int:
    print(translation_length(_word(args.word)))
    return EXIT_OK


def growth_terms(kind: str, source: str, n: int) -> list[int]:
    if source == "formula":
        f = geodesic_gf_closed_form() if kind == "geodesic" else spherical_gf_closed_form()
        return series_coefficients(f, n)
    if source == "dfa":
        d = build_geodesic_dfa() if kind == "geodesic" else build_sl_dfa()
        return [count_words(d, k) for k in range(n + 1)]
    table = bfs_ball(n)
    if kind == "geodesic":
        return geodesic_word_counts(table, n)
    return list(table.counts)


def cmd_growth(args) -> int:
    if args.verify:
        ok = True
        for source in ("formula", "dfa", "bruteforce"):
            terms = growth_terms(args.kind, source, args.terms)
            print(f"{source:>10}: {' '.join(map(str, terms))}")
            ok &= terms == growth_terms(args.kind, "formula", args.terms)
        d = build_geodesic_dfa() if args.kind == "geodesic" else build_sl_dfa()
        f = gf_from_dfa(d)
        closed = geodesic_gf_closed_form() if args.kind == "geodesic" else spherical_gf_closed_form()
        print(f"dfa series: {f}")
        ok &= f == closed
        print("agree" if ok else "MISMATCH")
        return EXIT_OK if ok else EXIT_VERIFY
    terms = growth_terms(args.kind, args.source, args.terms)
    if args.csv:
        print("n,count")
        for n, c in enumerate(terms):
            print(f"{n},{c}")
    else:
        for c in terms:
            print(c)
    return EXIT_OK


def cmd_fsa(args) -> int:
    d = build_geodesic_dfa() if args.language == "geodesic" else build_sl_dfa()
    text = to_dot(d) if args.export == "dot" else to_json(d) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_cayley_ball(args) -> int:
    g = ball(args.radius)
    for n, c in enumerate(g.counts):
        print(f"{n} {c}")
    print(f"vertices {len(g.distances)}")
    if args.dot:
        Path(args.dot).write_text(export_dot(g), encoding="utf-8")
    return EXIT_OK


def cmd_selftest(args) -> int:
    bounds = acceptance.FULL if args.full else acceptance.FAST
    if args.max_len is not None:
        bounds = bounds.capped(args.max_len)
    only = [int(x) for x in args.only.split(",")] if args.only else None
    results = acceptance.run_all(bounds, only, echo=lambda s: print(s, flush=True))
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="b3geo", description="Geodesics and normal forms in B3.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("geodesic", help="is the word geodesic?")
    s.add_argument("word")
    s.set_defaults(func=cmd_geodesic)

    s = sub.add_parser("normalize", help="print a normal form")
    s.add_argument("--form", default="sl", metavar="{cf,rg,sl,tf}")
    s.add_argument("word")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("equal", help="do two words name the same element?")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("length", help="word-metric length of the element")
    s.add_argument("word")
    s.set_defaults(func=cmd_length)

    s = sub.add_parser("translation-length", help="stable length of the element")
    s.add_argument("word")
    s.set_defaults(func=cmd_translation_length)

    s = sub.add_parser("growth", help="growth series coefficients")
    s.add_argument("--kind", choices=("geodesic", "spherical"), default="geodesic")
    s.add_argument("--terms", type=int, default=12, help="largest n printed")
    s.add_argument("--source", choices=("formula", "dfa", "bruteforce"), default="formula")
    s.add_argument("--csv", action="store_true", help="print n,count rows")
    s.add_argument("--verify", action="store_true", help="compare all three sources")
    s.set_defaults(func=cmd_growth)

    s = sub.add_parser("fsa", help="export an automaton")
    s.add_argument("--language", choices=("geodesic", "shortlex"), default="geodesic")
    s.add_argument("--export", choices=("dot", "json"), default="json")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_fsa)

    s = sub.add_parser("cayley-ball", help="ball in the Cayley graph")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--dot", help="write the ball as Graphviz to this file")
    s.set_defaults(func=cmd_cayley_ball)

    s = sub.add_parser("selftest", help="run the acceptance checks")
    s.add_argument("--max-len", type=int, default=None, help="cap on exhaustive word lengths")
    s.add_argument("--full", action="store_true", help="full bounds (length 12, slow)")
    s.add_argument("--only", help="comma separated criterion numbers")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "terms", 0) < 0 or getattr(args, "radius", 0) < 0:
        print("error: counts must be non-negative", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        return args.func(args)
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
