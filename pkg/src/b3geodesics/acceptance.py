"""The acceptance checks, runnable from tests and from ``b3geo selftest``.

Each check compares algorithms against the matrix oracle or against each
other and returns a :class:`CheckResult`. Bounds live in :class:`Bounds` so a
quick profile and the full one share the code.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, replace
from typing import Callable

from .automata import build_geodesic_dfa, build_sl_dfa, count_words, flag_report
from .cayley import ORIGIN as CF_ORIGIN
from .cayley import ball, fold
from .fingerprint import (
    GENERATOR_MATRICES,
    Fingerprint,
    bfs_ball,
    distance,
    fingerprint,
    geodesic_word_counts,
    mat_mul,
)
from .fingerprint import ORIGIN as FP_ORIGIN
from .geodesics import is_geodesic, translation_fixed_point, translation_length
from .normal_forms import all_cf_words, all_rg_forms, phi1, phi2, shortlex
from .series import (
    geodesic_gf_closed_form,
    gf_from_dfa,
    series_coefficients,
    spherical_gf_closed_form,
)
from .words import ALPHABET, cyclic_permutations, free_reduce, invert, power


@dataclass(frozen=True)
class Bounds:
    growth_terms: int = 12
    cf_prefix: int = 10
    cf_levels: int = 3
    rg_length: int = 10
    length_law: int = 12
    predicate_length: int = 10
    tau_samples: int = 1000
    tau_word: int = 8
    conjugator: int = 4
    tau_radius: int = 12
    cayley_samples: int = 100_000
    cayley_word: int = 20
    ball_radius: int = 10
    seed: int = 20240917

    def capped(self, max_len: int) -> "Bounds":
        """Cap every exhaustive word length at ``max_len``."""
        return replace(
            self,
            growth_terms=min(self.growth_terms, max_len),
            cf_prefix=min(self.cf_prefix, max_len),
            rg_length=min(self.rg_length, max_len),
            length_law=min(self.length_law, max_len),
            predicate_length=min(self.predicate_length, max_len),
            tau_radius=min(self.tau_radius, max(max_len, 6)),
            ball_radius=min(self.ball_radius, max_len),
        )


FULL = Bounds()
FAST = Bounds(length_law=10, cayley_samples=20_000)


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} criterion {self.number}: {self.title} ({self.detail}) [{self.seconds:.1f}s]"


# ---------------------------------------------------------------------------
# the checks


def check_geodesic_growth(b: Bounds) -> CheckResult:
    n = b.growth_terms
    brute = geodesic_word_counts(bfs_ball(n), n)
    dfa = build_geodesic_dfa()
    by_dfa = [count_words(dfa, k) for k in range(n + 1)]
    closed = series_coefficients(geodesic_gf_closed_form(), n)
    ok = brute == by_dfa == closed
    detail = f"n<={n}: {closed[:5]}..." if ok else f"brute={brute} dfa={by_dfa} formula={closed}"
    return CheckResult(1, "geodesic growth coefficients agree three ways", ok, detail)


def check_geodesic_gf(b: Bounds) -> CheckResult:
    f = gf_from_dfa(build_geodesic_dfa())
    ok = f == geodesic_gf_closed_form()
    return CheckResult(2, "geodesic DFA generating function equals the closed form", ok, str(f))


def check_spherical(b: Bounds) -> CheckResult:
    n = b.growth_terms
    bfs = list(bfs_ball(n).counts)
    sl = build_sl_dfa()
    by_dfa = [count_words(sl, k) for k in range(n + 1)]
    closed = series_coefficients(spherical_gf_closed_form(), n)
    f = gf_from_dfa(sl)
    ok = bfs == by_dfa == closed and f == spherical_gf_closed_form()
    detail = (f"n<={n}: {closed[:4]}..., gf {f}" if ok
              else f"bfs={bfs} dfa={by_dfa} formula={closed} gf={f}")
    return CheckResult(3, "spherical growth: BFS, short-lex DFA and closed form agree", ok, detail)


def check_automaton_size(b: Bounds) -> CheckResult:
    d = build_geodesic_dfa()
    acc = len(d.accepting_states)
    sinks = len(d) - acc
    ok = acc == 27 and sinks == 1 and d.sink is not None
    detail = f"{acc} accepting + {sinks} sink"
    if not ok:
        detail += "\n" + "\n".join(flag_report(d))
    return CheckResult(4, "minimal geodesic DFA has 27 states plus a sink", ok, detail)


def check_round_trips(b: Bounds) -> CheckResult:
    cfs = list(all_cf_words(b.cf_prefix, b.cf_levels))
    rgs = list(all_rg_forms(b.rg_length))
    bad_cf = [c for c in cfs if phi2(phi1(c)) != c]
    bad_rg = [r for r in rgs if phi1(phi2(r)) != r]
    ok = not bad_cf and not bad_rg
    detail = f"{len(cfs)} Cartesian forms, {len(rgs)} right-greedy forms"
    if not ok:
        detail += f"; failures {[str(c) for c in bad_cf[:3]]} {[str(r) for r in bad_rg[:3]]}"
    return CheckResult(5, "phi2 o phi1 and phi1 o phi2 are identities", ok, detail)


def _length_law_shard(args: tuple[str, int]) -> tuple[int, list[str]]:
    """Check every reduced word of length <= max_len starting with ``first``."""
    first, max_len = args
    gens = {x: (GENERATOR_MATRICES[x], 1 if x in "ab" else -1) for x in ALPHABET}
    inverse = {"a": "A", "A": "a", "b": "B", "B": "b"}
    m, e = gens[first]
    stack = [(first, Fingerprint(m, e))]
    seen = 0
    bad: list[str] = []
    while stack:
        w, f = stack.pop()
        seen += 1
        s = shortlex(w).word
        geo = is_geodesic(w)
        if (len(s) == len(w)) != geo or (not geo and len(s) >= len(w)) or fingerprint(s) != f:
            bad.append(w)
        if len(w) < max_len:
            skip = inverse[w[-1]]
            for x, (m, e) in gens.items():
                if x != skip:
                    stack.append((w + x, Fingerprint(mat_mul(f.m, m), f.e + e)))
    return seen, bad


def check_length_law(b: Bounds, workers: int = 1) -> CheckResult:
    shards = [(x, b.length_law) for x in ALPHABET]
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            results = pool.map(_length_law_shard, shards)
    else:
        results = [_length_law_shard(s) for s in shards]
    seen = 1 + sum(r[0] for r in results)
    bad = sorted((w for r in results for w in r[1]), key=lambda w: (len(w), w))
    ok = not bad and shortlex("").word == ""
    detail = f"{seen} words up to length {b.length_law}"
    if bad:
        detail += f"; {len(bad)} failures, first {bad[:5]}"
    return CheckResult(6, "|shortlex(w)| = |w| exactly for geodesic w, same element", ok, detail)


def check_predicate(b: Bounds) -> CheckResult:
    n = b.predicate_length
    table = bfs_ball(n)
    dist = table.distances
    gens = {x: (GENERATOR_MATRICES[x], 1 if x in "ab" else -1) for x in ALPHABET}
    inverse = {"a": "A", "A": "a", "b": "B", "B": "b"}
    stack = [("", FP_ORIGIN)]
    seen = 0
    bad: list[str] = []
    while stack:
        w, f = stack.pop()
        seen += 1
        if is_geodesic(w) != (dist[f] == len(w)):
            bad.append(w)
        if len(w) < n:
            skip = inverse[w[-1]] if w else ""
            for x, (m, e) in gens.items():
                if x != skip:
                    stack.append((w + x, Fingerprint(mat_mul(f.m, m), f.e + e)))
    ok = not bad
    detail = f"{seen} words up to length {n}" + ("" if ok else f"; failures {sorted(bad)[:5]}")
    return CheckResult(7, "is_geodesic(w) iff |w| = distance(w)", ok, detail)


def _random_word(rng: random.Random, max_len: int) -> str:
    return "".join(rng.choice(ALPHABET) for _ in range(rng.randint(0, max_len)))


def check_translation_lengths(b: Bounds) -> CheckResult:
    rng = random.Random(b.seed)
    table = bfs_ball(b.tau_radius)
    problems: list[str] = []
    for w, expected in (("a", 1), ("ab", 2), ("abA", 1), ("abaaba", 6), ("", 0)):
        got = translation_length(w)
        if got != expected:
            problems.append(f"tau({w})={got}, expected {expected}")
    powers = 0
    for _ in range(b.tau_samples):
        w = _random_word(rng, b.tau_word)
        t = translation_length(w)
        if not isinstance(t, int) or t < 0 or t > len(shortlex(w).word):
            problems.append(f"tau({w})={t!r}")
            continue
        u = free_reduce(_random_word(rng, b.conjugator))
        if translation_length(u + w + invert(u)) != t:
            problems.append(f"tau not conjugation invariant for w={w} u={u}")
        x = translation_fixed_point(w)
        if not all(is_geodesic(p) for p in cyclic_permutations(x)):
            problems.append(f"fixed point {x} of {w} has a non-geodesic rotation")
        for n in range(1, b.tau_radius // max(t, 1) + 1):
            if t == 0:
                break
            powers += 1
            if distance(power(x, n), table) != n * t:
                problems.append(f"|{x}^{n}| != {n}*{t}")
            wn = free_reduce(power(w, n))
            if len(wn) <= b.tau_radius and distance(wn, table) < n * t:
                problems.append(f"|({w})^{n}| < {n}*{t}")
    ok = not problems
    detail = f"{b.tau_samples} random words, {powers} power checks"
    if problems:
        detail += f"; {len(problems)} problems, first {problems[:3]}"
    return CheckResult(8, "translation lengths are integers, conjugation invariant, additive", ok, detail)


def check_cayley(b: Bounds) -> CheckResult:
    rng = random.Random(b.seed + 1)
    problems: list[str] = []
    for _ in range(b.cayley_samples):
        w = _random_word(rng, b.cayley_word)
        if fingerprint(fold(w).word) != fingerprint(w):
            problems.append(f"fold({w}) wrong element")
            break
    for _ in range(1000):
        w = _random_word(rng, 8)
        if fold(w + "abaBAB" + invert(w)) != CF_ORIGIN:
            problems.append(f"relator loop at {w} does not close")
            break
        s = fold(w)
        if fold("aba", s) != fold("bab", s):
            problems.append(f"aba and bab differ from {s}")
            break
    got = ball(b.ball_radius).counts
    want = list(bfs_ball(b.ball_radius).counts)
    if got != want:
        problems.append(f"ball counts {got} != BFS {want}")
    ok = not problems
    detail = f"{b.cayley_samples} folds, ball radius {b.ball_radius} counts {got[:4]}..."
    if problems:
        detail += f"; {problems}"
    return CheckResult(9, "Cayley graph stepping agrees with the group", ok, detail)


CHECKS: dict[int, Callable[[Bounds], CheckResult]] = {
    1: check_geodesic_growth,
    2: check_geodesic_gf,
    3: check_spherical,
    4: check_automaton_size,
    5: check_round_trips,
    6: check_length_law,
    7: check_predicate,
    8: check_translation_lengths,
    9: check_cayley,
}


def run_check(number: int, bounds: Bounds = FULL) -> CheckResult:
    t0 = time.perf_counter()
    result = CHECKS[number](bounds)
    result.seconds = time.perf_counter() - t0
    return result


def run_all(bounds: Bounds = FULL, only: list[int] | None = None, echo=None) -> list[CheckResult]:
    results = []
    for n in only or sorted(CHECKS):
        r = run_check(n, bounds)
        if echo:
            echo(r.line())
        results.append(r)
    return results
