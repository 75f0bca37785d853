"""Recognising geodesic words of B3 and computing translation lengths.

A freely reduced word is geodesic exactly when it avoids two kinds of
conflict, both read off contiguous subwords of the literal word:

* it contains one of ``ab, ba`` and also one of ``AB, BA``;
* it contains a positive half twist ``aba``/``bab`` and also an uppercase
  letter, or a negative one ``ABA``/``BAB`` and also a lowercase letter.

The half twist ``bab`` has to be included with ``aba``: ``babA`` equals ``ab``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import cyclic_permutations, cyclic_reduce, is_freely_reduced

POSITIVE_PAIRS = ("ab", "ba")
NEGATIVE_PAIRS = ("AB", "BA")
POSITIVE_TRIPLES = ("aba", "bab")
NEGATIVE_TRIPLES = ("ABA", "BAB")


@dataclass(frozen=True)
class StarViolation:
    positive_at: int  # index of the first ab/ba
    negative_at: int  # index of the first AB/BA


@dataclass(frozen=True)
class DoubleStarViolation:
    triple_at: int
    triple: str
    letter_at: int  # first letter of the opposite case


@dataclass(frozen=True)
class ViolationReport:
    reduced: bool
    star: StarViolation | None = None
    doublestar: DoubleStarViolation | None = None

    @property
    def geodesic(self) -> bool:
        return self.reduced and self.star is None and self.doublestar is None

    def describe(self, w: str) -> list[str]:
        lines = []
        if not self.reduced:
            lines.append("not freely reduced")
        if self.star:
            p, n = self.star.positive_at, self.star.negative_at
            lines.append(f"* conflict: {w[p:p + 2]} at {p}, {w[n:n + 2]} at {n}")
        if self.doublestar:
            d = self.doublestar
            lines.append(f"** conflict: {d.triple} at {d.triple_at}, "
                         f"{w[d.letter_at]} at {d.letter_at}")
        return lines


def _first(w: str, subwords: tuple[str, ...]) -> int:
    hits = [i for i in (w.find(s) for s in subwords) if i >= 0]
    return min(hits) if hits else -1


def _first_of(w: str, letters: str) -> int:
    hits = [i for i in (w.find(x) for x in letters) if i >= 0]
    return min(hits) if hits else -1


def violates_star(w: str) -> StarViolation | None:
    p = _first(w, POSITIVE_PAIRS)
    if p < 0:
        return None
    n = _first(w, NEGATIVE_PAIRS)
    if n < 0:
        return None
    return StarViolation(p, n)


def violates_doublestar(w: str) -> DoubleStarViolation | None:
    t = _first(w, POSITIVE_TRIPLES)
    if t >= 0:
        x = _first_of(w, "AB")
        if x >= 0:
            return DoubleStarViolation(t, w[t:t + 3], x)
    t = _first(w, NEGATIVE_TRIPLES)
    if t >= 0:
        x = _first_of(w, "ab")
        if x >= 0:
            return DoubleStarViolation(t, w[t:t + 3], x)
    return None


def check(w: str) -> ViolationReport:
    return ViolationReport(is_freely_reduced(w), violates_star(w), violates_doublestar(w))


def is_geodesic(w: str) -> bool:
    return (is_freely_reduced(w)
            and violates_star(w) is None
            and violates_doublestar(w) is None)


def translation_fixed_point(w: str) -> str:
    """A cyclically reduced conjugate of ``w`` all of whose rotations are geodesic.

    Starts from the short-lex form and, whenever some rotation (tried in
    order 1, 2, ...) is not geodesic, replaces it by its short-lex form,
    which is strictly shorter.
    """
    from .normal_forms import shortlex

    x = shortlex(w).word
    while True:
        x = cyclic_reduce(x)
        for p in cyclic_permutations(x):
            if not is_geodesic(p):
                shorter = shortlex(p).word
                assert len(shorter) < len(x)
                x = shorter
                break
        else:
            return x


def translation_length(w: str) -> int:
    """The (integer) translation length lim |w^n| / n."""
    return len(translation_fixed_point(w))
