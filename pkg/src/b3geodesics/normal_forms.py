"""Normal forms for B3 and the rewriting maps between them.

Three canonical forms are used:

* Cartesian form ``u (aba)^k``, ``u`` almost even (:class:`CfWord`), read off
  the Cayley graph;
* right-greedy form ``a^k1 b^k2 ... (aba)^j`` with positive syllables and
  interior exponents > 1 (:class:`RgForm`);
* short-lex form for the order a < A < b < B (:class:`SlWord`).

``phi1``/``phi2`` convert between the first two. ``psi1`` rewrites any word
into a temporary form (an alternating-sign body times a power of aba) and
``psi2`` takes that to short-lex form; their composite is :func:`shortlex`.
All maps are driven by the half-twist identity ``(aba) x = swap(x) (aba)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

from .cayley import HALF_TWIST, CfState, fold
from .words import (
    Syllable,
    WordError,
    enumerate_reduced,
    format_word,
    free_reduce,
    from_syllables,
    inverse_letter,
    is_almost_even,
    is_freely_reduced,
    power,
    sign,
    swap,
    swap_power,
    syllables,
)

CfWord = CfState

_TRIPLE = re.compile("aba|bab|ABA|BAB")
_PAIR = re.compile("ab|ba|AB|BA")


def _format_form(body: str, j: int) -> str:
    if j == 0:
        return format_word(body, compressed=True)
    twist = f"(aba)^{j}"
    return twist if not body else format_word(body, compressed=True) + twist


# ---------------------------------------------------------------------------
# form types


@dataclass(frozen=True)
class RgForm:
    """``prefix (aba)^j`` with a positive prefix whose interior exponents are > 1."""

    prefix: tuple[Syllable, ...]
    j: int

    def __post_init__(self):
        syls = tuple(Syllable(*s) for s in self.prefix)
        object.__setattr__(self, "prefix", syls)
        for n, s in enumerate(syls):
            if s.base not in "ab" or s.exp < 1:
                raise ValueError(f"right-greedy syllables must be positive: {s}")
            if n and syls[n - 1].base == s.base:
                raise ValueError("adjacent right-greedy syllables share a base")
            if 0 < n < len(syls) - 1 and s.exp < 2:
                raise ValueError(f"interior right-greedy exponent must exceed 1: {s}")

    @property
    def prefix_word(self) -> str:
        return from_syllables(self.prefix)

    @property
    def word(self) -> str:
        return self.prefix_word + power(HALF_TWIST, self.j)

    def __len__(self) -> int:
        return sum(s.exp for s in self.prefix) + 3 * abs(self.j)

    def __str__(self) -> str:
        return _format_form(self.prefix_word, self.j)


@dataclass(frozen=True)
class TfWord:
    """``body (aba)^j`` where consecutive body syllables differ in base and sign."""

    body: str
    j: int
    pairs: int = field(default=0, compare=False)  # pair rewrites done by psi1

    def __post_init__(self):
        if not is_freely_reduced(self.body) or _PAIR.search(self.body):
            raise ValueError(f"not an alternating-sign body: {self.body!r}")

    @property
    def alpha(self) -> int:
        """Body letters whose sign is opposite to the half-twist power."""
        if self.j > 0:
            return sum(1 for x in self.body if x in "AB")
        if self.j < 0:
            return sum(1 for x in self.body if x in "ab")
        return 0

    @property
    def word(self) -> str:
        return self.body + power(HALF_TWIST, self.j)

    def __len__(self) -> int:
        return len(self.body) + 3 * abs(self.j)

    def __str__(self) -> str:
        return _format_form(self.body, self.j)


@dataclass(frozen=True)
class SlWord:
    """A short-lex normal form ``a^i . middle . tail``.

    ``middle`` alternates b/A (families 1, 2) or B/a (families 3, 4);
    ``tail`` holds the exponents > 1 of the same-sign tail that follows, and
    ``k`` records a final single letter.
    """

    word: str
    i: int
    middle: tuple[int, ...]
    tail: tuple[int, ...]
    k: int
    family: int

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self.word)


# ---------------------------------------------------------------------------
# recognisers


def _twist_splits(w: str, power_: int | None):
    """Candidate ``(prefix, j)`` with ``w == prefix + (aba)^j`` literally."""
    if power_ is not None:
        tail = power(HALF_TWIST, power_)
        if w.endswith(tail):
            yield w[: len(w) - len(tail)], power_
        return
    for unit, s in (("aba", 1), ("ABA", -1)):
        n = 0
        while w.endswith(unit * (n + 1)):
            n += 1
        for m in range(n, 0, -1):
            yield w[: len(w) - 3 * m], s * m
    yield w, 0


def is_cf(w: str, power_: int | None = None) -> CfWord | None:
    for prefix, j in _twist_splits(w, power_):
        if is_freely_reduced(prefix) and is_almost_even(prefix):
            return CfState(prefix, j)
    return None


def is_rg(w: str, power_: int | None = None) -> RgForm | None:
    for prefix, j in _twist_splits(w, power_):
        if prefix and not set(prefix) <= set("ab"):
            continue
        try:
            return RgForm(tuple(syllables(prefix)), j)
        except ValueError:
            continue
    return None


def is_tf(w: str, power_: int | None = None) -> TfWord | None:
    for prefix, j in _twist_splits(w, power_):
        if is_freely_reduced(prefix) and not _PAIR.search(prefix):
            return TfWord(prefix, j)
    return None


def is_sl(w: str) -> SlWord | None:
    """Parse ``w`` against the short-lex grammar; ``None`` if it does not match."""
    if not is_freely_reduced(w):
        return None
    syls = syllables(w)
    pos = 0
    i = 0
    if syls and syls[0].base == "a":
        i = syls[0].exp
        pos = 1
    if pos == len(syls):
        return SlWord(w, i, (), (), 0, 1 if i >= 0 else 3)
    positive = syls[pos].exp > 0  # first middle syllable is b or B
    middle = []
    while pos < len(syls):
        s = syls[pos]
        if (s.exp > 0) != (positive if s.base == "b" else not positive):
            break
        middle.append(abs(s.exp))
        pos += 1
    tail = syls[pos:]
    if not tail:
        return SlWord(w, i, tuple(middle), (), 0, 1 if positive else 3)
    if tail[0].base != "a":
        return None
    if any((s.exp > 0) != positive for s in tail):
        return None
    if any(abs(s.exp) < 2 for s in tail[:-1]):
        return None
    k = 1 if abs(tail[-1].exp) == 1 else 0
    ks = tuple(abs(s.exp) for s in (tail[:-1] if k else tail))
    ends_b = tail[-1].base == "b"
    family = 1 if ends_b == bool(k) else 2
    if not positive:
        family += 2
    return SlWord(w, i, tuple(middle), ks, k, family)


# ---------------------------------------------------------------------------
# Cartesian <-> right-greedy


def phi1_stage1(u: str) -> tuple[str, int]:
    """First pass of :func:`phi1` on a Cartesian prefix.

    Each ``AB`` becomes ``b`` and each ``BA`` becomes ``a``, each followed by a
    negative half twist carried to the right end. Returns the rewritten prefix
    and the number ``d`` of half twists created, so ``u = word (ABA)^d``.
    """
    stage1: list[str] = []
    d = 0
    i = 0
    while i < len(u):
        x = u[i]
        if x in "AB" and i + 1 < len(u) and u[i + 1] in "AB" and u[i + 1] != x:
            stage1.append(swap_power(inverse_letter(u[i + 1]), d))
            d += 1
            i += 2
        else:
            stage1.append(swap_power(x, d))
            i += 1
    return "".join(stage1), d


def phi1(c: CfWord) -> RgForm:
    """Cartesian form to right-greedy form.

    First every ``AB`` (``BA``) in the prefix becomes ``b`` (``a``) times a
    negative half twist; then every remaining ``A`` (``B``) becomes ``ba``
    (``ab``) times a negative half twist. Half twists are carried to the
    right end, swapping the letters they pass.
    """
    if not isinstance(c, CfState):
        raise TypeError("phi1 expects a CfWord")
    stage1, d = phi1_stage1(c.u)
    out: list[str] = []
    d2 = 0
    for x in stage1:
        y = swap_power(x, d2)
        if y == "A":
            out.append("ba")
            d2 += 1
        elif y == "B":
            out.append("ab")
            d2 += 1
        else:
            out.append(y)
    prefix = "".join(out)
    return RgForm(tuple(syllables(prefix)), c.k - d - d2)


def phi2(r: RgForm) -> CfWord:
    """Right-greedy form to Cartesian form.

    Repeatedly takes the first odd syllable ``x^e`` that is not last, with
    successor ``y^m``, and uses ``x y^m = Y^2 X^2 ... (m-1 squares) Z (aba)^m``
    where ``Z`` is ``Y`` or ``X`` by the parity of ``m``. ``Z`` cancels into
    the swapped remainder.
    """
    if not isinstance(r, RgForm):
        raise TypeError("phi2 expects an RgForm")
    done = ""
    tail = r.prefix_word
    twist = r.j
    while True:
        syls = syllables(tail)
        odd = next((n for n, s in enumerate(syls[:-1]) if s.exp % 2), None)
        if odd is None:
            break
        x, e = syls[odd]
        y, m = syls[odd + 1]
        head = from_syllables(syls[:odd]) + x * (e - 1)
        negs = [(y if t % 2 == 0 else x).upper() for t in range(m)]
        squares = "".join(z * 2 for z in negs[:-1])
        rest = swap_power(from_syllables(syls[odd + 2:]), m)
        twist += m
        done = free_reduce(done + head + squares)
        tail = free_reduce(negs[-1] + rest)
    return CfState(free_reduce(done + tail), twist)


def to_cf(w: str) -> CfWord:
    return fold(w)


def to_rg(w: str) -> RgForm:
    return phi1(to_cf(w))


# ---------------------------------------------------------------------------
# temporary form and short-lex


def mixed_pair_count(w: str) -> int:
    """Number of subwords ab, ba, AB, BA."""
    return sum(1 for n in range(len(w) - 1) if _PAIR.match(w, n))


def pull_twists(w: str) -> tuple[str, int]:
    """Move every aba/bab/ABA/BAB subword to the right end as a power of aba."""
    w = free_reduce(w)
    j = 0
    while (m := _TRIPLE.search(w)) is not None:
        p = m.start()
        j += sign(w[p])
        w = free_reduce(w[:p] + swap(w[p + 3:]))
    return w, j


def psi1(w: str) -> TfWord:
    """Any word to temporary form.

    After the half twists are pulled out, each same-sign pair ``x y`` is
    replaced by ``Y (yxy)`` (working left to right), pulling the new half
    twist right. Each rewrite shortens the body by one letter.
    """
    body, j = pull_twists(w)
    guard = 4 * max(1, len(w)) ** 2
    pairs = 0
    while (m := _PAIR.search(body)) is not None:
        p = m.start()
        j += sign(body[p])
        body = free_reduce(body[:p] + inverse_letter(body[p + 1]) + swap(body[p + 2:]))
        pairs += 1
        if pairs > guard:
            raise RuntimeError(f"psi1 did not terminate on {w!r}")
    return TfWord(body, j, pairs)


def _insert_twist(w: str, pos: int, twist: str) -> str:
    return free_reduce(w[:pos] + twist + swap(w[pos:]))


def psi2(t: TfWord) -> SlWord:
    """Temporary form to short-lex form.

    With positive power: one half twist goes in front of the first negative
    letter if that letter is ``B`` (making every negative letter ``A``);
    further ones are absorbed after the last negative letter; any left over
    go after the leading run of ``a``. Each absorption shortens the word by
    two. A negative power is handled by the mirror image (``b`` for ``B``,
    positive letters for negative ones, ``ABA`` for ``aba``).
    """
    if not isinstance(t, TfWord):
        raise TypeError("psi2 expects a TfWord")
    w, j = t.body, t.j
    if j:
        if j > 0:
            twist, opposite, swapped_first, lead = "aba", "AB", "B", "a"
        else:
            twist, opposite, swapped_first, lead = "ABA", "ab", "b", "A"
        n = abs(j)
        first = min((p for p in (w.find(x) for x in opposite) if p >= 0), default=-1)
        if first >= 0 and w[first] == swapped_first:
            w = _insert_twist(w, first, twist)
            n -= 1
        while n:
            last = max(w.rfind(x) for x in opposite)
            if last < 0:
                break
            w = _insert_twist(w, last + 1, twist)
            n -= 1
        while n:
            w = _insert_twist(w, len(w) - len(w.lstrip(lead)), twist)
            n -= 1
    result = is_sl(w)
    if result is None:
        raise AssertionError(f"psi2({t}) produced {w!r}, outside the short-lex grammar")
    return result


def shortlex(w: str) -> SlWord:
    return psi2(psi1(w))


def equal(u: str, w: str) -> bool:
    return shortlex(u).word == shortlex(w).word


def element_length(w: str) -> int:
    return len(shortlex(w).word)


def normalize(w: str, form: str) -> str:
    """Compressed rendering of ``w`` in the requested form (cf, rg, tf, sl)."""
    if form == "cf":
        c = to_cf(w)
        return _format_form(c.u, c.k)
    if form == "rg":
        return str(to_rg(w))
    if form == "tf":
        return str(psi1(w))
    if form == "sl":
        return format_word(shortlex(w).word, compressed=True)
    raise WordError(f"unknown form {form!r}")


# ---------------------------------------------------------------------------
# enumeration


def all_cf_words(max_prefix: int, max_k: int) -> Iterator[CfWord]:
    """Every Cartesian form with ``|u| <= max_prefix`` and ``|k| <= max_k``."""
    for n in range(max_prefix + 1):
        for u in enumerate_reduced(n):
            if is_almost_even(u):
                for k in range(-max_k, max_k + 1):
                    yield CfState(u, k)


def _rg_prefixes(budget: int) -> Iterator[tuple[Syllable, ...]]:
    yield ()
    for first in "ab":
        stack = [((Syllable(first, e),), e) for e in range(1, budget + 1)]
        while stack:
            syls, used = stack.pop()
            yield syls
            nxt = "b" if syls[-1].base == "a" else "a"
            if len(syls) > 1 and syls[-1].exp < 2:
                continue  # a final 1 cannot become interior
            for e in range(1, budget - used + 1):
                stack.append((syls + (Syllable(nxt, e),), used + e))


def all_rg_forms(max_len: int) -> Iterator[RgForm]:
    """Every right-greedy form of total length (prefix plus 3|j|) at most ``max_len``."""
    for prefix in _rg_prefixes(max_len):
        used = sum(s.exp for s in prefix)
        for j in range(-((max_len - used) // 3), (max_len - used) // 3 + 1):
            yield RgForm(prefix, j)
