"""Deterministic automata for the geodesic and short-lex languages of B3.

Both automata are built from their defining predicates rather than
transcribed, then minimised with Hopcroft's partition refinement. A DFA here
is complete over ``ALPHABET`` and has an explicit absorbing sink.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from .geodesics import NEGATIVE_PAIRS, NEGATIVE_TRIPLES, POSITIVE_PAIRS, POSITIVE_TRIPLES
from .words import ALPHABET, inverse_letter, shortlex_key

LETTER_INDEX = {x: n for n, x in enumerate(ALPHABET)}


@dataclass(frozen=True)
class Dfa:
    transitions: tuple[tuple[int, ...], ...]  # state -> next state per ALPHABET letter
    accepting: tuple[bool, ...]
    start: int = 0
    sink: int | None = None
    labels: tuple[str, ...] | None = None  # optional per-state description

    def __len__(self) -> int:
        return len(self.transitions)

    def delta(self, state: int, letter: str) -> int:
        return self.transitions[state][LETTER_INDEX[letter]]

    def run(self, w: str, state: int | None = None) -> int:
        s = self.start if state is None else state
        for x in w:
            s = self.transitions[s][LETTER_INDEX[x]]
        return s

    @property
    def accepting_states(self) -> list[int]:
        return [s for s, acc in enumerate(self.accepting) if acc]


def accepts(d: Dfa, w: str) -> bool:
    return d.accepting[d.run(w)]


def count_words(d: Dfa, n: int) -> int:
    """Number of accepted words of length exactly ``n``."""
    vec = [0] * len(d)
    vec[d.start] = 1
    for _ in range(n):
        nxt = [0] * len(d)
        for s, c in enumerate(vec):
            if c:
                for t in d.transitions[s]:
                    nxt[t] += c
        vec = nxt
    return sum(c for s, c in enumerate(vec) if d.accepting[s])


def accepted_words(d: Dfa, n: int) -> list[str]:
    """All accepted words of length ``n``, extending only live prefixes."""
    out = []
    stack = [("", d.start)]
    while stack:
        w, s = stack.pop()
        if len(w) == n:
            if d.accepting[s]:
                out.append(w)
            continue
        for x in ALPHABET:
            t = d.delta(s, x)
            if t != d.sink:
                stack.append((w + x, t))
    return sorted(out, key=shortlex_key)


def explore(start: Hashable, successor: Callable[[Hashable, str], Hashable | None],
            is_accepting: Callable[[Hashable], bool],
            label: Callable[[Hashable], str] = repr) -> Dfa:
    """Build the reachable part of a DFA from a successor function.

    ``successor`` returns ``None`` for the sink.
    """
    index = {start: 0}
    order = [start]
    rows: list[list[int | None]] = []
    queue = deque([start])
    while queue:
        q = queue.popleft()
        row: list[int | None] = []
        for x in ALPHABET:
            r = successor(q, x)
            if r is None:
                row.append(None)
                continue
            if r not in index:
                index[r] = len(order)
                order.append(r)
                queue.append(r)
            row.append(index[r])
        rows.append(row)
    sink = len(order)
    trans = tuple(tuple(sink if t is None else t for t in row) for row in rows)
    trans += ((sink,) * len(ALPHABET),)
    acc = tuple(bool(is_accepting(q)) for q in order) + (False,)
    labels = tuple(label(q) for q in order) + ("sink",)
    return Dfa(trans, acc, 0, sink, labels)


# ---------------------------------------------------------------------------
# minimisation


def _reachable(d: Dfa) -> list[int]:
    seen = {d.start}
    order = [d.start]
    queue = deque([d.start])
    while queue:
        s = queue.popleft()
        for t in d.transitions[s]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def _hopcroft(states: list[int], d: Dfa) -> list[frozenset[int]]:
    acc = frozenset(s for s in states if d.accepting[s])
    rej = frozenset(states) - acc
    partition = [p for p in (acc, rej) if p]
    work = [min(partition, key=len)] if len(partition) == 2 else []
    inverse: dict[tuple[int, int], set[int]] = {}
    for s in states:
        for c, t in enumerate(d.transitions[s]):
            inverse.setdefault((t, c), set()).add(s)
    while work:
        splitter = work.pop()
        for c in range(len(ALPHABET)):
            pre = set()
            for t in splitter:
                pre |= inverse.get((t, c), set())
            if not pre:
                continue
            refined = []
            for block in partition:
                inside = block & pre
                outside = block - pre
                if inside and outside:
                    refined += [inside, outside]
                    if block in work:
                        work.remove(block)
                        work += [inside, outside]
                    else:
                        work.append(min(inside, outside, key=len))
                else:
                    refined.append(block)
            partition = refined
    return partition


def minimize_with_map(d: Dfa) -> tuple[Dfa, dict[int, int]]:
    """Minimal equivalent DFA, plus the map from old (reachable) states to new.

    New states are numbered breadth-first from the start (letters in alphabet
    order), with the sink, if any, last.
    """
    states = _reachable(d)
    blocks = _hopcroft(states, d)
    block_of = {s: n for n, b in enumerate(blocks) for s in b}
    rep = [min(b) for b in blocks]

    def is_dead(n: int) -> bool:
        s = rep[n]
        return not d.accepting[s] and all(block_of[t] == n for t in d.transitions[s])

    order = []
    seen = set()
    queue = deque([block_of[d.start]])
    seen.add(block_of[d.start])
    while queue:
        n = queue.popleft()
        order.append(n)
        for t in d.transitions[rep[n]]:
            m = block_of[t]
            if m not in seen:
                seen.add(m)
                queue.append(m)
    dead = [n for n in order if is_dead(n)]
    if dead and dead[0] != block_of[d.start]:
        order.remove(dead[0])
        order.append(dead[0])
    new = {n: i for i, n in enumerate(order)}
    trans = tuple(tuple(new[block_of[t]] for t in d.transitions[rep[n]]) for n in order)
    acc = tuple(d.accepting[rep[n]] for n in order)
    labels = None
    if d.labels is not None:
        labels = tuple(" / ".join(sorted(d.labels[s] for s in blocks[n])) for n in order)
    sink = new[dead[0]] if dead else None
    mapping = {s: new[block_of[s]] for s in states}
    return Dfa(trans, acc, new[block_of[d.start]], sink, labels), mapping


def minimize(d: Dfa) -> Dfa:
    return minimize_with_map(d)[0]


def separating_suffixes(d: Dfa) -> dict[tuple[int, int], str]:
    """A shortest suffix telling apart each pair of distinguishable states."""
    n = len(d)
    sep: dict[tuple[int, int], str] = {}
    frontier = []
    for p in range(n):
        for q in range(p + 1, n):
            if d.accepting[p] != d.accepting[q]:
                sep[p, q] = ""
                frontier.append((p, q))
    preds: dict[tuple[int, int], list[int]] = {}
    for s in range(n):
        for c, t in enumerate(d.transitions[s]):
            preds.setdefault((t, c), []).append(s)
    while frontier:
        nxt = []
        for p, q in frontier:
            for c, x in enumerate(ALPHABET):
                for p0 in preds.get((p, c), ()):
                    for q0 in preds.get((q, c), ()):
                        key = (min(p0, q0), max(p0, q0))
                        if p0 != q0 and key not in sep:
                            sep[key] = x + sep[p, q]
                            nxt.append(key)
        frontier = nxt
    return sep


def relabel(d: Dfa, perm: list[int]) -> Dfa:
    """The same automaton with state ``s`` renamed ``perm[s]``."""
    inv = [0] * len(d)
    for s, t in enumerate(perm):
        inv[t] = s
    trans = tuple(tuple(perm[t] for t in d.transitions[inv[s]]) for s in range(len(d)))
    acc = tuple(d.accepting[inv[s]] for s in range(len(d)))
    labels = None if d.labels is None else tuple(d.labels[inv[s]] for s in range(len(d)))
    return Dfa(trans, acc, perm[d.start], None if d.sink is None else perm[d.sink], labels)


def transfer_matrix(d: Dfa) -> tuple[list[list[int]], list[int], list[int]]:
    """Letter-count adjacency matrix on the non-sink states, start first.

    Returns ``(M, v1, v2)`` with ``v1`` the unit row at the start state and
    ``v2`` the all-ones column; only valid when every non-sink state accepts.
    """
    live = [s for s in range(len(d)) if s != d.sink]
    bad = [s for s in live if not d.accepting[s]]
    if bad:
        raise ValueError(f"non-sink states {bad} are not accepting")
    live.remove(d.start)
    live.insert(0, d.start)
    pos = {s: i for i, s in enumerate(live)}
    m = [[0] * len(live) for _ in live]
    for s in live:
        for t in d.transitions[s]:
            if t in pos:
                m[pos[s]][pos[t]] += 1
    v1 = [1] + [0] * (len(live) - 1)
    v2 = [1] * len(live)
    return m, v1, v2


# ---------------------------------------------------------------------------
# the two languages


@dataclass(frozen=True)
class GeodesicState:
    """What a reader of a geodesic word has to remember."""

    window: str = ""  # last two letters
    pos_pair: bool = False  # seen ab or ba
    neg_pair: bool = False  # seen AB or BA
    lower: bool = False
    upper: bool = False
    pos_triple: bool = False  # seen aba or bab
    neg_triple: bool = False  # seen ABA or BAB

    def flags(self) -> str:
        names = ("*+", "*-", "lower", "upper", "aba", "ABA")
        vals = (self.pos_pair, self.neg_pair, self.lower, self.upper,
                self.pos_triple, self.neg_triple)
        return "{" + ",".join(n for n, v in zip(names, vals) if v) + "}"

    def __str__(self) -> str:
        return f"{self.window or 'ε'}{self.flags()}"


def _geodesic_successor(q: GeodesicState, x: str) -> GeodesicState | None:
    if q.window and q.window[-1] == inverse_letter(x):
        return None
    pair = q.window[-1:] + x
    triple = q.window + x if len(q.window) == 2 else ""
    r = GeodesicState(
        window=(q.window + x)[-2:],
        pos_pair=q.pos_pair or pair in POSITIVE_PAIRS,
        neg_pair=q.neg_pair or pair in NEGATIVE_PAIRS,
        lower=q.lower or x in "ab",
        upper=q.upper or x in "AB",
        pos_triple=q.pos_triple or triple in POSITIVE_TRIPLES,
        neg_triple=q.neg_triple or triple in NEGATIVE_TRIPLES,
    )
    if (r.pos_pair and r.neg_pair) or (r.pos_triple and r.upper) or (r.neg_triple and r.lower):
        return None
    return r


def build_geodesic_dfa(minimal: bool = True) -> Dfa:
    d = explore(GeodesicState(), _geodesic_successor, lambda q: True, str)
    return minimize(d) if minimal else d


# Short-lex grammar as an NFA with epsilon moves:
#   (a^i | A^i) . middle . tail
#   middle: b(A b)... alternating b/A, or B(a B)... alternating B/a, possibly empty
#   tail after a b/A middle: a^{>=2} b^{>=2} a^{>=2} ... then at most one more letter
#   tail after a B/a middle: the same with A, B.
_SL_EPS = {
    "S": ["Mid"], "Ia": ["Mid"], "IA": ["Mid"],
    "Mid": ["T+", "T-"], "Mb": ["T+"], "MA": ["T+"], "MB": ["T-"], "Ma": ["T-"],
}
_SL_MOVES = {
    "S": {"a": ["Ia"], "A": ["IA"]},
    "Ia": {"a": ["Ia"]},
    "IA": {"A": ["IA"]},
    "Mid": {"b": ["Mb"], "B": ["MB"]},
    "Mb": {"b": ["Mb"], "A": ["MA"]},
    "MA": {"A": ["MA"], "b": ["Mb"]},
    "MB": {"B": ["MB"], "a": ["Ma"]},
    "Ma": {"a": ["Ma"], "B": ["MB"]},
    "T+": {"a": ["Pa1", "End"], "b": ["End"]},
    "Pa1": {"a": ["Pa2"]},
    "Pa2": {"a": ["Pa2"], "b": ["Pb1", "End"]},
    "Pb1": {"b": ["Pb2"]},
    "Pb2": {"b": ["Pb2"], "a": ["Pa1", "End"]},
    "T-": {"A": ["Na1", "End"], "B": ["End"]},
    "Na1": {"A": ["Na2"]},
    "Na2": {"A": ["Na2"], "B": ["Nb1", "End"]},
    "Nb1": {"B": ["Nb2"]},
    "Nb2": {"B": ["Nb2"], "A": ["Na1", "End"]},
}
_SL_FINAL = {"S", "Ia", "IA", "Mid", "Mb", "MA", "MB", "Ma", "T+", "T-",
             "Pa2", "Pb2", "Na2", "Nb2", "End"}


def _closure(states: Iterable[str]) -> frozenset[str]:
    out = set(states)
    stack = list(out)
    while stack:
        for t in _SL_EPS.get(stack.pop(), ()):
            if t not in out:
                out.add(t)
                stack.append(t)
    return frozenset(out)


def _sl_successor(q: tuple[frozenset[str], str], x: str):
    states, last = q
    if last == inverse_letter(x):
        return None
    nxt = _closure(t for s in states for t in _SL_MOVES.get(s, {}).get(x, ()))
    return (nxt, x) if nxt else None


def build_sl_dfa(minimal: bool = True) -> Dfa:
    """Subset construction on the grammar NFA, restricted to reduced words."""
    start = (_closure(["S"]), "")
    d = explore(start, _sl_successor, lambda q: bool(q[0] & _SL_FINAL),
                lambda q: ",".join(sorted(q[0])) + ":" + (q[1] or "ε"))
    return minimize(d) if minimal else d


# ---------------------------------------------------------------------------
# export


def to_json(d: Dfa) -> str:
    data = {
        "states": len(d),
        "start": d.start,
        "accepting": d.accepting_states,
        "transitions": {str(s): {x: d.transitions[s][LETTER_INDEX[x]] for x in "aAbB"}
                        for s in range(len(d))},
        "sink": d.sink,
    }
    return json.dumps(data, indent=2)


def from_json(text: str) -> Dfa:
    data = json.loads(text)
    n = data["states"]
    trans = tuple(tuple(data["transitions"][str(s)][x] for x in ALPHABET) for s in range(n))
    acc = set(data["accepting"])
    return Dfa(trans, tuple(s in acc for s in range(n)), data["start"], data["sink"])


def to_dot(d: Dfa) -> str:
    """Graphviz rendering; edges into the sink are left out."""
    lines = ["digraph fsa {", "  rankdir=LR;"]
    for s in range(len(d)):
        if s == d.sink:
            continue
        shape = "doublecircle" if d.accepting[s] else "circle"
        lines.append(f"  {s} [shape={shape}];")
    for s in range(len(d)):
        if s == d.sink:
            continue
        for x in ALPHABET:
            t = d.delta(s, x)
            if t != d.sink:
                lines.append(f'  {s} -> {t} [label="{x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def flag_report(d: Dfa) -> list[str]:
    """One line per state listing the predicate states merged into it."""
    labels = d.labels or tuple(str(s) for s in range(len(d)))
    return [f"{s}: {'accept' if d.accepting[s] else 'reject'}  {labels[s]}" for s in range(len(d))]
