"""The Cayley graph of B3 in Cartesian coordinates.

Every element is uniquely ``u (aba)^k`` with ``u`` freely reduced and almost
even (all syllables even except maybe the last). Level ``k`` is a copy of the
tree spanned by <a^2, b^2> in the free group; generator steps either stay on
the level or cross to level ``k +- 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .fingerprint import BallTooLarge, fingerprint
from .words import (
    format_word,
    free_reduce,
    inverse_letter,
    is_almost_even,
    is_freely_reduced,
    power,
    shortlex_key,
    sign,
    swap_power,
)

HALF_TWIST = "aba"


@dataclass(frozen=True, order=True)
class CfState:
    """The element ``u (aba)^k``; ``u`` must be freely reduced and almost even."""

    u: str
    k: int

    def __post_init__(self):
        if not (is_freely_reduced(self.u) and is_almost_even(self.u)):
            raise ValueError(f"prefix {self.u!r} is not a freely reduced almost even word")

    @property
    def word(self) -> str:
        return self.u + power(HALF_TWIST, self.k)

    @property
    def tree_vertex(self) -> str:
        """Coordinate of the vertex inside its level's tree."""
        return swap_power(self.u, self.k)

    def __str__(self) -> str:
        return f"{format_word(self.u, compressed=True)}|{self.k}"


ORIGIN = CfState("", 0)


def _cross_level_identities() -> None:
    # x^odd t with t of the other base: t = y gives  x y = Y (aba),  x Y = x x y (ABA),
    # and the mirror images; checked here against the matrix oracle.
    cases = {"ab": ("B", 1), "ba": ("A", 1), "aB": ("aab", -1), "bA": ("bba", -1),
             "Ab": ("AAB", 1), "Ba": ("BBA", 1), "AB": ("b", -1), "BA": ("a", -1)}
    for lhs, (u, k) in cases.items():
        if fingerprint(lhs) != fingerprint(u + power(HALF_TWIST, k)):
            raise AssertionError(f"cross-level identity for {lhs} is wrong")


_cross_level_identities()


def step(s: CfState, g: str) -> CfState:
    """The state of ``s * g`` for a single letter ``g``."""
    h = swap_power(g, s.k)  # g pushed left through (aba)^k
    u = s.u
    if not u:
        return CfState(h, s.k)
    last = u[-1]
    if h == inverse_letter(last):
        return CfState(u[:-1], s.k)
    if h.lower() == last.lower():
        return CfState(u + h, s.k)
    run = len(u) - len(u.rstrip(last))
    if run % 2 == 0:
        return CfState(u + h, s.k)
    # odd final syllable x^r followed by the other base: cross a level
    if sign(h) == sign(last):
        u2 = free_reduce(u[:-1] + inverse_letter(h))
    else:
        u2 = u + last + inverse_letter(h)
    return CfState(u2, s.k + sign(h))


def fold(w: str, start: CfState = ORIGIN) -> CfState:
    s = start
    for x in w:
        s = step(s, x)
    return s


@dataclass(frozen=True)
class BallGraph:
    radius: int
    distances: dict[CfState, int] = field(repr=False)
    edges: tuple[tuple[CfState, CfState, str], ...] = field(repr=False)

    @property
    def counts(self) -> list[int]:
        out = [0] * (self.radius + 1)
        for d in self.distances.values():
            out[d] += 1
        return out

    def vertices(self) -> list[CfState]:
        return sorted(self.distances, key=lambda s: (self.distances[s], shortlex_key(s.u), s.k))


def ball(radius: int, limit: int = 2_000_000) -> BallGraph:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    dist = {ORIGIN: 0}
    queue = deque([ORIGIN])
    while queue:
        s = queue.popleft()
        d = dist[s]
        if d == radius:
            continue
        for x in "aAbB":
            t = step(s, x)
            if t not in dist:
                dist[t] = d + 1
                if len(dist) > limit:
                    raise BallTooLarge(f"ball of radius {radius} exceeds {limit} vertices")
                queue.append(t)
    edges = []
    order = sorted(dist, key=lambda s: (dist[s], shortlex_key(s.u), s.k))
    for s in order:
        for x in "ab":
            t = step(s, x)
            if t in dist:
                edges.append((s, t, x))
    return BallGraph(radius, dist, tuple(edges))


def export_dot(g: BallGraph) -> str:
    lines = ["digraph cayley_b3 {"]
    for s in g.vertices():
        lines.append(f'  "{s}";')
    for s, t, x in g.edges:
        lines.append(f'  "{s}" -> "{t}" [label="{x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

