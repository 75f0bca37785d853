"""Independent equality and distance oracle for B3.

B3 maps onto SL(2, Z) by ``a -> [[1,1],[0,1]]``, ``b -> [[1,0],[-1,1]]``; the
kernel is generated by the central element (aba)^4, whose exponent sum is 12.
The pair (matrix, exponent sum) therefore separates all elements of B3. None
of the normal-form machinery is used here, so this module can check it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .words import ALPHABET, LOWER

Matrix = tuple[int, int, int, int]  # row-major 2x2

IDENTITY: Matrix = (1, 0, 0, 1)

GENERATOR_MATRICES: dict[str, Matrix] = {
    "a": (1, 1, 0, 1),
    "A": (1, -1, 0, 1),
    "b": (1, 0, -1, 1),
    "B": (1, 0, 1, 1),
}


class OutOfRadius(KeyError):
    """The element lies outside the radius of a distance table."""


class BallTooLarge(RuntimeError):
    pass


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


class Fingerprint(NamedTuple):
    m: Matrix
    e: int

    def times(self, letter: str) -> "Fingerprint":
        return Fingerprint(mat_mul(self.m, GENERATOR_MATRICES[letter]),
                           self.e + (1 if letter in LOWER else -1))

    def det(self) -> int:
        return self.m[0] * self.m[3] - self.m[1] * self.m[2]


ORIGIN = Fingerprint(IDENTITY, 0)


def fingerprint(w: str) -> Fingerprint:
    m = IDENTITY
    for x in w:
        m = mat_mul(m, GENERATOR_MATRICES[x])
    return Fingerprint(m, sum(1 if x in LOWER else -1 for x in w))


def equal_elements(u: str, w: str) -> bool:
    return fingerprint(u) == fingerprint(w)


def _check_relator() -> None:
    a, b = GENERATOR_MATRICES["a"], GENERATOR_MATRICES["b"]
    if mat_mul(mat_mul(a, b), a) != mat_mul(mat_mul(b, a), b):
        raise AssertionError("generator matrices do not satisfy aba = bab")
    for x, X in (("a", "A"), ("b", "B")):
        if mat_mul(GENERATOR_MATRICES[x], GENERATOR_MATRICES[X]) != IDENTITY:
            raise AssertionError(f"matrix of {X} is not the inverse of {x}")


_check_relator()


@dataclass(frozen=True)
class DistanceTable:
    """Exact word-metric distances of every element within ``radius``."""

    radius: int
    distances: dict[Fingerprint, int] = field(repr=False)
    counts: tuple[int, ...]

    def __contains__(self, w: str) -> bool:
        return fingerprint(w) in self.distances

    def __len__(self) -> int:
        return len(self.distances)


def bfs_ball(radius: int, limit: int = 5_000_000, order: str = ALPHABET) -> DistanceTable:
    """Breadth-first search from the identity over the four generators.

    ``order`` only changes the expansion order; layer counts do not depend on it.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    dist = {ORIGIN: 0}
    counts = [1]
    frontier = [ORIGIN]
    for d in range(1, radius + 1):
        nxt = []
        for f in frontier:
            for x in order:
                g = f.times(x)
                if g not in dist:
                    dist[g] = d
                    nxt.append(g)
        if len(dist) > limit:
            raise BallTooLarge(f"ball of radius {radius} exceeds {limit} entries")
        counts.append(len(nxt))
        frontier = nxt
    return DistanceTable(radius, dist, tuple(counts))


def distance(w: str, table: DistanceTable) -> int:
    try:
        return table.distances[fingerprint(w)]
    except KeyError:
        raise OutOfRadius(f"{w!r} is farther than {table.radius} from the identity") from None


def geodesic_word_counts(table: DistanceTable, max_len: int) -> list[int]:
    """Count freely reduced words w with |w| = distance(w), by length.

    Walks every freely reduced word up to ``max_len`` (4 * 3^(n-1) of them at
    length n) and compares its length to the table. No pruning.
    """
    if max_len > table.radius:
        raise ValueError("max_len exceeds the table radius")
    dist = table.distances
    counts = [0] * (max_len + 1)
    counts[0] = 1
    inverse = {"a": "A", "A": "a", "b": "B", "B": "b"}
    gens = {x: (GENERATOR_MATRICES[x], 1 if x in LOWER else -1) for x in ALPHABET}
    stack = [(x, 1, Fingerprint(*gens[x])) for x in ALPHABET]
    while stack:
        last, n, f = stack.pop()
        if dist[f] == n:
            counts[n] += 1
        if n == max_len:
            continue
        bad = inverse[last]
        for x, (m, s) in gens.items():
            if x != bad:
                stack.append((x, n + 1, Fingerprint(mat_mul(f.m, m), f.e + s)))
    return counts
