import itertools
import random

import pytest

from b3geodesics.fingerprint import (
    IDENTITY,
    BallTooLarge,
    OutOfRadius,
    bfs_ball,
    distance,
    equal_elements,
    fingerprint,
)
from b3geodesics.words import free_reduce


@pytest.fixture(scope="module")
def table():
    return bfs_ball(10)


def test_relator_and_identity():
    assert fingerprint("aba") == fingerprint("bab")
    assert fingerprint("") == (IDENTITY, 0)
    assert fingerprint("abaabaabaaba") == (IDENTITY, 12)


def test_determinant_one():
    rng = random.Random(5)
    for _ in range(100):
        w = "".join(rng.choice("aAbB") for _ in range(20))
        assert fingerprint(w).det() == 1


def test_equal_elements():
    assert equal_elements("ab", "Baba")
    assert not equal_elements("ab", "ba")
    rng = random.Random(6)
    for _ in range(100):
        w = "".join(rng.choice("aAbB") for _ in range(12))
        assert equal_elements(w, free_reduce(w))


def test_ball_counts():
    assert bfs_ball(0).counts == (1,)
    assert bfs_ball(1).counts == (1, 4)
    assert bfs_ball(3).counts == (1, 4, 12, 30)


def test_ball_counts_do_not_depend_on_order():
    assert bfs_ball(7, order="BbAa").counts == bfs_ball(7).counts


def test_ball_layers_are_consistent(table):
    # each element at distance d has a neighbour at d-1 and none closer
    for f, d in list(table.distances.items())[:3000]:
        near = [table.distances.get(f.times(x)) for x in "aAbB"]
        near = [n for n in near if n is not None]
        if d:
            assert d - 1 in near
        assert all(n >= d - 1 for n in near)


def test_distances(table):
    assert distance("aabbAABB", table) == 6
    assert distance("", table) == 0
    assert distance("abaB", table) == 2
    assert distance("aBaBaB", table) == 6


def test_distance_bounded_by_reduced_length(table):
    rng = random.Random(7)
    for _ in range(500):
        w = "".join(rng.choice("aAbB") for _ in range(rng.randint(0, 10)))
        assert distance(w, table) <= len(free_reduce(w))


def test_out_of_radius():
    with pytest.raises(OutOfRadius):
        distance("aaaa", bfs_ball(3))


def test_resource_guard():
    with pytest.raises(BallTooLarge):
        bfs_ball(8, limit=100)


def test_squares_generate_a_free_group():
    blocks = ("aa", "AA", "bb", "BB")
    inverse = {"aa": "AA", "AA": "aa", "bb": "BB", "BB": "bb"}
    for n in range(1, 7):
        for combo in itertools.product(blocks, repeat=n):
            if any(inverse[x] == y for x, y in zip(combo, combo[1:])):
                continue
            assert fingerprint("".join(combo)) != fingerprint("")
