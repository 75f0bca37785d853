import random

import pytest

from b3geodesics.fingerprint import bfs_ball, distance
from b3geodesics.geodesics import (
    check,
    is_geodesic,
    translation_fixed_point,
    translation_length,
    violates_doublestar,
    violates_star,
)
from b3geodesics.words import cyclic_permutations, enumerate_reduced, invert, power


@pytest.fixture(scope="module")
def table():
    return bfs_ball(12)


def test_star_examples():
    v = violates_star("aabbAABB")
    # letter positions; as syllable junctions these are 1-2 and 3-4
    assert v is not None and (v.positive_at, v.negative_at) == (1, 5)
    assert violates_star("aBaBaB") is None
    assert violates_star("abAB") is not None


def test_doublestar_examples():
    assert violates_doublestar("abaB") is not None
    assert violates_doublestar("babA") is not None
    assert violates_doublestar("abaaba") is None
    d = violates_doublestar("BBAbab")
    assert d is not None and d.triple == "bab" and d.letter_at == 0


def test_bab_needed_in_doublestar(table):
    # babA is ab, so it cannot be geodesic
    assert distance("babA", table) == 2
    assert not is_geodesic("babA")


def test_is_geodesic_examples():
    assert not is_geodesic("aabbAABB")
    assert is_geodesic("aBaBaB")
    assert not is_geodesic("aA")
    for n in range(3):
        assert all(is_geodesic(w) for w in enumerate_reduced(n))


def test_report():
    r = check("abAB")
    assert not r.geodesic and r.reduced and r.star and not r.doublestar
    assert r.describe("abAB") == ["* conflict: ab at 0, AB at 2"]
    assert check("aBaBaB").geodesic
    assert check("aA").describe("aA") == ["not freely reduced"]


def test_predicate_matches_oracle_up_to_8(table):
    for n in range(9):
        for w in enumerate_reduced(n):
            assert is_geodesic(w) == (distance(w, table) == n), w


def test_prefix_closed():
    for w in enumerate_reduced(8):
        if is_geodesic(w):
            assert all(is_geodesic(w[:k]) for k in range(len(w)))


@pytest.mark.parametrize("w, t", [("a", 1), ("abA", 1), ("ab", 2), ("abaaba", 6), ("", 0), ("aA", 0)])
def test_translation_length_examples(w, t):
    assert translation_length(w) == t


def test_ab_powers_grow_linearly(table):
    for n in range(1, 6):
        assert distance(power("ab", n), table) == 2 * n


def test_translation_length_conjugation_invariant():
    rng = random.Random(11)
    for _ in range(300):
        w = "".join(rng.choice("aAbB") for _ in range(rng.randint(0, 8)))
        u = "".join(rng.choice("aAbB") for _ in range(rng.randint(0, 4)))
        assert translation_length(u + w + invert(u)) == translation_length(w)


def test_fixed_point_rotations_are_geodesic(table):
    rng = random.Random(12)
    for _ in range(300):
        w = "".join(rng.choice("aAbB") for _ in range(rng.randint(1, 8)))
        x = translation_fixed_point(w)
        assert all(is_geodesic(p) for p in cyclic_permutations(x))
        t = len(x)
        for n in range(1, 4):
            if n * t <= 12:
                assert distance(power(x, n), table) == n * t
