import random

import pytest

from b3geodesics.words import (
    Syllable,
    WordError,
    cyclic_permutations,
    cyclic_reduce,
    enumerate_reduced,
    exponent_sum,
    format_word,
    free_reduce,
    invert,
    is_almost_even,
    is_freely_reduced,
    parse,
    shortlex_key,
    swap,
    syllables,
)


def random_word(rng, n):
    return "".join(rng.choice("aAbB") for _ in range(n))


@pytest.mark.parametrize("text, word", [
    ("ab", "ab"),
    ("a^3", "aaa"),
    ("(aba)^-1", "ABA"),
    ("(ab)^2B", "ababB"),
    ("a^-2", "AA"),
    ("((ab)^2)^-1", "BABA"),
    ("", ""),
    ("ε", ""),
    ("a^0b", "b"),
    (" a b ", "ab"),
])
def test_parse(text, word):
    assert parse(text) == word


@pytest.mark.parametrize("text, pos", [("ax", 1), ("(ab", 3), ("ab)", 2), ("^2", 0), ("a^", 1)])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(WordError) as info:
        parse(text)
    assert str(pos) in str(info.value)


def test_parse_is_literal():
    assert parse("aA") == "aA"


@pytest.mark.parametrize("w, r", [("aA", ""), ("abBA", ""), ("aabBa", "aaa"), ("", ""), ("Ab", "Ab")])
def test_free_reduce(w, r):
    assert free_reduce(w) == r


def test_free_reduce_confluent_and_idempotent():
    rng = random.Random(1)
    for _ in range(500):
        w = random_word(rng, rng.randint(0, 14))
        r = free_reduce(w)
        assert free_reduce(r) == r
        assert is_freely_reduced(r)
        assert (len(w) - len(r)) % 2 == 0
        # cancel one random adjacent pair first, then reduce
        spots = [i for i in range(len(w) - 1) if w[i].swapcase() == w[i + 1]]
        if spots:
            i = rng.choice(spots)
            assert free_reduce(w[:i] + w[i + 2:]) == r


@pytest.mark.parametrize("w, syls", [
    ("aabbbA", [("a", 2), ("b", 3), ("a", -1)]),
    ("", []),
    ("aB", [("a", 1), ("b", -1)]),
])
def test_syllables(w, syls):
    assert syllables(w) == [Syllable(*s) for s in syls]


def test_syllables_reject_unreduced():
    with pytest.raises(WordError):
        syllables("aA")


@pytest.mark.parametrize("w, ok", [("aabb", True), ("aabbb", True), ("aaabb", False), ("", True), ("a", True)])
def test_almost_even(w, ok):
    assert is_almost_even(w) is ok


def test_swap():
    assert swap("abA") == "baB"
    assert swap("") == ""
    assert swap(swap("aBba")) == "aBba"


def test_swap_commutes_with_reduction_and_inversion():
    rng = random.Random(2)
    for _ in range(300):
        w = random_word(rng, 10)
        assert swap(free_reduce(w)) == free_reduce(swap(w))
        assert swap(invert(w)) == invert(swap(w))


def test_group_helpers():
    assert invert("ab") == "BA"
    assert exponent_sum("ABA") == -3
    assert exponent_sum("aba") == exponent_sum("bab")
    assert cyclic_reduce("abA") == "b"
    assert cyclic_reduce("aBbA") == ""
    assert list(cyclic_permutations("abc".replace("c", "B"))) == ["abB", "bBa", "Bab"]


def test_exponent_sum_invariant_under_reduction():
    rng = random.Random(3)
    for _ in range(200):
        w = random_word(rng, 12)
        assert exponent_sum(w) == exponent_sum(free_reduce(w))


def test_format_compressed():
    assert format_word("aaBBB", compressed=True) == "a^2B^3"
    assert format_word("ab", compressed=True) == "ab"
    assert format_word("") == "ε"


def test_shortlex_order():
    assert sorted(["B", "b", "A", "a", "aa"], key=shortlex_key) == ["a", "A", "b", "B", "aa"]


def test_enumerate_reduced_counts():
    for n in range(7):
        words = list(enumerate_reduced(n))
        assert len(words) == (1 if n == 0 else 4 * 3 ** (n - 1))
        assert all(is_freely_reduced(w) for w in words)
        assert words == sorted(words, key=shortlex_key)
