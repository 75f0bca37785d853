"""Words over the alphabet {a, b, A, B} of the braid group B3 = <a, b | aba = bab>.

A word is a plain ``str``; capital letters are inverses (``A`` is a^-1). Strings
are immutable, hashable and compare lexicographically, which is all the
word machinery needs. The alphabet order used for short-lex comparisons is
``a < A < b < B`` and is exposed as ``ALPHABET``.
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple

ALPHABET = "aAbB"
LOWER = frozenset("ab")
UPPER = frozenset("AB")

_INVERSE = str.maketrans("aAbB", "AaBb")
_SWAP = str.maketrans("aAbB", "bBaA")
_SORT_KEY = str.maketrans("aAbB", "0123")

EMPTY_SYMBOL = "ε"


class WordError(ValueError):
    """Raised for malformed word text or words violating a precondition."""


class Syllable(NamedTuple):
    """A maximal run ``base^exp``; the sign of ``exp`` gives the direction."""

    base: str
    exp: int

    def word(self) -> str:
        return (self.base if self.exp > 0 else self.base.upper()) * abs(self.exp)

    def __str__(self) -> str:
        return _format_power(self.base if self.exp > 0 else self.base.upper(), abs(self.exp))


def inverse_letter(x: str) -> str:
    return x.translate(_INVERSE)


def base(x: str) -> str:
    return x.lower()


def sign(x: str) -> int:
    return 1 if x in LOWER else -1


def check_word(w: str) -> str:
    bad = set(w) - set(ALPHABET)
    if bad:
        raise WordError(f"not a word over {{a,b,A,B}}: {w!r}")
    return w


# ---------------------------------------------------------------------------
# parsing and formatting


_TOKEN = re.compile(r"\s*(?:([aAbB])|(\()|(\))|(\^)(-?)(\d+)|(ε))")


def parse(text: str) -> str:
    """Parse ``term*`` with ``term := atom ['^' ['-'] digits]``.

    Atoms are single letters or parenthesised words. A negative exponent
    takes the group inverse. The result is the literal, unreduced letter
    sequence.

    >>> parse("(aba)^-1")
    'ABA'
    """
    stack: list[list[str]] = [[]]
    last: str | None = None  # most recent atom, eligible for an exponent
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise WordError(f"unexpected character {text[pos]!r} at position {pos}")
        letter, lpar, rpar, caret, minus, digits, eps = m.groups()
        if letter:
            _flush(stack, last)
            last = letter
        elif eps:
            _flush(stack, last)
            last = ""
        elif lpar:
            _flush(stack, last)
            last = None
            stack.append([])
        elif rpar:
            if len(stack) == 1:
                raise WordError(f"unbalanced ')' at position {pos}")
            _flush(stack, last)
            last = "".join(stack.pop())
        elif caret:
            if last is None:
                raise WordError(f"exponent with nothing to raise at position {pos}")
            n = int(digits)
            last = (invert(last) if minus else last) * n
            _flush(stack, last)
            last = None
        pos = m.end()
    if len(stack) != 1:
        raise WordError(f"unbalanced '(' at position {len(text)} (end of input)")
    _flush(stack, last)
    return "".join(stack[0])


def _flush(stack: list[list[str]], atom: str | None) -> None:
    if atom:
        stack[-1].append(atom)


def _format_power(letter: str, n: int) -> str:
    return letter if n == 1 else f"{letter}^{n}"


def format_word(w: str, compressed: bool = False) -> str:
    """Plain letter string, or syllable notation like ``a^2B^3``; ``ε`` if empty."""
    if not w:
        return EMPTY_SYMBOL
    if not compressed:
        return w
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(_format_power(w[i], j - i))
        i = j
    return "".join(out)


# ---------------------------------------------------------------------------
# free group operations


def free_reduce(w: str) -> str:
    out: list[str] = []
    for x in w:
        if out and out[-1] == inverse_letter(x):
            out.pop()
        else:
            out.append(x)
    return "".join(out)


def is_freely_reduced(w: str) -> bool:
    return all(w[i + 1] != inverse_letter(w[i]) for i in range(len(w) - 1))


def invert(w: str) -> str:
    return w[::-1].translate(_INVERSE)


def concat(*words: str) -> str:
    return "".join(words)


def power(w: str, n: int) -> str:
    return invert(w) * -n if n < 0 else w * n


def swap(w: str) -> str:
    """The letter swap a <-> b (case preserved); conjugation by aba."""
    return w.translate(_SWAP)


def swap_power(w: str, k: int) -> str:
    return swap(w) if k % 2 else w


def exponent_sum(w: str) -> int:
    return sum(1 if x in LOWER else -1 for x in w)


def cyclic_reduce(w: str) -> str:
    """Freely reduce, then strip cancelling first/last letter pairs."""
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[j - 1] == inverse_letter(w[i]):
        i += 1
        j -= 1
    return w[i:j]


def cyclic_permutations(w: str) -> Iterator[str]:
    """All ``len(w)`` rotations, starting with ``w`` itself."""
    for i in range(len(w)):
        yield w[i:] + w[:i]


def shortlex_key(w: str) -> tuple[int, str]:
    """Sort key for short-lex order with a < A < b < B."""
    return len(w), w.translate(_SORT_KEY)


# ---------------------------------------------------------------------------
# syllables


def syllables(w: str) -> list[Syllable]:
    if not is_freely_reduced(w):
        raise WordError(f"word is not freely reduced: {w!r}")
    out: list[Syllable] = []
    for x in w:
        s = sign(x)
        b = base(x)
        if out and out[-1].base == b:
            out[-1] = Syllable(b, out[-1].exp + s)
        else:
            out.append(Syllable(b, s))
    return out


def from_syllables(syls) -> str:
    return "".join(Syllable(*s).word() for s in syls)


def is_almost_even(w: str) -> bool:
    """Every syllable exponent is even except possibly the last one."""
    syls = syllables(w)
    return all(s.exp % 2 == 0 for s in syls[:-1])


def enumerate_reduced(n: int) -> Iterator[str]:
    """All freely reduced words of length exactly ``n``, in short-lex order."""
    if n == 0:
        yield ""
        return
    stack = [(x,) for x in reversed(ALPHABET)]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n:
            yield "".join(prefix)
            continue
        bad = inverse_letter(prefix[-1])
        for x in reversed(ALPHABET):
            if x != bad:
                stack.append(prefix + (x,))
