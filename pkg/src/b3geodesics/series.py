"""Exact integer polynomials, rational functions and growth series.

Everything is over ``int``; there is no floating point anywhere. Rational
functions are kept reduced: the gcd of numerator and denominator is removed
with a primitive polynomial remainder sequence, common integer content is
divided out, and the denominator's leading coefficient is made positive.
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, Sequence


class Poly:
    """Polynomial with integer coefficients, stored in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: "Poly | int") -> "Poly":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other: "Poly | int") -> "Poly":
        other = _lift(other)
        if not self or not other:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Division with remainder; each quotient coefficient must be an integer."""
        other = _lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.lead
        for k in range(len(quot) - 1, -1, -1):
            top = rem[k + other.degree]
            if top % lead:
                raise ArithmeticError(f"{self} / {other} leaves a non-integer quotient")
            q = top // lead
            quot[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def content(self) -> int:
        """Gcd of the coefficients, signed like the leading coefficient."""
        if not self:
            return 0
        g = reduce(gcd, self.coeffs, 0)
        return g if self.lead > 0 else -g

    def primitive(self) -> "Poly":
        c = self.content()
        return Poly(x // c for x in self.coeffs) if c else Poly()

    def pseudo_rem(self, other: "Poly") -> "Poly":
        """Remainder of ``lead(other)^(deg self - deg other + 1) * self`` by ``other``."""
        if self.degree < other.degree:
            return self
        scale = other.lead ** (self.degree - other.degree + 1)
        return divmod(self * scale, other)[1]

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for n in range(self.degree, -1, -1):
            c = self.coeffs[n]
            if not c:
                continue
            mag = abs(c)
            mono = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            body = str(mag) if (mag != 1 or n == 0) else ""
            terms.append(("-" if c < 0 else "+", body + mono))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, t in terms[1:]:
            out += f" {s} {t}"
        return out


def _lift(p: "Poly | int") -> Poly:
    return p if isinstance(p, Poly) else Poly.const(p)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor in Z[x], positive leading coefficient."""
    if not p:
        return q.primitive() * abs(q.content()) if q else Poly()
    if not q:
        return p.primitive() * abs(p.content())
    c = gcd(p.content(), q.content())
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if r else r)
    return a.primitive() * c


class RationalFn:
    """``num / den`` over Z[x], always stored reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | int, den: Poly | int = 1):
        num, den = _lift(num), _lift(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c = gcd(num.content(), den.content()) if num else abs(den.content())
        if den.lead < 0:
            c = -c
        self.num = Poly(x // c for x in num.coeffs)
        self.den = Poly(x // c for x in den.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Poly)):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other) -> "RationalFn":
        other = other if isinstance(other, RationalFn) else RationalFn(other)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        other = other if isinstance(other, RationalFn) else RationalFn(other)
        return self + (-other)

    def __mul__(self, other) -> "RationalFn":
        other = other if isinstance(other, RationalFn) else RationalFn(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = other if isinstance(other, RationalFn) else RationalFn(other)
        return RationalFn(self.num * other.den, self.den * other.num)

    def __repr__(self) -> str:
        return f"RationalFn({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def series_coefficients(f: RationalFn, n: int) -> list[int]:
    """Power series coefficients ``a_0 .. a_n`` of ``f``."""
    d0 = f.den[0]
    if d0 == 0:
        raise ValueError("denominator vanishes at 0; no power series expansion")
    out: list[int] = []
    for k in range(n + 1):
        acc = f.num[k] - sum(f.den[i] * out[k - i] for i in range(1, min(k, f.den.degree) + 1))
        if acc % d0:
            raise ArithmeticError("series has non-integer coefficients")
        out.append(acc // d0)
    return out


def recurrence(f: RationalFn) -> list[int]:
    """Coefficients ``c_1..c_d`` with ``a_n = sum c_i a_{n-i}`` for ``n > deg num``.

    Read off the reduced denominator; requires ``den(0) = +-1``.
    """
    d0 = f.den[0]
    if abs(d0) != 1:
        raise ValueError("denominator constant term must be a unit")
    return [-f.den[i] * d0 for i in range(1, f.den.degree + 1)]


# ---------------------------------------------------------------------------
# generating functions of automata


def _bareiss_last(rows: list[list[Poly]]) -> tuple[Poly, Poly]:
    """Fraction-free elimination on an n x (n+1) augmented system.

    Returns ``(det_last, det)`` where the last unknown equals ``det_last / det``.
    """
    n = len(rows)
    a = [list(r) for r in rows]
    prev = Poly.const(1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                raise ArithmeticError("singular system")
            a[k], a[swap] = a[swap], a[k]
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n + 1):
                t = row_i[j] * piv
                if aik and row_k[j]:
                    t = t - aik * row_k[j]
                row_i[j] = t.exact_div(prev) if prev.degree > 0 or prev.lead != 1 else t
            row_i[k] = Poly()
        prev = piv
    if not a[n - 1][n - 1]:
        raise ArithmeticError("singular system")
    return a[n - 1][n], a[n - 1][n - 1]


def gf_from_matrix(m: Sequence[Sequence[int]], v1: Sequence[int], v2: Sequence[int]) -> RationalFn:
    """``v1 (I - x M)^-1 v2`` for a unit row ``v1``, as a reduced rational function."""
    n = len(m)
    if sorted(v1) != [0] * (n - 1) + [1]:
        raise ValueError("v1 must be a unit row vector")
    s = list(v1).index(1)
    # put the start state last so its unknown falls out of the elimination
    order = [i for i in range(n) if i != s] + [s]
    rows = []
    for i in order:
        row = []
        for j in order:
            c = (1 if i == j else 0)
            row.append(Poly((c, -m[i][j])))
        row.append(Poly.const(v2[i]))
        rows.append(row)
    top, bottom = _bareiss_last(rows)
    return RationalFn(top, bottom)


def gf_from_dfa(d) -> RationalFn:
    """Generating function of the accepted language of a prefix-closed DFA."""
    from .automata import transfer_matrix

    return gf_from_matrix(*transfer_matrix(d))


# ---------------------------------------------------------------------------
# closed forms


def geodesic_gf_closed_form() -> RationalFn:
    num = Poly((1, 1, 0, 3, 1))  # x^4 + 3x^3 + x + 1
    den = Poly((-1, 1, 1)) * Poly((-1, 2, 1))  # (x^2 + x - 1)(x^2 + 2x - 1)
    return RationalFn(num, den)


def spherical_gf_closed_form() -> RationalFn:
    num = Poly((-1, 0, 0, 1, 2))  # 2x^4 + x^3 - 1
    den = Poly((1, -3, 1, 2)) * Poly((-1, 1))  # (2x^3 + x^2 - 3x + 1)(x - 1)
    return RationalFn(num, den)


# names used by the original interface
geodesic_gf_paper = geodesic_gf_closed_form
spherical_gf_paper = spherical_gf_closed_form
