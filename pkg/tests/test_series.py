import random
from fractions import Fraction

import pytest

from b3geodesics.automata import Dfa
from b3geodesics.series import (
    Poly,
    RationalFn,
    geodesic_gf_closed_form,
    gf_from_dfa,
    gf_from_matrix,
    poly_gcd,
    recurrence,
    series_coefficients,
    spherical_gf_closed_form,
)

X = Poly.x()


def test_poly_arithmetic():
    assert (X * X + X - 1) * (X * X + 2 * X - 1) == Poly((1, -3, 0, 3, 1))
    q, r = divmod(X ** 3 - 1, X - 1)
    assert q == X * X + X + 1 and not r
    assert Poly((0, 0)) == Poly()
    assert str(Poly((1, -3, 0, 3, 1))) == "x^4 + 3x^3 - 3x + 1"
    assert Poly((2, 4, 6)).content() == 2
    assert Poly((-2, -4)).primitive() == Poly((1, 2))


def test_poly_gcd():
    assert poly_gcd(X * X - 1, X - 1) == X - 1
    assert poly_gcd(Poly((2, 2)), Poly((4, 4))) == Poly((2, 2))
    assert poly_gcd(X + 2, X + 3) == Poly.const(1)


def test_exact_division_errors():
    with pytest.raises(ZeroDivisionError):
        divmod(X, Poly())
    with pytest.raises(ArithmeticError):
        (X * X + 1).exact_div(X + 1)
    with pytest.raises(ZeroDivisionError):
        RationalFn(X, 0)


def test_rational_equality_and_reduction():
    rng = random.Random(81)
    p, q = X * X + 3, X ** 3 - 2 * X + 7
    for _ in range(20):
        c = rng.choice([-5, -2, 2, 3, 7])
        assert RationalFn(p, q) == RationalFn(p * c, q * c)
    f = RationalFn((X - 1) * (X + 2), (X - 1) * (X - 3))
    assert f.num == X + 2 and f.den == X - 3
    g = RationalFn(Poly((1,)), Poly((-1, 1)) * -1)
    assert g.den.lead > 0


def test_rational_arithmetic_against_fractions():
    f = RationalFn(X + 1, X - 2)
    g = RationalFn(2 * X, X + 3)
    for x in range(4, 9):
        fx, gx = Fraction(x + 1, x - 2), Fraction(2 * x, x + 3)
        s, m = f + g, f * g
        assert Fraction(s.num(x), s.den(x)) == fx + gx
        assert Fraction(m.num(x), m.den(x)) == fx * gx


def test_series_examples():
    assert series_coefficients(geodesic_gf_closed_form(), 4) == [1, 4, 12, 36, 96]
    assert series_coefficients(spherical_gf_closed_form(), 3) == [1, 4, 12, 30]
    assert series_coefficients(RationalFn(1, 1 - X), 6) == [1] * 7
    assert series_coefficients(geodesic_gf_closed_form(), 1)[1] == 4
    assert series_coefficients(spherical_gf_closed_form(), 0) == [1]


def test_half_is_a_root():
    p = Poly((1, -3, 1, 2))
    assert p(Fraction(1, 2)) == 0


def test_recurrence_from_denominator():
    for f in (geodesic_gf_closed_form(), spherical_gf_closed_form()):
        c = recurrence(f)
        a = series_coefficients(f, 30)
        start = max(f.num.degree + 1, len(c))
        for n in range(start, 31):
            assert a[n] == sum(c[i] * a[n - 1 - i] for i in range(len(c)))


def test_gf_of_trivial_dfa():
    d = Dfa(((1, 1, 1, 1), (1, 1, 1, 1)), (True, False), 0, 1)
    assert gf_from_dfa(d) == RationalFn(1)
    assert gf_from_matrix([[0]], [1], [1]) == RationalFn(1)


def test_gf_of_free_group():
    # the free group on two generators: 1 + 4x + 12x^2 + ...
    free = gf_from_matrix([[0, 1, 1, 1, 1], [0, 1, 0, 1, 1], [0, 0, 1, 1, 1],
                           [0, 1, 1, 1, 0], [0, 1, 1, 0, 1]], [1, 0, 0, 0, 0], [1] * 5)
    assert free == RationalFn(1 + X, 1 - 3 * X)
