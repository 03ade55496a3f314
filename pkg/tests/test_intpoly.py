from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from k3pf.errors import DivisionByZero, ParseError
from k3pf.intpoly import IntPoly, parse_poly

T = IntPoly.variable()

small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=6).map(IntPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


def test_trim_and_zero():
    assert IntPoly([0, 0, 0]).is_zero()
    assert IntPoly([1, 2, 0]).coeffs == (1, 2)
    assert IntPoly.zero().degree == -1
    assert IntPoly((0, 1)).degree == 1


def test_basic_arithmetic():
    p = T ** 2 - 64
    q = T ** 3 - 64 * T
    assert q == T * p
    assert (p + q) - q == p
    assert p * IntPoly.zero() == IntPoly.zero()
    assert (-p) + p == IntPoly.zero()
    assert (T + 1) ** 2 == T ** 2 + 2 * T + 1


@given(small_polys, small_polys, small_polys)
@settings(max_examples=200, deadline=None)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


def test_content_primitive():
    p = IntPoly([6, -9, 12])
    assert p.content() == 3
    assert p.primitive() == IntPoly([2, -3, 4])
    assert IntPoly([-4, -8]).primitive() == IntPoly([-1, -2])


def test_gcd_known():
    p = T ** 2 - 64
    q = T ** 3 - 64 * T
    assert p.gcd(q) == p
    assert (p * q).gcd(q * q) == T * p * p
    assert (2 * T + 2).gcd(IntPoly.const(4)) == IntPoly.const(2)
    assert IntPoly.zero().gcd(-p) == p


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=100, deadline=None)
def test_gcd_divides(a, b, c):
    g = (a * c).gcd(b * c)
    assert c.divides(g)
    assert g.divides(a * c)
    assert g.divides(b * c)


def test_exact_div():
    p = (T ** 2 - 64) * (3 * T + 5)
    assert p.exact_div(3 * T + 5) == T ** 2 - 64
    with pytest.raises(ValueError):
        (T ** 2 + 1).exact_div(T + 1)
    with pytest.raises(DivisionByZero):
        p.exact_div(IntPoly.zero())


def test_derivative_and_eval():
    p = T ** 3 - 64 * T
    assert p.derivative() == 3 * T ** 2 - 64
    assert p(2) == 8 - 128
    assert p(Fraction(1, 2)) == Fraction(1, 8) - 32


def test_shift():
    p = T ** 2
    assert p.shift(1) == T ** 2 + 2 * T + 1
    assert p.shift_q(Fraction(1, 2)) == [Fraction(1, 4), Fraction(1), Fraction(1)]


def test_string_round_trip():
    for text, expect in [
        ("t^2-64", T ** 2 - 64),
        ("t*(t^2-64)", T ** 3 - 64 * T),
        ("-6*t^5+2*t-1", -6 * T ** 5 + 2 * T - 1),
        ("(t-8)*(t+8)", T ** 2 - 64),
        ("7", IntPoly.const(7)),
        ("t**2 - 64", T ** 2 - 64),
        ("0", IntPoly.zero()),
    ]:
        assert parse_poly(text) == expect
    p = 6 * T ** 5 - 576 * T ** 3 + 12288 * T
    assert parse_poly(p.to_string()) == p
    assert IntPoly.zero().to_string() == "0"
    assert (T - 1).to_string() == "t-1"


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poly("t +")
    with pytest.raises(ParseError):
        parse_poly("x^2")
    with pytest.raises(ParseError):
        parse_poly("(t")
