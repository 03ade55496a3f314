"""Rational functions in one variable over Q, as reduced integer-poly pairs.

The canonical representative of p/q has:

* polynomial gcd(num, den) = 1,
* gcd of the two integer contents = 1,
* positive leading coefficient on the denominator.

Equality is structural equality of canonical forms, which makes comparisons
of differential-operator coefficients exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, ParseError
from .intpoly import IntPoly, parse_poly


def rf_normalize(num, den):
    """Reduce an IntPoly pair to the unique canonical representative."""
    num = IntPoly(num)
    den = IntPoly(den)
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return RationalFunction._raw(IntPoly.zero(), IntPoly.one())
    # gcd() already folds in the gcd of the integer contents
    g = num.gcd(den)
    if g != IntPoly.one():
        num = num.exact_div(g)
        den = den.exact_div(g)
    if den.lead < 0:
        num, den = -num, -den
    return RationalFunction._raw(num, den)


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, RationalFunction) and den == 1:
            self.num, self.den = num.num, num.den
            return
        if isinstance(num, Fraction) and den == 1:
            num, den = num.numerator, num.denominator
        r = rf_normalize(IntPoly(num), IntPoly(den))
        self.num, self.den = r.num, r.den

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls._raw(IntPoly.zero(), IntPoly.one())

    @classmethod
    def one(cls):
        return cls._raw(IntPoly.one(), IntPoly.one())

    @classmethod
    def variable(cls):
        return cls._raw(IntPoly.variable(), IntPoly.one())

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        return cls._raw(IntPoly.const(q.numerator), IntPoly.const(q.denominator))

    # -- queries -------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den == IntPoly.one()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RF({self})"

    # -- field operations ------------------------------------------------------

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        g = self.den.gcd(other.den)
        if g == IntPoly.one():
            num = self.num * other.den + other.num * self.den
            return rf_normalize(num, self.den * other.den)
        da = self.den.exact_div(g)
        db = other.den.exact_div(g)
        num = self.num * db + other.num * da
        return rf_normalize(num, da * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalFunction.zero()
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1 = self.num.exact_div(g1) if g1 != IntPoly.one() else self.num
        d2 = other.den.exact_div(g1) if g1 != IntPoly.one() else other.den
        n2 = other.num.exact_div(g2) if g2 != IntPoly.one() else other.num
        d1 = self.den.exact_div(g2) if g2 != IntPoly.one() else self.den
        return rf_normalize(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return self * RationalFunction._raw(other.den, other.num)._resign()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def _resign(self):
        if self.den.lead < 0:
            return RationalFunction._raw(-self.num, -self.den)
        return self

    def inverse(self):
        return RationalFunction.one() / self

    # -- calculus and evaluation ----------------------------------------------

    def derivative(self):
        n, d = self.num, self.den
        return rf_normalize(
            n.derivative() * d - n * d.derivative(), d * d
        )

    def __call__(self, x):
        """Evaluate at a Fraction/int; raises ZeroDivisionError on a pole."""
        dv = self.den(Fraction(x))
        if dv == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(self.num(Fraction(x))) / dv

    def as_fraction(self):
        """The value as a Fraction if constant, else None."""
        if self.num.degree <= 0 and self.den.degree <= 0:
            if self.is_zero():
                return Fraction(0)
            return Fraction(self.num.lead, self.den.lead)
        return None

    # -- serialization -----------------------------------------------------------

    def to_string(self, var="t"):
        ns = self.num.to_string(var)
        if self.den == IntPoly.one():
            return ns
        ds = self.den.to_string(var)
        if sum(1 for c in self.num.coeffs if c) > 1:
            ns = f"({ns})"
        if sum(1 for c in self.den.coeffs if c) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __str__(self):
        return self.to_string()


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.from_fraction(Fraction(x))
    if isinstance(x, IntPoly):
        return RationalFunction._raw(x, IntPoly.one())
    return None


def rf(num, den=1):
    """Shorthand constructor accepting ints, Fractions or IntPolys."""
    if isinstance(num, (int, Fraction)) and isinstance(den, (int, Fraction)):
        q = Fraction(num) / Fraction(den)
        return RationalFunction.from_fraction(q)
    return RationalFunction(IntPoly(num), IntPoly(den))


def parse_rf(text, var="t"):
    """Parse "num/den" with polynomial num and den; result is canonical."""
    text = text.strip()
    depth = 0
    split_at = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split_at is not None:
                raise ParseError(f"multiple top-level '/' in {text!r}")
            split_at = i
    if split_at is None:
        return RationalFunction(parse_poly(text, var))
    num = parse_poly(text[:split_at], var)
    den = parse_poly(text[split_at + 1:], var)
    return RationalFunction(num, den)
