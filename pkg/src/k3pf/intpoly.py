"""Univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored densely in ascending power order with no trailing
zeros; the zero polynomial has an empty coefficient tuple.  Everything here
is exact: no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, ParseError


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, IntPoly):
            self.coeffs = coeffs.coeffs
            return
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        self.coeffs = _trim(int(c) for c in coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    # -- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({self})"

    # -- ring operations -----------------------------------------------

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        return self + (-other)

    def __rsub__(self, other):
        return IntPoly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly.zero()
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- content and division -------------------------------------------

    def content(self):
        """gcd of the coefficients (nonnegative); 0 for the zero polynomial."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self):
        """Primitive part with the sign of the leading coefficient kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(tuple(c // g for c in self.coeffs))

    def exact_div_int(self, d):
        if d == 0:
            raise DivisionByZero("integer division by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ValueError("inexact integer division of coefficients")
            out.append(q)
        return IntPoly(out)

    def exact_div(self, other):
        """Exact polynomial quotient; raises if ``other`` does not divide."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero():
            return IntPoly.zero()
        rem = list(self.coeffs)
        db = other.degree
        lb = other.lead
        out = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lb)
            if r:
                raise ValueError("inexact polynomial division")
            out[i - db] = q
            for j, cb in enumerate(other.coeffs):
                rem[i - db + j] -= q * cb
        if any(rem):
            raise ValueError("inexact polynomial division")
        return IntPoly(out)

    def pseudo_rem(self, other):
        """Pseudo-remainder of self by other (lead(other)^k scaled)."""
        if other.is_zero():
            raise DivisionByZero("pseudo-division by zero")
        rem = self
        db = other.degree
        lb = other.lead
        while not rem.is_zero() and rem.degree >= db:
            shift = rem.degree - db
            rem = rem * lb - other * IntPoly.monomial(shift, rem.lead)
        return rem

    def divmod_q(self, other):
        """Quotient and remainder over Q, as Fraction-coefficient lists."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        db = other.degree
        lb = Fraction(other.lead)
        if len(rem) - 1 < db:
            return [], rem
        out = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            q = c / lb
            out[i - db] = q
            for j, cb in enumerate(other.coeffs):
                rem[i - db + j] -= q * cb
        while rem and not rem[-1]:
            rem.pop()
        return out, rem

    def divides(self, other):
        """True iff self divides other over Q (hence over Z up to content)."""
        if self.is_zero():
            return other.is_zero()
        _, rem = other.divmod_q(self)
        return not rem

    # -- gcd --------------------------------------------------------------

    def gcd(self, other):
        """Primitive gcd over Z with positive leading coefficient."""
        a, b = self, other
        if a.is_zero():
            g = b
            return g if g.lead >= 0 else -g
        if b.is_zero():
            return a if a.lead >= 0 else -a
        ca, cb = a.content(), b.content()
        cont = gcd(ca, cb)
        a, b = a.primitive(), b.primitive()
        if a.degree < b.degree:
            a, b = b, a
        # primitive PRS
        while not b.is_zero():
            r = a.pseudo_rem(b)
            a, b = b, r.primitive()
        if a.lead < 0:
            a = -a
        return a * cont

    # -- calculus and evaluation -----------------------------------------

    def derivative(self):
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def __call__(self, x):
        """Evaluate at x (int or Fraction) by Horner's rule."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c):
        """Compose with (var + c) for an integer c."""
        out = IntPoly.zero()
        for coeff in reversed(self.coeffs):
            out = out * IntPoly((c, 1)) + IntPoly.const(coeff)
        return out

    def shift_q(self, c):
        """Compose with (var + c) for Fraction c; Fraction coefficient list."""
        c = Fraction(c)
        out = [Fraction(0)]
        for coeff in reversed(self.coeffs):
            # out = out*(x + c) + coeff
            nxt = [Fraction(0)] * (len(out) + 1)
            for i, v in enumerate(out):
                nxt[i + 1] += v
                nxt[i] += v * c
            nxt[0] += coeff
            out = nxt
        while len(out) > 1 and not out[-1]:
            out.pop()
        return out

    # -- string form --------------------------------------------------------

    def to_string(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = var if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            s += sign + body
        return s

    def __str__(self):
        return self.to_string()


def parse_poly(text, var="t"):
    """Parse an integer-coefficient polynomial in one variable.

    Accepts +, -, *, ^ (and ** as a synonym), parentheses, integer literals
    and the session variable name.  Products of parenthesized factors are
    expanded, so factored input like ``t*(t^2-64)`` is fine.
    """
    tokens = _tokenize(text, var)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take(kind=None):
        tok = peek()
        if tok is None or (kind is not None and tok[0] != kind):
            raise ParseError(f"unexpected token {tok!r} in {text!r}")
        pos[0] += 1
        return tok

    def atom():
        tok = peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {text!r}")
        if tok[0] == "int":
            take()
            return IntPoly.const(tok[1])
        if tok[0] == "var":
            take()
            return IntPoly.variable()
        if tok[0] == "(":
            take()
            e = expr()
            take(")")
            return e
        raise ParseError(f"unexpected token {tok!r} in {text!r}")

    def power():
        base = atom()
        if peek() and peek()[0] == "^":
            take()
            exp_tok = take("int")
            if exp_tok[1] < 0:
                raise ParseError("negative exponent")
            return base ** exp_tok[1]
        return base

    def unary():
        sign = 1
        while peek() and peek()[0] in "+-":
            if take()[0] == "-":
                sign = -sign
        p = power()
        return p if sign > 0 else -p

    def term():
        p = unary()
        while peek() and (peek()[0] == "*" or peek()[0] in ("int", "var", "(")):
            if peek()[0] == "*":
                take()
            p = p * unary()
        return p

    def expr():
        p = term()
        while peek() and peek()[0] in "+-":
            op = take()[0]
            q = term()
            p = p + q if op == "+" else p - q
        return p

    result = expr()
    if pos[0] != len(tokens):
        raise ParseError(f"trailing input in {text!r}")
    return result


def _tokenize(text, var):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif text.startswith(var, i) and (
            i + len(var) == len(text) or not text[i + len(var)].isalnum()
        ):
            tokens.append(("var", var))
            i += len(var)
        elif ch in "+-*()^":
            tokens.append((ch, ch))
            i += 1
        elif text.startswith("**", i):
            tokens.append(("^", "^"))
            i += 2
        else:
            raise ParseError(f"bad character {ch!r} in {text!r}")
    # fold ** into ^
    out = []
    k = 0
    while k < len(tokens):
        if k + 1 < len(tokens) and tokens[k][0] == "*" and tokens[k + 1][0] == "*":
            out.append(("^", "^"))
            k += 2
        else:
            out.append(tokens[k])
            k += 1
    return out
