"""Linear ODE algebra over Q(t): operators, symmetric squares, normal forms.

A differential operator is a coefficient list c_0 .. c_r for
c_r d^r/dt^r + ... + c_0.  The canonical cleared form divides by the leading
coefficient and then clears denominators with their lcm, which yields the
unique coprime integer-polynomial representative of the operator's
projective class (common polynomial factors in a presented coefficient list
therefore do not survive canonicalization).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import (DegenerateLeading, ShapeError, SingularPoint, WrongOrder)
from .intpoly import IntPoly
from .ratfunc import RationalFunction, parse_rf
from .series import TLaurentSeries


class DifferentialOperator:
    """c_0 .. c_r acting as sum c_j d^j/dt^j, with c_r nonzero."""

    __slots__ = ("coeffs", "_canonical")

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, RationalFunction)
                  else RationalFunction(IntPoly(c)) if isinstance(c, IntPoly)
                  else RationalFunction.from_fraction(Fraction(c))
                  for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            raise ShapeError("zero operator")
        self.coeffs = tuple(coeffs)
        self._canonical = None

    @property
    def order(self):
        return len(self.coeffs) - 1

    def monic_coeffs(self):
        lead = self.coeffs[-1]
        return tuple(c / lead for c in self.coeffs)

    def canonical_cleared(self):
        """Unique coprime IntPoly coefficients of the projective class."""
        if self._canonical is None:
            monic = self.monic_coeffs()
            lcm = IntPoly.one()
            for c in monic:
                if not c.is_zero():
                    g = lcm.gcd(c.den)
                    lcm = lcm * c.den.exact_div(g)
            polys = [c.num * lcm.exact_div(c.den) if not c.is_zero()
                     else IntPoly.zero() for c in monic]
            content = 0
            for p in polys:
                content = _int_gcd(content, p.content())
                if content == 1:
                    break
            if content > 1:
                polys = [p.exact_div_int(content) for p in polys]
            if polys[-1].lead < 0:
                polys = [-p for p in polys]
            self._canonical = tuple(polys)
        return self._canonical

    def __eq__(self, other):
        """Projective equality: identical canonical cleared forms."""
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        return self.canonical_cleared() == other.canonical_cleared()

    def __hash__(self):
        return hash(self.canonical_cleared())

    def to_dict(self):
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, d, var="t"):
        return cls([parse_rf(s, var) for s in d["coeffs"]])

    def to_text(self, var="t", func="w"):
        """Human rendering with primes, leading term first."""
        parts = []
        for j in range(self.order, -1, -1):
            c = self.coeffs[j]
            if c.is_zero():
                continue
            fn = func + "'" * j
            if c == RationalFunction.one():
                parts.append(fn)
            else:
                parts.append(f"{_pretty_rf(c, var)} {fn}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DifferentialOperator(order={self.order})"


def _pretty_rf(c, var):
    """Lightly factored rendering: integer content and powers of t pulled out."""
    num, den = c.num, c.den
    return f"({_pretty_poly(num, var)})/({_pretty_poly(den, var)})" \
        if den != IntPoly.one() else f"({_pretty_poly(num, var)})"


def _pretty_poly(p, var):
    k = 0
    while k <= p.degree and p.coeffs[k] == 0:
        k += 1
    rest = IntPoly(p.coeffs[k:])
    content = rest.content()
    if rest.lead < 0:
        content = -content
    rest = rest.exact_div_int(content) if content not in (0, 1) else rest
    bits = []
    if content not in (0, 1):
        bits.append(str(content))
    if k == 1:
        bits.append(var)
    elif k > 1:
        bits.append(f"{var}^{k}")
    body = rest.to_string(var)
    if body != "1" or not bits:
        bits.append(f"({body})" if sum(1 for c in rest.coeffs if c) > 1 else body)
    return "*".join(bits)


# -- symmetric squares -------------------------------------------------------------


def symmetric_square(a2, a1, a0):
    """Third-order operator whose solutions are products of solutions of
    a2 y'' + a1 y' + a0 y = 0."""
    a2, a1, a0 = _as_rf3(a2, a1, a0)
    if a2.is_zero():
        raise DegenerateLeading("a2 = 0")
    b3 = a2 * a2
    b2 = 3 * a1 * a2
    b1 = 4 * a0 * a2 + 2 * a1 * a1 + a2 * a1.derivative() - a1 * a2.derivative()
    b0 = 4 * a0 * a1 + 2 * a0.derivative() * a2 - 2 * a0 * a2.derivative()
    return DifferentialOperator([b0, b1, b2, b3])


def symmetric_square_root(L):
    """Second-order coefficients whose symmetric square is L, or None.

    From the monic coefficients p2, p1, p0 of L the candidate is read off as
    P = p2/3 and R = (p1 - 2P^2 - P')/4; the remaining coefficient identity
    4RP + 2R' = p0 is then checked exactly.
    """
    if not isinstance(L, DifferentialOperator) or L.order != 3:
        raise WrongOrder("symmetric square root needs an order-3 operator")
    p0, p1, p2, _ = L.monic_coeffs()
    P = p2 / 3
    R = (p1 - 2 * P * P - P.derivative()) / 4
    if 4 * R * P + 2 * R.derivative() != p0:
        return None
    return _clear_triple(RationalFunction.one(), P, R)


def _clear_triple(a2, a1, a0):
    lcm = IntPoly.one()
    for c in (a2, a1, a0):
        if not c.is_zero():
            g = lcm.gcd(c.den)
            lcm = lcm * c.den.exact_div(g)
    polys = [c.num * lcm.exact_div(c.den) if not c.is_zero() else IntPoly.zero()
             for c in (a2, a1, a0)]
    content = 0
    for p in polys:
        content = _int_gcd(content, p.content())
        if content == 1:
            break
    if content > 1:
        polys = [p.exact_div_int(content) for p in polys]
    if polys[0].lead < 0:
        polys = [-p for p in polys]
    return tuple(RationalFunction(p) for p in polys)


def projective_normal_form(a2, a1, a0):
    """Q with y'' + Q y = 0 the gauge-normalized form of a2 y'' + a1 y' + a0 y."""
    a2, a1, a0 = _as_rf3(a2, a1, a0)
    if a2.is_zero():
        raise DegenerateLeading("a2 = 0")
    P = a1 / a2
    R = a0 / a2
    return R - P.derivative() / 2 - P * P / 4


def _as_rf3(a2, a1, a0):
    out = []
    for c in (a2, a1, a0):
        if isinstance(c, RationalFunction):
            out.append(c)
        elif isinstance(c, IntPoly):
            out.append(RationalFunction(c))
        else:
            out.append(RationalFunction.from_fraction(Fraction(c)))
    return tuple(out)


# -- local power-series solutions -------------------------------------------------------------


def recentered_cleared(coeffs, point):
    """Coefficient polynomials rewritten in x = t - point, over Z.

    ``coeffs`` are RationalFunctions c_0..c_r; the operator is scaled by a
    common denominator, so the result represents the same equation.
    """
    point = Fraction(point)
    coeffs = [c if isinstance(c, RationalFunction) else RationalFunction(c)
              for c in coeffs]
    lead = coeffs[-1]
    lcm = IntPoly.one()
    for c in coeffs:
        if not c.is_zero():
            g = lcm.gcd(c.den)
            lcm = lcm * c.den.exact_div(g)
    polys = [c.num * lcm.exact_div(c.den) if not c.is_zero() else IntPoly.zero()
             for c in coeffs]
    shifted = [p.shift_q(point) for p in polys]
    denom = 1
    for s in shifted:
        for q in s:
            denom = denom * q.denominator // _int_gcd(denom, q.denominator)
    out = []
    for s in shifted:
        out.append(IntPoly([int(q * denom) for q in s]))
    return out, lead


def local_series_solutions(a2, a1, a0, point, N):
    """The two fundamental power-series solutions at an ordinary point.

    Returns series in x = t - point with initial data (1, 0) and (0, 1),
    each carrying exact coefficients through x^N.
    """
    a2, a1, a0 = _as_rf3(a2, a1, a0)
    if a2.is_zero():
        raise DegenerateLeading("a2 = 0")
    (A0, A1, A2), _ = recentered_cleared([a0, a1, a2], point)
    if A2(Fraction(0)) == 0:
        raise SingularPoint(f"t = {point} is a singular point")
    sols = []
    for init in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))):
        b = list(init) + [Fraction(0)] * (N - 1)
        lead = Fraction(A2.coeffs[0])
        for m in range(0, N - 1):
            # coefficient of x^m in A2 y'' + A1 y' + A0 y = 0 solved for b_{m+2}
            acc = Fraction(0)
            for i, ci in enumerate(A2.coeffs):
                k = m - i + 2
                if 2 <= k <= m + 1 and ci:
                    acc += ci * k * (k - 1) * b[k]
            for i, ci in enumerate(A1.coeffs):
                k = m - i + 1
                if 1 <= k <= m + 1 and ci:
                    acc += ci * k * b[k]
            for i, ci in enumerate(A0.coeffs):
                k = m - i
                if 0 <= k <= m + 1 and ci:
                    acc += ci * b[k]
            b[m + 2] = -acc / (lead * (m + 2) * (m + 1))
        series = TLaurentSeries({e: c for e, c in enumerate(b) if c},
                                known_lo=None, known_hi=N)
        sols.append(series)
    return tuple(sols)
