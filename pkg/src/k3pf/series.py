"""Truncated Laurent/power series with explicit knowledge windows.

A series stores exact Fraction coefficients on integer exponents together
with the window on which those coefficients are trustworthy: ``known_lo``
(None means exact arbitrarily far down) and ``known_hi`` (None means exact
arbitrarily far up).  Arithmetic shrinks the windows conservatively, so a
coefficient can be read only if no truncated information could reach it.
Period expansions at t = infinity live on windows [-N, +inf); local power
series solutions live on (-inf, N].
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .errors import TruncationTooShort
from .intpoly import IntPoly
from .lattice import vadd


class TLaurentSeries:
    __slots__ = ("coeffs", "known_lo", "known_hi")

    def __init__(self, coeffs, known_lo, known_hi):
        self.known_lo = known_lo
        self.known_hi = known_hi
        clean = {}
        for e, c in coeffs.items():
            c = Fraction(c)
            if not c:
                continue
            if known_lo is not None and e < known_lo:
                continue
            if known_hi is not None and e > known_hi:
                continue
            clean[int(e)] = c
        self.coeffs = clean

    def coefficient(self, e):
        """Exact coefficient of t^e; raises if e is outside the window."""
        if (self.known_lo is not None and e < self.known_lo) or \
                (self.known_hi is not None and e > self.known_hi):
            raise TruncationTooShort(f"coefficient of exponent {e} is not known")
        return self.coeffs.get(e, Fraction(0))

    def known_exponents(self):
        return sorted(self.coeffs)

    def potential_top(self):
        """Largest exponent that could carry a nonzero coefficient."""
        if self.known_hi is None:
            return max(self.coeffs, default=None)
        return self.known_hi

    def potential_bottom(self):
        """Smallest exponent that could carry a nonzero coefficient."""
        if self.known_lo is None:
            return min(self.coeffs, default=None)
        return self.known_lo

    def num_known(self):
        """Number of knowable coefficients up to the truncation (None if all)."""
        if self.known_lo is None and self.known_hi is None:
            return None
        top = self.potential_top()
        bot = self.potential_bottom()
        if top is None or bot is None:
            return 0
        return max(top - bot + 1, 0)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        lo = _max_opt(self.known_lo, other.known_lo)
        hi = _min_opt(self.known_hi, other.known_hi)
        out = defaultdict(Fraction)
        for e, c in self.coeffs.items():
            out[e] += c
        for e, c in other.coeffs.items():
            out[e] += c
        return TLaurentSeries(out, lo, hi)

    def __neg__(self):
        return TLaurentSeries({e: -c for e, c in self.coeffs.items()},
                              self.known_lo, self.known_hi)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q):
        q = Fraction(q)
        return TLaurentSeries({e: c * q for e, c in self.coeffs.items()},
                              self.known_lo, self.known_hi)

    def derivative(self):
        out = {e - 1: c * e for e, c in self.coeffs.items() if e != 0}
        return TLaurentSeries(
            out,
            None if self.known_lo is None else self.known_lo - 1,
            None if self.known_hi is None else self.known_hi - 1)

    def mul_poly(self, p):
        """Multiply by an integer polynomial in t."""
        p = IntPoly(p)
        if p.is_zero():
            return TLaurentSeries({}, None, None)
        support = [i for i, c in enumerate(p.coeffs) if c]
        pmin, pmax = support[0], support[-1]
        out = defaultdict(Fraction)
        for e, c in self.coeffs.items():
            for i in support:
                out[e + i] += c * p.coeffs[i]
        return TLaurentSeries(
            out,
            None if self.known_lo is None else self.known_lo + pmax,
            None if self.known_hi is None else self.known_hi + pmin)

    def __mul__(self, other):
        """Series product; both factors must be exact on the same side."""
        if not isinstance(other, TLaurentSeries):
            return self.scale(other)
        if self.known_lo is None and other.known_lo is None:
            ord_self = min(self.coeffs, default=(self.known_hi or 0) + 1)
            ord_other = min(other.coeffs, default=(other.known_hi or 0) + 1)
            hi = _min_opt(
                None if self.known_hi is None else self.known_hi + ord_other,
                None if other.known_hi is None else other.known_hi + ord_self)
            lo = None
        elif self.known_hi is None and other.known_hi is None:
            top_self = max(self.coeffs, default=(self.known_lo or 0) - 1)
            top_other = max(other.coeffs, default=(other.known_lo or 0) - 1)
            lo = _max_opt(
                None if self.known_lo is None else self.known_lo + top_other,
                None if other.known_lo is None else other.known_lo + top_self)
            hi = None
        else:
            raise TruncationTooShort(
                "product of series truncated on opposite sides")
        out = defaultdict(Fraction)
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] += c1 * c2
        return TLaurentSeries(out, lo, hi)

    def is_zero_on_window(self):
        return not self.coeffs

    def __repr__(self):
        lo = "-inf" if self.known_lo is None else self.known_lo
        hi = "+inf" if self.known_hi is None else self.known_hi
        return f"TLaurentSeries({len(self.coeffs)} terms on [{lo}, {hi}])"

    def to_dict(self):
        d = {"known_lo": self.known_lo, "known_hi": self.known_hi,
             "coefficients": {str(e): str(c) for e, c in sorted(self.coeffs.items())}}
        return d


def _max_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _min_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# -- the principal period -------------------------------------------------------------


def constant_terms(generators, count):
    """CT(g^m) for m = 0..count-1, g the sum of monomials u^x over generators.

    Computed by iterated sparse convolution of exponent distributions.
    """
    gens = [tuple(x) for x in generators]
    cur = {(0,) * len(gens[0]): 1}
    zero = (0,) * len(gens[0])
    cts = [1]
    for _ in range(1, count):
        nxt = defaultdict(int)
        for e, c in cur.items():
            for v in gens:
                nxt[vadd(e, v)] += c
        cur = dict(nxt)
        cts.append(cur.get(zero, 0))
    return cts


def principal_period_series(spec, N):
    """Expansion of the torus period of the pencil around t = infinity.

    The coefficient of t^(-m-1) is (-1)^m CT(g^m) where g collects the
    monomials of the nonzero dual lattice points; the series is exact on
    [-N, +inf).
    """
    if N < 1:
        raise TruncationTooShort("need at least one coefficient")
    origin = (0,) * spec.polytope.dim
    gens = [p for p in spec.dual.lattice_points() if p != origin]
    cts = constant_terms(gens, N)
    coeffs = {-(m + 1): Fraction((-1) ** m * cts[m]) for m in range(N)}
    return TLaurentSeries(coeffs, known_lo=-N, known_hi=None)


# -- operator application -------------------------------------------------------------


@dataclass
class AnnihilationReport:
    annihilates: bool
    checked: int
    window_lo: int
    failures: list

    def __bool__(self):
        return self.annihilates


def apply_cleared(polys, series):
    """sum_j p_j * d^j(series) for integer polynomials p_j."""
    total = None
    deriv = series
    for j, p in enumerate(polys):
        if j > 0:
            deriv = deriv.derivative()
        if IntPoly(p).is_zero():
            continue
        term = deriv.mul_poly(p)
        total = term if total is None else total + term
    if total is None:
        return TLaurentSeries({}, None, None)
    return total


def annihilates(L, s):
    """Whether the operator kills the series on every checkable coefficient.

    Coefficients of L(s) that truncation could corrupt are excluded and the
    surviving window is reported.  Raises TruncationTooShort when the series
    carries fewer than order + 1 known coefficients or when no coefficient
    of L(s) survives the truncation bookkeeping.
    """
    known = s.num_known()
    if known is not None and known < L.order + 1:
        raise TruncationTooShort(
            f"series has {known} known coefficients, need {L.order + 1}")
    polys = L.canonical_cleared()
    residual = apply_cleared(polys, s)
    # the checkable window: what could be nonzero, intersected with what is known
    pot_top, pot_bot = None, None
    top_s, bot_s = s.potential_top(), s.potential_bottom()
    for j, p in enumerate(polys):
        if p.is_zero():
            continue
        support = [i for i, c in enumerate(p.coeffs) if c]
        if top_s is not None:
            cand = top_s - j + support[-1]
            pot_top = cand if pot_top is None else max(pot_top, cand)
        if bot_s is not None:
            cand = bot_s - j + support[0]
            pot_bot = cand if pot_bot is None else min(pot_bot, cand)
    if pot_top is None or pot_bot is None:
        # the zero series: nothing can be nonzero, vacuously annihilated
        return AnnihilationReport(True, 0, 0, [])
    lo = pot_bot if residual.known_lo is None else max(residual.known_lo, pot_bot)
    hi = pot_top if residual.known_hi is None else min(residual.known_hi, pot_top)
    checked = hi - lo + 1
    if checked <= 0:
        raise TruncationTooShort("no checkable coefficients survive truncation")
    failures = sorted((e, c) for e, c in residual.coeffs.items()
                      if lo <= e <= hi)
    return AnnihilationReport(not failures, checked, lo, failures)
