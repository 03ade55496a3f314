"""Cox-ring grading, graded monomials, and symmetric hypersurface pencils.

The grading of the homogeneous coordinate ring by the divisor class group is
presented through the Smith normal form of the ray pairing matrix, so degree
classes carry their torsion exactly.  The fan's cone structure is never
materialized: rays plus the grading determine everything computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (Degenerate, HypothesisViolated, NoSuchDegree,
                     NotARaySymmetry, NotInvariant, NotReflexive, ShapeError)
from .lattice import LatticePolytope, dot, orbits
from .ratfunc import RationalFunction
from . import smith


@dataclass(frozen=True)
class DegreeClass:
    """An element of the divisor class group Z^{q-n} (+) torsion.

    ``torsion`` holds residues modulo the matching entries of ``mods`` (the
    nontrivial invariant factors of the pairing matrix).
    """

    torsion: tuple
    mods: tuple
    free: tuple

    def _check(self, other):
        if self.mods != other.mods or len(self.free) != len(other.free):
            raise ShapeError("degree classes from different gradings")

    def __add__(self, other):
        self._check(other)
        return DegreeClass(
            tuple((a + b) % m for a, b, m in
                  zip(self.torsion, other.torsion, self.mods)),
            self.mods,
            tuple(a + b for a, b in zip(self.free, other.free)))

    def __sub__(self, other):
        self._check(other)
        return DegreeClass(
            tuple((a - b) % m for a, b, m in
                  zip(self.torsion, other.torsion, self.mods)),
            self.mods,
            tuple(a - b for a, b in zip(self.free, other.free)))

    def scaled(self, k):
        return DegreeClass(
            tuple((a * k) % m for a, m in zip(self.torsion, self.mods)),
            self.mods,
            tuple(a * k for a in self.free))

    def is_zero(self):
        return all(x == 0 for x in self.torsion) and \
            all(x == 0 for x in self.free)


class CoxGrading:
    """Degree data for the coordinate ring of the toric variety of a fan.

    rays: the primitive ray generators (one coordinate z_i per ray).
    The class of an exponent vector a in Z^q is U a read modulo the
    invariant factors of the pairing matrix, with the trivial rows dropped.
    """

    def __init__(self, rays):
        rays = [tuple(int(x) for x in r) for r in rays]
        if not rays:
            raise ShapeError("no rays")
        self.n = len(rays[0])
        if any(len(r) != self.n for r in rays):
            raise ShapeError("rays of mixed dimension")
        if len(set(rays)) != len(rays):
            raise ShapeError("duplicate rays")
        self.rays = list(rays)
        self.q = len(rays)
        b = [list(r) for r in rays]
        if smith.int_rank(b) != self.n:
            raise ShapeError("rays do not span the lattice over Q")
        u, d, _ = smith.smith_normal_form(b)
        self._u = u
        self._uinv = smith.invert_unimodular(u)
        self._divisors = [d[i][i] for i in range(self.n)]
        self.torsion = tuple(m for m in self._divisors if m > 1)
        self.rank = self.q - self.n
        self._dual_radius = None

    @classmethod
    def from_polytope(cls, P):
        """Grading with one ray per nonzero lattice point of P."""
        if not P.is_reflexive():
            raise NotReflexive("rays come from a reflexive polytope")
        origin = (0,) * P.dim
        rays = [p for p in P.lattice_points() if p != origin]
        return cls(rays)

    # -- degrees -------------------------------------------------------------

    def degree(self, exponents):
        """DegreeClass of the monomial with the given exponent vector."""
        if len(exponents) != self.q:
            raise ShapeError(
                f"exponent vector length {len(exponents)} != {self.q} rays")
        c = smith.mat_vec(self._u, list(exponents))
        torsion = tuple(c[i] % m for i, m in enumerate(self._divisors) if m > 1)
        free = tuple(c[self.n:])
        return DegreeClass(torsion, self.torsion, free)

    def ray_degree(self, i):
        e = [0] * self.q
        e[i] = 1
        return self.degree(e)

    @property
    def anticanonical(self):
        return self.degree([1] * self.q)

    def zero_class(self):
        return self.degree([0] * self.q)

    def particular_exponents(self, target):
        """Some integer vector (not necessarily >= 0) with the given degree."""
        if not isinstance(target, DegreeClass):
            raise NoSuchDegree("target must be a DegreeClass")
        if target.mods != self.torsion or len(target.free) != self.rank:
            raise NoSuchDegree("degree class has the wrong shape for this grading")
        c = [0] * self.q
        ti = 0
        for i, m in enumerate(self._divisors):
            if m > 1:
                c[i] = target.torsion[ti] % m
                ti += 1
        for j, x in enumerate(target.free):
            c[self.n + j] = x
        a = smith.mat_vec(self._uinv, c)
        return a

    def monomials_of_degree(self, target):
        """All nonnegative exponent vectors of the given degree, sorted.

        ``target`` may be a DegreeClass or an explicit (integer) exponent
        vector serving as a particular solution.
        """
        if isinstance(target, DegreeClass):
            a0 = self.particular_exponents(target)
        else:
            a0 = list(target)
            if len(a0) != self.q:
                raise NoSuchDegree("exponent vector length mismatch")
        # a >= 0 with deg a = deg a0  <=>  a = a0 + <rays, x> over lattice x
        c_max = max(max(a0), 0)
        box = self._dual_box_radius() * c_max
        out = []
        for x in _lattice_box(self.n, box):
            exps = [a0[i] + dot(self.rays[i], x) for i in range(self.q)]
            if all(e >= 0 for e in exps):
                out.append(tuple(exps))
        out.sort()
        return out

    def _dual_box_radius(self):
        # the solution polyhedron for a monomial scan lies in c_max * Q with
        # Q = {x : <v_i, x> >= -1}; Q's box radius is at most max |facet normal|
        if self._dual_radius is None:
            hull = LatticePolytope(self.rays)
            if not hull.has_interior_origin():
                raise ShapeError("rays do not positively span the lattice")
            self._dual_radius = max(
                abs(x) for a, _ in hull.facets() for x in a)
        return self._dual_radius

    def __repr__(self):
        return f"CoxGrading(q={self.q}, n={self.n}, torsion={self.torsion})"


def _lattice_box(n, r):
    if n == 0:
        yield ()
        return
    for x in range(-r, r + 1):
        for rest in _lattice_box(n - 1, r):
            yield (x,) + rest


def cox_grading(P):
    return CoxGrading.from_polytope(P)


# -- graded polynomials -------------------------------------------------------------


class GradedPolynomial:
    """Sparse polynomial in the Cox coordinates, homogeneous by construction.

    Terms map exponent tuples to RationalFunction coefficients in the pencil
    parameter; zero coefficients are dropped.  The declared class-group
    degree is checked for every stored term.
    """

    __slots__ = ("grading", "degree", "terms")

    def __init__(self, grading, degree, terms, check=True):
        self.grading = grading
        self.degree = degree
        clean = {}
        for exps, coeff in terms.items():
            coeff = coeff if isinstance(coeff, RationalFunction) \
                else RationalFunction.from_fraction(coeff)
            if coeff.is_zero():
                continue
            exps = tuple(int(e) for e in exps)
            if check:
                if any(e < 0 for e in exps):
                    raise ShapeError(f"negative exponent in {exps}")
                if grading.degree(exps) != degree:
                    raise ShapeError(
                        f"term {exps} does not have the declared degree")
            clean[exps] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, grading, degree):
        return cls(grading, degree, {})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __add__(self, other):
        if self.grading is not other.grading or self.degree != other.degree:
            raise ShapeError("cannot add polynomials of different degrees")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e, RationalFunction.zero()) + c
            if acc.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = acc
        return GradedPolynomial(self.grading, self.degree, terms, check=False)

    def __neg__(self):
        return self.scale(RationalFunction.from_fraction(-1))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if not isinstance(coeff, RationalFunction):
            coeff = RationalFunction.from_fraction(coeff)
        if coeff.is_zero():
            return GradedPolynomial.zero(self.grading, self.degree)
        return GradedPolynomial(
            self.grading, self.degree,
            {e: c * coeff for e, c in self.terms.items()}, check=False)

    def __mul__(self, other):
        if not isinstance(other, GradedPolynomial):
            return self.scale(other)
        if self.grading is not other.grading:
            raise ShapeError("polynomials over different gradings")
        deg = self.degree + other.degree
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(e, RationalFunction.zero()) + c1 * c2
                if acc.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = acc
        return GradedPolynomial(self.grading, deg, terms, check=False)

    def partial(self, i):
        """Partial derivative in the i-th Cox coordinate."""
        deg = self.degree - self.grading.ray_degree(i)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            new = list(e)
            new[i] -= 1
            terms[tuple(new)] = c * e[i]
        return GradedPolynomial(self.grading, deg, terms, check=False)

    def permute_variables(self, perm):
        """Apply z_i -> z_{perm[i]} to every term (exponents move with it)."""
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(e)
            for i, v in enumerate(e):
                new[perm[i]] = v
            terms[tuple(new)] = c
        return GradedPolynomial(self.grading, self.degree, terms, check=False)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), RationalFunction.zero())

    def to_list(self):
        return [{"exponents": list(e), "coeff": str(c)}
                for e, c in sorted(self.terms.items())]

    def __repr__(self):
        return f"GradedPolynomial({len(self.terms)} terms over q={self.grading.q})"


# -- ray permutations -------------------------------------------------------------


def ray_permutation(grading, h):
    """The index permutation induced on the rays by a lattice map h.

    perm[i] = j means h sends ray i to ray j.  Raises NotARaySymmetry when
    some image is not a ray.
    """
    index = {r: i for i, r in enumerate(grading.rays)}
    perm = []
    for r in grading.rays:
        img = h(r)
        if img not in index:
            raise NotARaySymmetry(f"{h!r} maps ray {r} off the ray set")
        perm.append(index[img])
    if len(set(perm)) != len(perm):
        raise NotARaySymmetry("ray images collide")
    return tuple(perm)


@dataclass
class InvarianceReport:
    invariant: bool
    determinants: list

    @property
    def symplectic(self):
        """True when f is fixed and every symmetry preserves orientation."""
        return self.invariant and all(d == 1 for d in self.determinants)


def check_invariance(f, group):
    """Whether every group element fixes f term-by-term, plus determinants."""
    dets = []
    ok = True
    for h in group:
        perm = ray_permutation(f.grading, h)
        if f.permute_variables(perm) != f:
            ok = False
        dets.append(h.det())
    return InvarianceReport(ok, dets)


# -- the symmetric pencil -------------------------------------------------------------


class FamilySpec:
    """A one-parameter anticanonical pencil fixed by a polytope symmetry group.

    The coefficient convention: every nonzero dual lattice point carries
    coefficient 1 (they form a single group orbit) and the product of all
    coordinates carries the parameter t.
    """

    def __init__(self, polytope, group=None):
        if not polytope.is_reflexive():
            raise NotReflexive("the pencil needs a reflexive polytope")
        self.polytope = polytope
        if group is None:
            group = polytope.automorphism_group(orientation_preserving=True)
        self.group = group
        self.dual = polytope.polar_dual()
        origin = (0,) * polytope.dim
        dual_pts = [p for p in self.dual.lattice_points() if p != origin]
        if not dual_pts:
            raise Degenerate("dual polytope has no nonzero lattice points")
        dual_action = [h.dual_action() for h in group]
        self.dual_orbits = orbits(dual_action, dual_pts)
        if len(self.dual_orbits) != 1:
            raise NotInvariant(
                f"{len(self.dual_orbits)} orbits of nonzero dual points; "
                "the pencil convention needs exactly one")
        self._grading = None
        self._family = None

    @property
    def grading(self):
        if self._grading is None:
            self._grading = CoxGrading.from_polytope(self.polytope)
        return self._grading

    def family_polynomial(self):
        if self._family is None:
            self._family = build_family(self)
        return self._family

    def ray_permutations(self):
        g = self.grading
        return [ray_permutation(g, h) for h in self.group]

    def to_dict(self):
        return {
            "polytope": self.polytope.to_dict(),
            "group": "auto-orientation-preserving",
            "parameter": "t-on-product-term",
        }

    @classmethod
    def from_dict(cls, d):
        if d.get("group", "auto-orientation-preserving") != \
                "auto-orientation-preserving":
            raise ShapeError("unsupported group specification")
        if d.get("parameter", "t-on-product-term") != "t-on-product-term":
            raise ShapeError("unsupported parameter convention")
        return cls(LatticePolytope.from_dict(d["polytope"]))

    def __repr__(self):
        return (f"FamilySpec(q={self.grading.q}, "
                f"|G|={len(self.group)})")


def build_family(spec):
    """The pencil polynomial: orbit monomials plus t times the product term.

    Every nonzero lattice point x of the dual contributes the monomial with
    exponents <v_i, x> + 1; the product of all coordinates (the x = 0
    monomial) carries the coefficient t.
    """
    g = spec.grading
    origin = (0,) * spec.polytope.dim
    terms = {}
    for x in spec.dual.lattice_points():
        exps = tuple(dot(v, x) + 1 for v in g.rays)
        if x == origin:
            terms[exps] = RationalFunction.variable()
        else:
            terms[exps] = RationalFunction.one()
    beta = g.anticanonical
    f = GradedPolynomial(g, beta, terms)
    report = check_invariance(f, spec.group)
    if not report.invariant:
        raise NotInvariant("pencil polynomial is not fixed by the group")
    return f


# -- rank bound -------------------------------------------------------------


S4_INVARIANT_LATTICE_RANK = 17  # rank of the symplectic S4 coinvariant lattice


def rank_bound(polytope, group):
    """Lower bound for the Picard rank of a general pencil member.

    Needs the orientation-preserving symmetries to have order 24 and the
    dual polytope to have no edge-interior lattice points; adds one to the
    group-coinvariant rank for every orbit of nonzero, non-facet-interior
    lattice points.
    """
    if polytope.dim != 3:
        raise HypothesisViolated("rank bound applies to 3d polytopes only")
    if len(group) != 24:
        raise HypothesisViolated(
            f"group order {len(group)} != 24")
    if any(h.det() != 1 for h in group):
        raise HypothesisViolated("group contains orientation-reversing maps")
    dual = polytope.polar_dual()
    if dual.edge_interior_points():
        raise HypothesisViolated(
            "dual polytope has lattice points interior to edges")
    origin = (0,) * polytope.dim
    pts = [p for p in polytope.lattice_points() if p != origin]
    facet_interior = set(polytope.facet_interior_points())
    counted = [p for p in pts if p not in facet_interior]
    if not counted:
        raise HypothesisViolated("no countable ray orbits")
    part = orbits(group, pts)
    n_counted = 0
    for orbit in part.orbits:
        inside = [p in facet_interior for p in orbit]
        if any(inside) and not all(inside):
            raise HypothesisViolated(
                "an orbit mixes facet-interior and non-interior points")
        if not any(inside):
            n_counted += 1
    return S4_INVARIANT_LATTICE_RANK + n_counted
