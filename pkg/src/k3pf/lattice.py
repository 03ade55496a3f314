"""Lattice polytopes: polar duality, point enumeration, symmetries, slices.

Points are plain int tuples.  Everything is exact; convex hulls are computed
by brute-force supporting-hyperplane enumeration, which is fast and fully
deterministic for the polytope sizes that show up here (a few dozen points).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import gcd

from .errors import NotInterior, NotInvariant, NotReflexive, ShapeError
from . import smith


LatticeVector = tuple


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vgcd(a):
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def is_primitive(a):
    return vgcd(a) == 1


def _minor_normal(diffs, n):
    """Integer normal of the hyperplane spanned by n-1 difference vectors."""
    normal = []
    idx = list(range(n))
    for i in range(n):
        cols = idx[:i] + idx[i + 1:]
        sub = [[d[c] for c in cols] for d in diffs]
        normal.append((-1) ** i * smith.det(sub))
    return tuple(normal)


class LatticeAutomorphism:
    """An element of GL(n, Z) preserving a polytope's vertex set."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)

    @classmethod
    def identity(cls, n):
        return cls(smith.identity(n))

    @property
    def n(self):
        return len(self.matrix)

    def __call__(self, v):
        return tuple(dot(row, v) for row in self.matrix)

    def __mul__(self, other):
        """Composition: (self * other)(v) = self(other(v))."""
        return LatticeAutomorphism(
            smith.mat_mul([list(r) for r in self.matrix],
                          [list(r) for r in other.matrix]))

    def det(self):
        return smith.det([list(r) for r in self.matrix])

    def inverse(self):
        return LatticeAutomorphism(
            smith.invert_unimodular([list(r) for r in self.matrix]))

    def dual_action(self):
        """Action induced on the dual lattice: inverse transpose."""
        return LatticeAutomorphism(smith.transpose(
            smith.invert_unimodular([list(r) for r in self.matrix])))

    def __eq__(self, other):
        if not isinstance(other, LatticeAutomorphism):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LatticeAutomorphism({list(map(list, self.matrix))})"


class LatticePolytope:
    """Convex hull of a finite set of lattice points.

    The stored vertex list is irredundant and lexicographically sorted, so
    two polytopes are equal iff their vertex tuples are equal.
    """

    __slots__ = ("dim", "vertices", "_facets", "_points")

    def __init__(self, points, dim=None):
        points = [tuple(int(x) for x in p) for p in points]
        if not points:
            raise ShapeError("empty point list")
        n = len(points[0])
        if any(len(p) != n for p in points):
            raise ShapeError("points of mixed dimension")
        if dim is not None and dim != n:
            raise ShapeError(f"declared dim {dim} but points live in Z^{n}")
        self.dim = n
        points = sorted(set(points))
        facets = _facets_of(points, n)
        self._facets = facets
        self.vertices = tuple(p for p in points if _is_vertex(p, facets, n))
        self._points = None

    # -- structure ----------------------------------------------------------

    def facets(self):
        """List of (outer_normal, offset): <a, x> <= c on the polytope.

        Normals are primitive integer vectors; offsets are integers for
        lattice polytopes (the hull of lattice points).
        """
        return list(self._facets)

    def is_full_dimensional(self):
        if not self._facets:
            return False
        return smith.int_rank([list(a) for a, _ in self._facets]) == self.dim

    def contains(self, p):
        return all(dot(a, p) <= c for a, c in self._facets)

    def interior_contains(self, p):
        return all(dot(a, p) < c for a, c in self._facets)

    def bounding_box(self):
        los = [min(v[i] for v in self.vertices) for i in range(self.dim)]
        his = [max(v[i] for v in self.vertices) for i in range(self.dim)]
        return los, his

    def lattice_points(self):
        """All lattice points in the polytope, lexicographically sorted."""
        if self._points is None:
            los, his = self.bounding_box()
            pts = []
            for p in _box_points(los, his):
                if self.contains(p):
                    pts.append(p)
            self._points = tuple(pts)
        return list(self._points)

    def interior_lattice_points(self):
        return [p for p in self.lattice_points() if self.interior_contains(p)]

    def boundary_lattice_points(self):
        return [p for p in self.lattice_points()
                if not self.interior_contains(p)]

    def edges(self):
        """Pairs of vertices spanning 1-faces."""
        out = []
        for v, w in combinations(self.vertices, 2):
            active = [a for a, c in self._facets
                      if dot(a, v) == c and dot(a, w) == c]
            if active and smith.int_rank([list(a) for a in active]) == self.dim - 1:
                out.append((v, w))
        return out

    def edge_interior_points(self):
        """Lattice points strictly inside edges."""
        pts = []
        for v, w in self.edges():
            d = vsub(w, v)
            g = vgcd(d)
            step = tuple(x // g for x in d)
            for k in range(1, g):
                pts.append(vadd(v, tuple(k * s for s in step)))
        return pts

    def facet_interior_points(self):
        """Lattice points in the relative interior of some facet."""
        out = []
        for p in self.boundary_lattice_points():
            active = [a for a, c in self._facets if dot(a, p) == c]
            if len(active) == 1:
                out.append(p)
        return out

    # -- polarity ----------------------------------------------------------------

    def has_interior_origin(self):
        origin = (0,) * self.dim
        return self.is_full_dimensional() and self.interior_contains(origin)

    def polar_dual(self):
        """The polytope {w : <v, w> >= -1 for all v here}.

        Requires the origin strictly inside; raises NotReflexive when the
        dual is not a lattice polytope.
        """
        if not self.has_interior_origin():
            raise NotInterior("origin is not interior to the polytope")
        verts = []
        for a, c in self._facets:
            # facet <a, x> <= c with c > 0; dual vertex is -a/c
            if c <= 0:
                raise NotInterior("origin is not interior to the polytope")
            if any(x % c for x in a):
                raise NotReflexive(
                    f"dual vertex -{a}/{c} is not a lattice point")
            verts.append(tuple(-x // c for x in a))
        return LatticePolytope(verts)

    def is_reflexive(self):
        """True iff the polar dual is again a lattice polytope."""
        if not self.has_interior_origin():
            return False
        ok = all(c == 1 for _, c in self._facets)
        if ok:
            inner = self.interior_lattice_points()
            if inner != [(0,) * self.dim]:
                raise AssertionError(
                    "reflexive polytope with unexpected interior points")
        return ok

    # -- symmetries ----------------------------------------------------------------

    def automorphism_group(self, orientation_preserving=False):
        return automorphism_group(self, orientation_preserving)

    # -- serialization ----------------------------------------------------------------

    def to_dict(self):
        return {"dim": self.dim, "vertices": [list(v) for v in self.vertices]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["vertices"], dim=d.get("dim"))

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({len(self.vertices)} vertices in Z^{self.dim})"


def _box_points(los, his):
    if not los:
        yield ()
        return
    for x in range(los[0], his[0] + 1):
        for rest in _box_points(los[1:], his[1:]):
            yield (x,) + rest


def _facets_of(points, n):
    """All supporting hyperplanes spanned by point subsets (the facets)."""
    found = {}
    for comb in combinations(points, n):
        diffs = [vsub(p, comb[0]) for p in comb[1:]]
        a = _minor_normal(diffs, n) if n > 1 else (1,)
        if all(x == 0 for x in a):
            continue
        c = dot(a, comb[0])
        side_hi = all(dot(a, p) <= c for p in points)
        side_lo = all(dot(a, p) >= c for p in points)
        if side_hi and side_lo:
            continue  # points are degenerate along this hyperplane
        if side_lo:
            a, c = vneg(a), -c
        elif not side_hi:
            continue
        g = vgcd(a)
        # c is a pairing of a with a lattice point, so g divides it
        a = tuple(x // g for x in a)
        c //= g
        found[(a, c)] = True
    return sorted(found)


def _is_vertex(p, facets, n):
    active = [a for a, c in facets if dot(a, p) == c]
    if len(active) < n:
        return False
    return smith.int_rank([list(a) for a in active]) == n


# -- automorphisms ------------------------------------------------------------------


def automorphism_group(P, orientation_preserving=False):
    """All g in GL(n, Z) with g(vertices) = vertices, as a verified group.

    Candidates are enumerated by assigning a spanning set of vertices to
    ordered tuples of vertices and solving for the matrix.
    """
    verts = list(P.vertices)
    n = P.dim
    basis = _spanning_vertices(verts, n)
    if basis is None:
        raise ShapeError("polytope is not full-dimensional")
    basis_cols = smith.transpose([list(v) for v in basis])
    binv = _fraction_inverse(basis_cols)
    vert_set = set(verts)
    group = []
    for images in permutations(verts, n):
        img_cols = smith.transpose([list(v) for v in images])
        m = _int_product(img_cols, binv)
        if m is None:
            continue
        g = LatticeAutomorphism(m)
        if {g(v) for v in verts} != vert_set:
            continue
        d = g.det()
        if d not in (1, -1):
            continue
        if orientation_preserving and d != 1:
            continue
        group.append(g)
    group.sort(key=lambda g: g.matrix)
    _verify_group(group)
    return group


def _spanning_vertices(verts, n):
    chosen = []
    for v in verts:
        if smith.int_rank([list(u) for u in chosen + [v]]) > len(chosen):
            chosen.append(v)
            if len(chosen) == n:
                return chosen
    return None


def _fraction_inverse(m):
    n = len(m)
    aug = [[Fraction(x) for x in row] +
           [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def _int_product(int_mat, frac_mat):
    """int_mat @ frac_mat if the product is integral, else None."""
    n = len(int_mat)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Fraction(0)
            for k in range(n):
                acc += int_mat[i][k] * frac_mat[k][j]
            if acc.denominator != 1:
                return None
            row.append(int(acc))
        out.append(row)
    return out


def _verify_group(group):
    elems = set(g.matrix for g in group)
    if not elems:
        raise AssertionError("automorphism search returned no identity")
    for g in group:
        for h in group:
            if (g * h).matrix not in elems:
                raise AssertionError("automorphism set is not closed")
        if g.inverse().matrix not in elems:
            raise AssertionError("automorphism set lacks an inverse")


# -- orbits ------------------------------------------------------------------


class OrbitPartition:
    """G-orbits of a finite point set, numbered by smallest lex point."""

    __slots__ = ("points", "orbits", "orbit_index")

    def __init__(self, points, orbits):
        self.points = list(points)
        self.orbits = [sorted(o) for o in orbits]
        self.orbits.sort(key=lambda o: o[0])
        self.orbit_index = {}
        for idx, orbit in enumerate(self.orbits):
            for p in orbit:
                self.orbit_index[p] = idx

    @property
    def sizes(self):
        return [len(o) for o in self.orbits]

    def size_multiset(self):
        return sorted(self.sizes)

    def __len__(self):
        return len(self.orbits)

    def __repr__(self):
        return f"OrbitPartition(sizes={self.sizes})"


def orbits(group, points):
    """Partition ``points`` into orbits of the given automorphism list."""
    pts = [tuple(p) for p in points]
    pt_set = set(pts)
    seen = set()
    out = []
    for p in pts:
        if p in seen:
            continue
        orbit = {p}
        frontier = [p]
        while frontier:
            q = frontier.pop()
            for g in group:
                img = g(q)
                if img not in pt_set:
                    raise NotInvariant(
                        f"point set is not closed under the group: {q} -> {img}")
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        seen |= orbit
        out.append(sorted(orbit))
    return OrbitPartition(pts, out)


# -- reflexive slices ------------------------------------------------------------------


def reflexive_slices(P, bound):
    """Hyperplane slices through the origin that are reflexive polygons.

    Scans primitive normals m with coordinates in [-bound, bound], keeping
    the lexicographically positive representative of {m, -m}.  A normal
    qualifies when P intersected with m-perp is a lattice polygon that is
    reflexive in the induced rank-2 sublattice; the polygon is returned in
    coordinates for a deterministic basis of that sublattice.
    """
    if bound < 1:
        raise ShapeError("bound must be >= 1")
    if not P.is_reflexive():
        raise NotReflexive("slices are scanned only on reflexive polytopes")
    results = []
    n = P.dim
    for m in _box_points([-bound] * n, [bound] * n):
        if all(x == 0 for x in m) or not is_primitive(m):
            continue
        nz = next(x for x in m if x)
        if nz < 0:
            continue  # keep only the lex-positive representative
        polygon = _slice_polygon(P, m)
        if polygon is not None and polygon.is_reflexive():
            results.append((m, polygon))
    results.sort(key=lambda pair: pair[0])
    return results


def _slice_polygon(P, m):
    """P cut by m-perp in slice coordinates, or None if not a lattice polygon."""
    on_plane = [v for v in P.vertices if dot(v, m) == 0]
    crossings = []
    for v, w in P.edges():
        hv, hw = dot(v, m), dot(w, m)
        if hv * hw < 0:
            # v + s (w - v) with s = hv / (hv - hw)
            num, den = hv, hv - hw
            pt = []
            for a, b in zip(v, w):
                val = Fraction(a) + Fraction(num, den) * (b - a)
                if val.denominator != 1:
                    return None
                pt.append(int(val))
            crossings.append(tuple(pt))
    pts = sorted(set(on_plane + crossings))
    if len(pts) < 3:
        return None
    basis = _perp_basis(m)
    coords = [_in_basis(p, m, basis) for p in pts]
    poly = LatticePolytope(coords)
    if not poly.is_full_dimensional():
        return None
    return poly


def _perp_basis(m):
    """Deterministic lattice basis of m-perp via the Smith form of [m]."""
    _, d, v = smith.smith_normal_form([list(m)])
    # m V = [d1, 0, ..., 0]; the trailing columns of V span m-perp
    cols = smith.transpose(v)
    return [tuple(c) for c in cols[1:]]


def _in_basis(p, m, basis):
    """Coordinates of p (with <p, m> = 0) in the given basis of m-perp."""
    n = len(p)
    mat = [[basis[j][i] for j in range(len(basis))] for i in range(n)]
    aug = [[Fraction(mat[i][j]) for j in range(len(basis))] + [Fraction(p[i])]
           for i in range(n)]
    ncols = len(basis)
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, n) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    coeffs = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        coeffs[col] = aug[i][ncols]
    for i in range(r, n):
        if aug[i][ncols]:
            raise ShapeError("point does not lie in the hyperplane")
    if any(c.denominator != 1 for c in coeffs):
        raise ShapeError("point is not integral in the sublattice basis")
    return tuple(int(c) for c in coeffs)
