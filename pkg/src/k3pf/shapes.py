"""Reference polytopes used across the test suite, docs and CLI examples.

The three 3d polytopes below are, up to lattice isomorphism, the ones whose
orientation-preserving symmetry group is the full permutation group of order
24; each comes paired with its polar dual.
"""

from .lattice import LatticePolytope


def octahedron():
    """The standard reflexive octahedron; its dual is the cube."""
    return LatticePolytope(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)])


def cube():
    return LatticePolytope(
        [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])


def twisted_octahedron():
    """Octahedron on six corners of the cube (one antipodal pair removed).

    Its 18 nonzero lattice points are the six vertices and the twelve edge
    midpoints; the polar dual has eight vertices.
    """
    return LatticePolytope(
        [(1, 1, 1), (-1, -1, 1), (-1, 1, -1), (1, -1, 1), (1, 1, -1),
         (-1, -1, -1)])


def skew_octahedron():
    """A reflexive octahedron whose class group has 2-torsion."""
    return LatticePolytope(
        [(1, 0, 0), (1, 2, 0), (1, 0, 2), (-1, 0, 0), (-1, -2, 0),
         (-1, 0, -2)])


def cuboctahedron():
    """Convex hull of the twelve shortest vectors of the face-centered
    pattern; dual of the fourteen-vertex polytope below."""
    return LatticePolytope(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1),
         (-1, 0, 0), (0, -1, 0), (0, 0, -1), (-1, 1, 0), (-1, 0, 1),
         (0, -1, 1)])


def rhombic_dodecahedron():
    """The unique reflexive 3d polytope with fourteen vertices (twelve
    facets); it has the most vertices of any reflexive 3d polytope."""
    return LatticePolytope(
        [(-1, -1, -1), (-1, -1, 0), (-1, 0, -1), (-1, 0, 0), (0, -1, -1),
         (0, -1, 0), (0, 0, -1), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0),
         (1, 0, 1), (1, 1, 0), (1, 1, 1)])


def square():
    """2d reflexive square; its pencil is an elliptic-curve family."""
    return LatticePolytope([(1, 1), (1, -1), (-1, 1), (-1, -1)])


def diamond():
    """2d cross-polytope, the dual of the square."""
    return LatticePolytope([(1, 0), (0, 1), (-1, 0), (0, -1)])
