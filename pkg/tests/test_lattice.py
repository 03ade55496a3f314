import random

import pytest

from k3pf import shapes
from k3pf.errors import NotInterior, NotInvariant, NotReflexive, ShapeError
from k3pf.lattice import (LatticeAutomorphism, LatticePolytope, orbits,
                          reflexive_slices)


def test_octahedron_dual_is_cube(octahedron, cube):
    assert octahedron.polar_dual() == cube
    assert cube.polar_dual() == octahedron


def test_twisted_octahedron_dual_vertices(twisted_octahedron):
    dual = twisted_octahedron.polar_dual()
    assert set(dual.vertices) == {
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 1, 1), (1, -1, -1),
        (0, 0, -1), (0, -1, 0), (-1, 0, 0)}


def test_duality_involution_on_all_fixtures(
        octahedron, cube, twisted_octahedron, rhombic_dodecahedron, square2d):
    for poly in (octahedron, cube, twisted_octahedron, rhombic_dodecahedron,
                 shapes.cuboctahedron(), square2d, shapes.diamond(),
                 shapes.skew_octahedron()):
        assert poly.polar_dual().polar_dual() == poly


def test_lattice_point_counts(octahedron, cube, twisted_octahedron):
    assert len(octahedron.lattice_points()) == 7
    assert len(cube.lattice_points()) == 27
    pts = twisted_octahedron.lattice_points()
    assert len(pts) == 19
    # origin + 6 vertices + 12 edge midpoints
    assert len(twisted_octahedron.edge_interior_points()) == 12


def test_reflexivity(octahedron, cube, rhombic_dodecahedron):
    assert octahedron.is_reflexive()
    assert cube.is_reflexive()
    assert rhombic_dodecahedron.is_reflexive()
    doubled = LatticePolytope([(2 * x, 2 * y, 2 * z) for x, y, z in cube.vertices])
    assert not doubled.is_reflexive()
    with pytest.raises(NotReflexive):
        doubled.polar_dual()


def test_interior_origin_requirement():
    shifted = LatticePolytope([(1, 0, 0), (2, 0, 0), (1, 1, 0), (1, 0, 1),
                               (2, 1, 1)])
    with pytest.raises(NotInterior):
        shifted.polar_dual()


def test_reflexive_has_unique_interior_point(
        octahedron, cube, twisted_octahedron, rhombic_dodecahedron):
    for poly in (octahedron, cube, twisted_octahedron, rhombic_dodecahedron):
        assert poly.interior_lattice_points() == [(0, 0, 0)]


def test_vertex_irredundancy():
    # midpoints and interior points are not vertices
    p = LatticePolytope([(1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)])
    assert set(p.vertices) == {(1, 0), (0, 1), (-1, 0), (0, -1)}


def test_cube_automorphisms(cube):
    full = cube.automorphism_group()
    rot = cube.automorphism_group(orientation_preserving=True)
    assert len(full) == 48
    assert len(rot) == 24
    assert all(g.det() == 1 for g in rot)
    assert sorted({g.det() for g in full}) == [-1, 1]


def test_twisted_octahedron_automorphisms(twisted_octahedron):
    rot = twisted_octahedron.automorphism_group(orientation_preserving=True)
    assert len(rot) == 24


def test_simplex_automorphisms_contain_coordinate_permutations():
    simplex = LatticePolytope([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
    group = simplex.automorphism_group()
    mats = {g.matrix for g in group}
    assert len(group) >= 6
    perms = [((1, 0, 0), (0, 1, 0), (0, 0, 1)),
             ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
             ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
             ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
             ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
             ((0, 0, 1), (1, 0, 0), (0, 1, 0))]
    for m in perms:
        assert m in mats


def test_group_closure_and_inverses(twisted_octahedron):
    group = twisted_octahedron.automorphism_group(orientation_preserving=True)
    mats = {g.matrix for g in group}
    for g in group:
        assert g.inverse().matrix in mats
        for h in group:
            assert (g * h).matrix in mats
    # orientation-preserving subgroup has index 1 or 2
    full = twisted_octahedron.automorphism_group()
    assert len(full) % len(group) == 0
    assert len(full) // len(group) in (1, 2)


def test_cube_orbit_sizes(cube):
    rot = cube.automorphism_group(orientation_preserving=True)
    part = orbits(rot, cube.lattice_points())
    assert part.size_multiset() == [1, 6, 8, 12]
    assert all(24 % s == 0 for s in part.sizes)


def test_twisted_dual_orbits(twisted_octahedron):
    rot = twisted_octahedron.automorphism_group(orientation_preserving=True)
    dual = twisted_octahedron.polar_dual()
    dual_action = [g.dual_action() for g in rot]
    part = orbits(dual_action, dual.lattice_points())
    assert part.size_multiset() == [1, 8]


def test_rhombic_dodecahedron_fixture(rhombic_dodecahedron):
    rd = rhombic_dodecahedron
    assert len(rd.vertices) == 14
    assert len(rd.facets()) == 12
    assert rd.is_reflexive()
    assert rd.polar_dual() == shapes.cuboctahedron()
    rot = rd.automorphism_group(orientation_preserving=True)
    assert len(rot) == 24
    part = orbits(rot, list(rd.vertices))
    assert part.size_multiset() == [6, 8]
    # its lattice points are only the vertices and the origin
    assert len(rd.lattice_points()) == 15


def test_identity_group_orbits(cube):
    ident = [LatticeAutomorphism.identity(3)]
    pts = cube.lattice_points()
    part = orbits(ident, pts)
    assert part.sizes == [1] * len(pts)


def test_orbits_not_closed_error(cube):
    rot = cube.automorphism_group(orientation_preserving=True)
    with pytest.raises(NotInvariant):
        orbits(rot, [(1, 1, 1), (1, 1, 0)])


def test_dual_action_bijection_and_orbit_counts(
        cube, twisted_octahedron, rhombic_dodecahedron):
    for poly in (cube, twisted_octahedron, rhombic_dodecahedron):
        group = poly.automorphism_group()
        dual = poly.polar_dual()
        dual_pts = set(dual.lattice_points())
        dual_maps = [g.dual_action() for g in group]
        for g in dual_maps:
            assert {g(p) for p in dual_pts} == dual_pts
        via_transpose = orbits(dual_maps, sorted(dual_pts))
        direct = orbits(dual.automorphism_group(), sorted(dual_pts))
        assert via_transpose.size_multiset() == direct.size_multiset()


def test_orbit_sizes_divide_group_order(twisted_octahedron):
    for flag in (False, True):
        group = twisted_octahedron.automorphism_group(flag)
        part = orbits(group, twisted_octahedron.lattice_points())
        assert all(len(group) % s == 0 for s in part.sizes)


def test_slices_twisted_octahedron(twisted_octahedron):
    found = reflexive_slices(twisted_octahedron, 1)
    normals = [m for m, _ in found]
    assert (0, 1, 0) in normals
    for m, polygon in found:
        assert polygon.dim == 2
        assert polygon.is_reflexive()


def test_slices_cube_and_octahedron(cube, octahedron):
    cube_slices = dict(reflexive_slices(cube, 1))
    assert (0, 0, 1) in cube_slices
    sq = cube_slices[(0, 0, 1)]
    assert set(sq.vertices) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    octa_slices = dict(reflexive_slices(octahedron, 1))
    assert (0, 0, 1) in octa_slices
    diamond = octa_slices[(0, 0, 1)]
    assert sorted(diamond.vertices) == sorted(
        [(1, 0), (0, 1), (-1, 0), (0, -1)])


def test_slices_guardrails(cube):
    doubled = LatticePolytope([(2 * x, 2 * y, 2 * z) for x, y, z in cube.vertices])
    with pytest.raises(NotReflexive):
        reflexive_slices(doubled, 1)
    with pytest.raises(ShapeError):
        reflexive_slices(cube, 0)


def test_random_unimodular_images_stay_reflexive(twisted_octahedron):
    rng = random.Random(42)
    from k3pf import smith
    count = 0
    while count < 5:
        m = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        if abs(smith.det(m)) != 1:
            continue
        count += 1
        g = LatticeAutomorphism(m)
        image = LatticePolytope([g(v) for v in twisted_octahedron.vertices])
        assert image.is_reflexive()
        assert len(image.lattice_points()) == 19


def test_json_round_trip(cube):
    d = cube.to_dict()
    assert d["dim"] == 3
    assert LatticePolytope.from_dict(d) == cube
