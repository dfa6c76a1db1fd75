from fractions import Fraction as F
from itertools import product
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from divstab.errors import Unbounded, ZeroVolume
from divstab.polytope import (
    HalfSpace,
    Polytope,
    affine_image,
    barycenter,
    halfspace_slice,
    moment,
    vertex_enumerate,
)


def shoelace(pts):
    # exact area and centroid of a convex polygon
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    pts = sorted(pts, key=lambda p: math.atan2(float(p[1] - cy), float(p[0] - cx)))
    a = mx = my = F(0)
    for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]):
        c = x0 * y1 - x1 * y0
        a += c
        mx += (x0 + x1) * c
        my += (y0 + y1) * c
    return a / 2, (mx / (3 * a), my / (3 * a))


def test_unit_square():
    P = Polytope.box([0, 0], [1, 1])
    assert P.vertices == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert P.volume == 1
    assert barycenter(P) == (F(1, 2), F(1, 2))


def test_bl1_p2_polytope():
    P = Polytope([HalfSpace(v, -1) for v in [(1, 0), (0, 1), (-1, -1), (1, 1)]])
    assert P.vertices == [(-1, 0), (-1, 2), (0, -1), (2, -1)]
    assert P.volume == 4
    assert barycenter(P) == (F(1, 12), F(1, 12))


def test_standard_simplex_3d():
    P = Polytope.from_inequalities([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (-1, -1, -1, -1)])
    assert P.volume == F(1, 6)
    assert barycenter(P) == (F(1, 4),) * 3
    assert len(P.triangulation) == 1


def test_four_cube_volume_and_moment():
    P = Polytope.box([0] * 4, [2, 1, 1, 3])
    assert P.volume == 6
    assert moment(P, [1, 0, 0, 0]) == 6
    assert barycenter(P) == (1, F(1, 2), F(1, 2), F(3, 2))


def test_unbounded_raises():
    with pytest.raises(Unbounded):
        vertex_enumerate([HalfSpace((1, 0), 0), HalfSpace((0, 1), 0)], 2)
    with pytest.raises(Unbounded):
        # a strip: lineality along the second axis
        Polytope.from_inequalities([(1, 0, 0), (-1, 0, -1)])


def test_empty_and_degenerate():
    P = Polytope.from_inequalities([(1, 0, 1), (-1, 0, 0), (0, 1, 0), (0, -1, -1)])
    assert P.is_empty and P.is_degenerate
    assert P.volume == 0
    Q = Polytope.from_inequalities([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, -1)])
    assert not Q.is_empty and Q.is_degenerate
    with pytest.raises(ZeroVolume):
        barycenter(Q)


def test_duplicate_halfspaces_are_harmless():
    hs = [HalfSpace(v, -1) for v in [(1, 0), (0, 1), (-1, -1)]]
    assert Polytope(hs + hs).volume == Polytope(hs).volume == F(9, 2)


def test_halfspace_complement_partitions():
    P = Polytope.box([0, 0, 0], [2, 2, 2])
    h = HalfSpace((1, 2, -1), 1)
    a, b = halfspace_slice(P, h), halfspace_slice(P, h.complement())
    assert a.volume + b.volume == P.volume
    assert tuple(x + y for x, y in zip(a.moment_vector, b.moment_vector)) == P.moment_vector


def test_affine_image_scales_volume():
    P = Polytope.box([0, 0], [1, 2])
    T = [[2, 1], [0, 3]]
    Q = affine_image(P, T, [5, -1])
    assert Q.volume == 6 * P.volume
    b = barycenter(P)
    assert barycenter(Q) == (2 * b[0] + b[1] + 5, 3 * b[1] - 1)


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), rationals), min_size=1, max_size=4))
def test_polygon_against_shoelace(cuts):
    hs = [HalfSpace(a[:2], a[2]) for a in cuts if a[:2] != (0, 0)]
    P = Polytope([HalfSpace((1, 0), -2), HalfSpace((-1, 0), -2), HalfSpace((0, 1), -2), HalfSpace((0, -1), -2)] + hs)
    if P.is_degenerate:
        assert P.volume == 0
        return
    area, cen = shoelace(list(P.vertices))
    assert P.volume == area
    assert barycenter(P) == cen


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2), rationals), min_size=1, max_size=3))
def test_3d_volume_against_convex_hull(cuts):
    hs = [HalfSpace(a[:3], a[3]) for a in cuts if a[:3] != (0, 0, 0)]
    P = Polytope(list(Polytope.box([-1, -1, -1], [2, 1, 1]).halfspaces) + hs)
    if P.is_degenerate:
        return
    hull = ConvexHull(np.array(P.vertices, dtype=float))
    assert math.isclose(float(P.volume), hull.volume, rel_tol=1e-9)


def test_triangulation_covers_volume():
    # the simplices of the pulling triangulation have disjoint interiors:
    # check by summing and comparing with a lattice-box oracle
    P = Polytope.from_inequalities([(1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1), (-1, -1, -1, -1), (1, 1, 1, -1)])
    assert sum(P.simplex_volume(s) for s in P.triangulation) == P.volume
    hull = ConvexHull(np.array(P.vertices, dtype=float))
    assert math.isclose(float(P.volume), hull.volume, rel_tol=1e-12)


def test_slicing_additivity_grid():
    P = Polytope.from_inequalities([(1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1), (-1, -1, -1, -1)])
    for normal, c in product([(1, 0, 0), (1, 1, 0), (2, -1, 1)], [F(-1, 2), 0, F(1, 3)]):
        h = HalfSpace(normal, c)
        a, b = halfspace_slice(P, h), halfspace_slice(P, h.complement())
        assert a.volume + b.volume == P.volume
