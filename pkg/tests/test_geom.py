from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from trisect.geom import (
    InvalidPolygon, Location, Point, Polygon, RigidMotion, Segment, apply_motion,
    convex_overlap_area, interiors_disjoint, motion_from_points, orientation,
    point_in_polygon, polygon_area, polygon_contains, pt, segment_length_decimal,
    sqrt_decimal, square,
)
from trisect.scalar import HALF, ONE, SQRT2, SQRT3, Scalar, ZERO
from oracles import classify, star_polygon

UNIT = square(1)
L_SHAPE = Polygon([pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)])


def _frac_area(vs):
    n = len(vs)
    return sum(vs[i][0] * vs[(i + 1) % n][1] - vs[(i + 1) % n][0] * vs[i][1] for i in range(n)) / 2


def test_orientation():
    assert orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1
    assert orientation(pt(0, 0), pt(1, 1), pt(3, 3)) == 0
    # collinear with irrational coordinates: float filter must not decide
    assert orientation(pt(0, 0), pt(1, SQRT3), pt(SQRT2, SQRT2 * SQRT3)) == 0


def test_canonical_form():
    cw = Polygon([pt(0, 1), pt(1, 1), pt(1, 0), pt(0, 0)])
    with_extra = Polygon([pt(0, 0), pt(HALF, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
    assert cw == UNIT == with_extra
    assert len(with_extra) == 4
    assert UNIT.vertices[0] == pt(0, 0)


def test_degenerate_polygon():
    with pytest.raises(InvalidPolygon):
        Polygon([pt(0, 0), pt(1, 1), pt(2, 2)])


def test_simple_and_convex():
    assert UNIT.is_convex() and UNIT.is_simple()
    assert not L_SHAPE.is_convex() and L_SHAPE.is_simple()
    bowtie = Polygon([pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)])
    assert not bowtie.is_simple()


def test_area():
    assert polygon_area(UNIT) == 1
    assert polygon_area(L_SHAPE) == 3
    assert polygon_area(square(SQRT3)) == 3
    tri = Polygon([pt(0, 0), pt(SQRT3, 0), pt(0, 1)])
    assert polygon_area(tri) == SQRT3 / 2


def test_point_in_polygon():
    assert point_in_polygon(pt(HALF, HALF), UNIT) is Location.INSIDE
    assert point_in_polygon(pt(1, HALF), UNIT) is Location.BOUNDARY
    assert point_in_polygon(pt(1, 1), UNIT) is Location.BOUNDARY
    assert point_in_polygon(pt(2, HALF), UNIT) is Location.OUTSIDE
    assert point_in_polygon(pt(Fraction(3, 2), Fraction(3, 2)), L_SHAPE) is Location.OUTSIDE


def test_interiors_disjoint():
    right = square(1, pt(1, 0))
    assert interiors_disjoint(UNIT, right)
    assert not interiors_disjoint(UNIT, square(1, pt(HALF, 0)))
    assert not interiors_disjoint(UNIT, square(ONE / 4, pt(ONE / 4, ONE / 4)))
    # same triangle twice overlaps even though no edges cross
    tri = Polygon([pt(0, 0), pt(1, 0), pt(0, 1)])
    assert not interiors_disjoint(tri, tri)
    # two halves of the square along the diagonal
    other = Polygon([pt(1, 0), pt(1, 1), pt(0, 1)])
    assert interiors_disjoint(tri, other)


def test_contains():
    assert polygon_contains(L_SHAPE, UNIT)
    assert not polygon_contains(UNIT, L_SHAPE)
    assert not polygon_contains(L_SHAPE, square(1, pt(1, 1)))


def test_convex_overlap():
    assert convex_overlap_area(UNIT, square(1, pt(HALF, HALF))) == ONE / 4
    assert convex_overlap_area(UNIT, square(1, pt(2, 0))) == 0
    with pytest.raises(ValueError):
        convex_overlap_area(UNIT, L_SHAPE)


def test_motion_composition_order():
    rot = RigidMotion.rotation(0, 1)
    shift = RigidMotion.translation(1, 0)
    p = pt(1, 0)
    assert (rot @ shift).apply(p) == rot.apply(shift.apply(p)) == pt(0, 2)
    assert (shift @ rot).apply(p) == pt(1, 1)


def test_motion_inverse():
    m = RigidMotion(SQRT3 / 2, HALF, True, SQRT2, -1)
    p = pt(Fraction(2, 7), SQRT3)
    assert m.inverse().apply(m.apply(p)) == p
    assert (m @ m.inverse()).apply(p) == p


def test_rotation_about_centre():
    half_turn = RigidMotion.rotation(-1, 0, pt(HALF, HALF))
    assert half_turn.apply(pt(0, 0)) == pt(1, 1)


def test_bad_rotation():
    with pytest.raises(ValueError):
        RigidMotion(1, 1)


def test_motion_from_points():
    m = motion_from_points(pt(0, 0), pt(SQRT3 / 2, HALF), pt(1, 1), pt(2, 1))
    assert m.apply(pt(0, 0)) == pt(1, 1)
    assert m.apply(pt(SQRT3 / 2, HALF)) == pt(2, 1)
    with pytest.raises(ValueError):
        motion_from_points(pt(0, 0), pt(1, 0), pt(0, 0), pt(2, 0))


def test_lengths():
    assert segment_length_decimal(Segment(pt(0, 0), pt(1, 1))) == "1.414214"
    assert sqrt_decimal(Scalar(4), 3) == "2.000"
    assert sqrt_decimal(4 - 2 * SQRT3, 6) == "0.732051"
    with pytest.raises(ValueError):
        sqrt_decimal(Scalar(-1), 2)


def test_degenerate_segment():
    with pytest.raises(ValueError):
        Segment(pt(1, 1), pt(1, 1))


# -- properties ----------------------------------------------------------

slopes = st.fractions(min_value=-20, max_value=20, max_denominator=30)
shifts = st.builds(lambda a, b: Scalar(a, b), st.fractions(-5, 5, max_denominator=9),
                   st.fractions(-5, 5, max_denominator=9))


@st.composite
def motions(draw):
    m = draw(slopes)
    c = (1 - m * m) / (1 + m * m)
    s = 2 * m / (1 + m * m)
    return RigidMotion(c, s, draw(st.booleans()), draw(shifts), draw(shifts))


@st.composite
def star_polygons(draw):
    seed = draw(st.integers(0, 2 ** 32))
    return star_polygon(random.Random(seed), draw(st.integers(3, 9)))


@settings(max_examples=150, deadline=None)
@given(star_polygons(), motions())
def test_area_invariant_under_motion(vs, m):
    P = Polygon(vs)
    assert polygon_area(P) == _frac_area(vs) or polygon_area(P) == -_frac_area(vs)
    assert polygon_area(apply_motion(m, P)) == polygon_area(P)


@settings(max_examples=150, deadline=None)
@given(motions(), motions())
def test_composition_is_application(a, b):
    p = pt(Fraction(3, 7), SQRT2)
    assert (a @ b).apply(p) == a.apply(b.apply(p))


@settings(max_examples=150, deadline=None)
@given(star_polygons(), st.fractions(-22, 22, max_denominator=8), st.fractions(-22, 22, max_denominator=8))
def test_point_in_polygon_matches_ray_casting(vs, x, y):
    P = Polygon(vs)
    assert point_in_polygon(pt(x, y), P).value == classify((x, y), vs)


@settings(max_examples=100, deadline=None)
@given(star_polygons())
def test_vertices_are_boundary(vs):
    P = Polygon(vs)
    for v in P.vertices:
        assert point_in_polygon(v, P) is Location.BOUNDARY
    assert point_in_polygon(P.interior_point(), P) is Location.INSIDE
