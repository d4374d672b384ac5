from fractions import Fraction
import math

import mpmath
import pytest

from trisect import catalog
from trisect.catalog import (
    NAMES, ConstructionError, ParameterOutOfRange, SelectorAmbiguity, blanvillain_equal_area,
    blanvillain_range, build, build_blanvillain, compass_trace, diagonal_defect, diagonal_gaps,
    ruler_trace, skeleton_points, wrong_gap,
)
from trisect.geom import polygon_area, pt, square
from trisect.model import compare, cut_segments, metrics, symmetry_order, verify
from trisect.scalar import HALF, ONE, SQRT2, SQRT3, SQRT6, Scalar
from oracles import equal_area_parameter, fixed, mp_value

PIECES = {
    "split-four": 4, "split-two-diagonal": 4, "split-two-midpoint": 5, "wrong-artisan": 6,
    "abul-wafa": 9, "frederickson": 7, "perigal": 6, "blanvillain": 6,
}
SAMPLES = (Scalar(Fraction(3, 10)), (SQRT3 - 1) / 2, Scalar(Fraction(2, 5)),
           Scalar(Fraction(1, 2)), Scalar(Fraction(3, 5)))


def float_symmetry_order(d) -> int:
    """Count the square symmetries fixing the cut set, in rounded floats."""
    h = float(d.source_side) / 2
    maps = [
        lambda x, y: (x, y), lambda x, y: (-y, x), lambda x, y: (-x, -y), lambda x, y: (y, -x),
        lambda x, y: (x, -y), lambda x, y: (-x, y), lambda x, y: (y, x), lambda x, y: (-y, -x),
    ]

    def key(p):
        return (round(p[0], 9) + 0.0, round(p[1], 9) + 0.0)

    segs = [((float(a.x) - h, float(a.y) - h), (float(b.x) - h, float(b.y) - h)) for a, b in cut_segments(d)]
    base = {frozenset((key(a), key(b))) for a, b in segs}
    count = 0
    for f in maps:
        image = {frozenset((key(f(*a)), key(f(*b)))) for a, b in segs}
        count += image == base
    return count


@pytest.mark.parametrize("name", NAMES)
def test_piece_counts(name):
    assert len(build(name).pieces) == PIECES[name]


@pytest.mark.parametrize("name", [n for n in NAMES if n != "wrong-artisan"])
def test_catalog_verifies(name):
    assert verify(build(name)).ok


@pytest.mark.parametrize("name", NAMES)
def test_symmetry_against_float_oracle(name):
    d = build(name)
    assert symmetry_order(d) == float_symmetry_order(d)


@pytest.mark.parametrize("name", NAMES)
def test_pieces_conserve_area(name):
    d = build(name)
    assert sum((polygon_area(p.shape) for p in d.pieces), Scalar(0)) == d.source_side ** 2


def test_no_reflections():
    assert not any(verify(build(n)).uses_reflection for n in NAMES)


def test_wrong_artisan_fails():
    d = build("wrong-artisan")
    assert not verify(d).ok
    assert wrong_gap() == SQRT6 - 1 - SQRT2
    covered, missing = diagonal_defect(d)
    assert missing == wrong_gap()
    assert covered + missing == SQRT3 * SQRT2
    # two equal gaps, one near each end of the diagonal
    gaps = diagonal_gaps(d)
    assert len(gaps) == 2
    lengths = [(a.x - b.x) ** 2 + (a.y - b.y) ** 2 for a, b in gaps]
    assert lengths[0] == lengths[1]


def test_wrong_gap_decimal():
    expected = fixed((mpmath.sqrt(6) - 1 - mpmath.sqrt(2)) / 2, 6)
    assert (wrong_gap() / 2).to_decimal(6) == expected == "0.017638"


@pytest.mark.parametrize("name", ["wrong-artisan", "abul-wafa", "frederickson", "perigal", "blanvillain"])
def test_trisections_of_side_sqrt3(name):
    d = build(name)
    assert (d.k, d.source_side, d.target_side) == (3, SQRT3, ONE)


def test_abul_wafa_tilt():
    d = build("abul-wafa")
    tilt = d.pieces[0].placement
    # the placement undoes the tilt of the middle square
    assert tilt.cos == SQRT3 / 3 and abs(tilt.sin) == SQRT6 / 3
    assert SQRT3 / 2 * tilt.cos == HALF


def test_blanvillain_range():
    lo, hi = blanvillain_range()
    assert lo == 2 - SQRT3 and hi == (3 - SQRT3) / 2
    for t in (lo, hi, Scalar(0), Scalar(1), Scalar(Fraction(1, 5))):
        with pytest.raises(ParameterOutOfRange):
            build_blanvillain(t)


def test_equal_area_member():
    t = blanvillain_equal_area()
    root = equal_area_parameter()
    assert t == (SQRT3 - 1) / 2
    assert abs(float(t) - float(root)) < 1e-15
    d = build_blanvillain(t)
    assert all(polygon_area(p.shape) == HALF for p in d.pieces)
    assert build("blanvillain").family_parameter == t


@pytest.mark.parametrize("t", SAMPLES[2:])
def test_other_members_unequal(t):
    assert not metrics(build_blanvillain(t)).equal_areas


@pytest.mark.parametrize("t", SAMPLES)
def test_blanvillain_members(t):
    d = build_blanvillain(t)
    assert verify(d).ok
    m = metrics(d)
    assert m.symmetry_order >= 2
    assert not m.all_convex
    # the cut length does not depend on t
    assert m.total_cut_length == fixed(3 + 3 * mpmath.sqrt(3), 6)


def test_band_slope():
    cuts = cut_segments(build("blanvillain"))
    slopes = [(b.y - a.y) / (b.x - a.x) for a, b in cuts if a.x != b.x]
    assert SQRT3 / 3 in slopes
    assert math.isclose(float(SQRT3 / 3), math.tan(math.pi / 6))


def test_members_differ():
    ds = [build_blanvillain(t) for t in SAMPLES[2:]]
    for i in range(3):
        for j in range(i + 1, 3):
            assert not compare(ds[i], ds[j]).identical


def test_build_errors():
    with pytest.raises(KeyError):
        build("no-such")
    with pytest.raises(ValueError):
        build("perigal", Scalar(Fraction(1, 2)))


def test_traces_reach_skeleton():
    want = skeleton_points(build("blanvillain"))
    ruler, compass = ruler_trace(), compass_trace()
    assert set(ruler.outputs.values()) == want
    assert set(compass.outputs.values()) == want
    assert ruler.radii() == set()
    assert compass.radii() <= {ONE, SQRT3 - 1}


def test_skeleton_is_shared_by_members():
    pts = {frozenset(skeleton_points(build_blanvillain(t))) for t in SAMPLES}
    assert len(pts) == 1
    assert len(next(iter(pts))) == 8


def test_trace_error_types():
    assert issubclass(SelectorAmbiguity, ConstructionError)
    assert issubclass(ConstructionError, ValueError)


def test_trace_rejects_forward_reference():
    t = ruler_trace()
    broken = catalog.ConstructionTrace(t.given, t.steps[1:], t.output_names)
    with pytest.raises(ConstructionError):
        broken.replay()


def _two_circles(selector):
    S = catalog.ConstructionStep
    given = {"A": pt(0, 0), "B": pt(1, 0), "D": pt(0, 1)}
    steps = (S("circle", ("A",), "ca", value=ONE), S("circle", ("B",), "cb", value=ONE),
             S("intersect", ("ca", "cb"), "x", selector=selector))
    return catalog.ConstructionTrace(given, steps, ("x",))


def test_selector_picks_side():
    assert _two_circles((("A", "B"), 1)).outputs["x"] == pt(HALF, SQRT3 / 2)
    assert _two_circles((("A", "B"), -1)).outputs["x"] == pt(HALF, -SQRT3 / 2)


def test_selector_ambiguity():
    # both candidates lie right of the upward line through A
    with pytest.raises(SelectorAmbiguity):
        _two_circles((("A", "D"), -1)).replay()
    # and neither lies left of it
    with pytest.raises(SelectorAmbiguity):
        _two_circles((("A", "D"), 1)).replay()


@pytest.mark.parametrize("t", SAMPLES)
def test_band_cuts_survive_half_turn(t):
    from trisect.model import symmetry_group
    assert ((-1, 0), (0, -1)) in symmetry_group(build_blanvillain(t))


@pytest.mark.parametrize("t", [Scalar(Fraction(3, 10)), Scalar(Fraction(1, 2))])
def test_rational_members_stay_in_sqrt3_field(t):
    coords = [c for p in build_blanvillain(t).pieces for v in p.shape.vertices for c in v]
    assert all(c.coeffs[1] == 0 and c.coeffs[3] == 0 for c in coords)


def test_perigal_keeps_one_square_whole():
    whole = [p for p in build("perigal").pieces if p.shape == square(1, p.shape.vertices[0])]
    assert len(whole) == 1
