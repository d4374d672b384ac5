"""Exact builders for the catalog of square dissections.

Every builder returns a :class:`~trisect.model.Dissection` whose coordinates
live in Q(sqrt2, sqrt3).  Placements are derived from vertex correspondences
rather than typed in, so a wrong correspondence shows up as a failed
:func:`~trisect.model.verify` instead of a silently wrong picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .geom import (
    Point,
    Polygon,
    RigidMotion,
    apply_motion,
    motion_from_points,
    orientation,
    polygon_area,
    polygon_contains,
    pt,
    square,
)
from .model import Dissection, Piece
from .scalar import HALF, ONE, SQRT2, SQRT3, SQRT6, ZERO, Scalar, sqrt_scalar

__all__ = [
    "CATALOG",
    "build",
    "build_split_four",
    "build_split_two_diagonal",
    "build_split_two_midpoint",
    "build_wrong_artisan",
    "wrong_gap",
    "diagonal_defect",
    "diagonal_gaps",
    "build_abul_wafa",
    "build_frederickson",
    "build_perigal",
    "build_blanvillain",
    "blanvillain_range",
    "blanvillain_equal_area",
    "ParameterOutOfRange",
    "skeleton_points",
    "ruler_trace",
    "compass_trace",
    "NAMES",
    "ConstructionStep",
    "ConstructionTrace",
    "ConstructionError",
    "SelectorAmbiguity",
]

_H = SQRT3 / 2  # half the side of the trisected square


def _poly(*pts: Point) -> Polygon:
    return Polygon(pts)


def _translate(dx, dy) -> RigidMotion:
    return RigidMotion.translation(dx, dy)


def _fit(shape: Polygon, p1: Point, p2: Point, q1: Point, q2: Point, target: Polygon) -> RigidMotion:
    """Motion sending segment p1p2 onto q1q2 (either way round) that lands inside ``target``."""
    for a, b in ((p1, p2), (p2, p1)):
        m = motion_from_points(a, b, q1, q2)
        if polygon_contains(target, apply_motion(m, shape)):
            return m
    raise ValueError("no placement of the piece fits the target")


def _rot_about(center: Point, quarter_turns: int) -> RigidMotion:
    c, s = ((1, 0), (0, 1), (-1, 0), (0, -1))[quarter_turns % 4]
    return RigidMotion.rotation(Scalar(c), Scalar(s), center)


def _pieces(specs) -> tuple[Piece, ...]:
    return tuple(Piece(i, shape, t, m) for i, (shape, t, m) in enumerate(specs))


# -- warm-ups ------------------------------------------------------------


def build_split_four() -> Dissection:
    """Cross cut through the side midpoints: four squares of half the side."""
    side = SQRT3
    h = side / 2
    specs = []
    for j in range(2):
        for i in range(2):
            origin = pt(h * i, h * j)
            specs.append((square(h, origin), 2 * j + i, _translate(-origin.x, -origin.y)))
    return Dissection("split-four", side, 4, h, _pieces(specs))


def build_split_two_diagonal() -> Dissection:
    """Both diagonals; opposite triangles pair up into a square.

    A side of sqrt3 would need target side sqrt(3/2), which is outside the
    field, so this one is built on a square of side 2.
    """
    side, t = Scalar(2), SQRT2
    c = pt(1, 1)
    corners = [pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)]
    halves = (_poly(pt(0, 0), Point(t, ZERO), Point(t, t)), _poly(pt(0, 0), Point(t, t), Point(ZERO, t)))
    specs = []
    for i in range(4):
        a, b = corners[i], corners[(i + 1) % 4]
        tri = _poly(a, b, c)
        # the hypotenuse becomes the target diagonal
        specs.append((tri, i % 2, _fit(tri, a, b, pt(0, 0), Point(t, t), halves[i // 2])))
    return Dissection("split-two-diagonal", side, 2, t, _pieces(specs))


def build_split_two_midpoint() -> Dissection:
    """Inner square on the side midpoints plus four corner triangles."""
    side, t = Scalar(2), SQRT2
    mids = [pt(1, 0), pt(2, 1), pt(1, 2), pt(0, 1)]
    tgt = square(t)
    inner = _poly(*mids)
    specs = [(inner, 0, motion_from_points(mids[0], mids[1], pt(0, 0), Point(t, ZERO)))]
    corners = [pt(2, 0), pt(2, 2), pt(0, 2), pt(0, 0)]
    sides = [(pt(0, 0), Point(t, ZERO)), (Point(t, ZERO), Point(t, t)),
             (Point(t, t), Point(ZERO, t)), (Point(ZERO, t), pt(0, 0))]
    for i, k in enumerate(corners):
        a, b = mids[i], mids[(i + 1) % 4]
        tri = _poly(a, k, b)
        specs.append((tri, 1, _fit(tri, a, b, *sides[i], tgt)))
    return Dissection("split-two-midpoint", side, 2, t, _pieces(specs))


# -- the artisans' arrangement --------------------------------------------


def wrong_gap() -> Scalar:
    """How far the artisans' diagonal falls short of the true one."""
    return SQRT6 - 1 - SQRT2


def build_wrong_artisan() -> Dissection:
    """The artisans' six pieces laid out in a square of side sqrt3.

    Middle square turned 45 degrees in the centre, the second square halved
    on its diagonal into two corners, the third square cut into a right
    isosceles triangle and two trapezoids that fill the remaining corners.
    The targets are the three honest unit squares; it is the layout in the
    source that does not close up.
    """
    s = SQRT3
    c = Point(_H, _H)
    r = SQRT2 / 2
    q = SQRT2 / 4
    unit = square(ONE)
    centre = _poly(Point(c.x + r, c.y), Point(c.x, c.y + r), Point(c.x - r, c.y), Point(c.x, c.y - r))
    half_a = _poly(Point(s - 1, ZERO), Point(s, ZERO), Point(s, ONE))
    half_b = _poly(Point(ZERO, s - 1), Point(ONE, s), Point(ZERO, s))
    tip = _poly(pt(0, 0), Point(r, ZERO), Point(ZERO, r))
    # the two trapezoids make a house whose roof sits in the far corner
    k = Point(s, s)
    p1, p2 = Point(s - r, s), Point(s, s - r)
    m = Point(s - r, s - r)
    r1, r2 = Point(s - 3 * q, s - q), Point(s - q, s - 3 * q)
    trap_a = _poly(k, p1, r1, m)
    trap_b = _poly(k, m, r2, p2)
    tri_t = _poly(pt(0, 0), pt(1, 0), pt(Fraction(1, 2), Fraction(1, 2)))
    left = _poly(pt(0, 0), pt(Fraction(1, 2), Fraction(1, 2)), pt(Fraction(1, 2), 1), pt(0, 1))
    right = _poly(pt(Fraction(1, 2), Fraction(1, 2)), pt(1, 0), pt(1, 1), pt(Fraction(1, 2), 1))
    specs = [
        (centre, 0, motion_from_points(Point(c.x, c.y - r), Point(c.x + r, c.y), pt(0, 0), pt(1, 0))),
        (half_a, 1, _translate(1 - s, 0)),
        (half_b, 1, _translate(0, 1 - s)),
        (tip, 2, _fit(tip, Point(r, ZERO), Point(ZERO, r), pt(0, 0), pt(1, 0), tri_t)),
        (trap_a, 2, _fit(trap_a, k, m, pt(0, 0), pt(0, 1), left)),
        (trap_b, 2, _fit(trap_b, k, m, pt(1, 0), pt(1, 1), right)),
    ]
    return Dissection("wrong-artisan", s, 3, ONE, _pieces(specs))


def diagonal_defect(d: Dissection) -> tuple[Scalar, Scalar]:
    """Covered length and uncovered length along the diagonal from (side, 0) to (0, side).

    Only meaningful for layouts whose pieces meet that diagonal in single
    chords, as the artisans' layout does.  The uncovered length of the
    artisans' layout is exactly :func:`wrong_gap`.
    """
    side = d.source_side
    covered = ZERO
    for p in d.pieces:
        ts = _chord(p.shape, side)
        if ts is not None:
            covered = covered + (ts[1] - ts[0])
    total = side * SQRT2
    covered = covered * SQRT2
    return covered, total - covered


def diagonal_gaps(d: Dissection) -> list[tuple[Point, Point]]:
    """Stretches of the diagonal from (side, 0) to (0, side) that no piece covers."""
    side = d.source_side
    spans = sorted((ts for ts in (_chord(p.shape, side) for p in d.pieces) if ts is not None),
                   key=lambda ts: float(ts[0]))
    gaps = []
    at = ZERO
    for lo, hi in spans:
        if lo > at:
            gaps.append((at, lo))
        if hi > at:
            at = hi
    if at < side:
        gaps.append((at, side))
    return [(Point(side - a, a), Point(side - b, b)) for a, b in gaps]


def _chord(P: Polygon, side: Scalar):
    """Parameter interval [t0, t1] of the line (side - t, t) inside convex-ish P, or None."""
    hits = []
    vs = P.vertices
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        # f(v) = v.x + v.y - side is zero on the line
        fa, fb = a.x + a.y - side, b.x + b.y - side
        if fa.is_zero() and fb.is_zero():
            continue
        if fa.is_zero():
            hits.append(a.y)
        elif (fa.sign() < 0) != (fb.sign() < 0) and not fb.is_zero():
            u = fa / (fa - fb)
            hits.append(a.y + (b.y - a.y) * u)
    if len(hits) < 2:
        return None
    lo, hi = min(hits), max(hits)
    if lo == hi:
        return None
    return lo, hi


# -- historical trisections ------------------------------------------------

# unit vectors of the tilted central square used by two of the classics
_N1 = Point(SQRT3 / 3, SQRT6 / 3)
_N2 = Point(-SQRT6 / 3, SQRT3 / 3)


def _centred(x, y) -> Point:
    return Point(_H + x, _H + y)


def _v(a: int, b: int) -> Point:
    """Vertex of the tilted unit square: centre + a*n1/2 + b*n2/2."""
    return _centred((_N1.x * a + _N2.x * b) / 2, (_N1.y * a + _N2.y * b) / 2)


def build_abul_wafa() -> Dissection:
    """Tilted central square plus four corner quads, each split along a diagonal."""
    s = SQRT3
    c = Point(_H, _H)
    unit = square(ONE)
    centre = _poly(_v(-1, -1), _v(1, -1), _v(1, 1), _v(-1, 1))
    specs = [(centre, 0, motion_from_points(_v(-1, -1), _v(1, -1), pt(0, 0), pt(1, 0)))]
    # one corner; the rest follow by quarter turns about the centre
    k0, mb, mr, v0 = Point(s, ZERO), Point(_H, ZERO), Point(s, _H), _v(1, -1)
    a_tris, b_tris = [], []
    for i in range(4):
        rot = _rot_about(c, i)
        k, b_, r_, v = (rot.apply(p) for p in (k0, mb, mr, v0))
        a_tris.append((_poly(k, b_, v), k, v))
        b_tris.append((_poly(k, r_, v), k, v))
    # each half of a target is a right isosceles triangle with legs 1,
    # filled by an "a" triangle and the "b" triangle of the next corner
    halves = [
        (1, pt(0, 0), pt(1, 0), pt(0, 1)),
        (1, pt(1, 1), pt(0, 1), pt(1, 0)),
        (2, pt(0, 0), pt(1, 0), pt(0, 1)),
        (2, pt(1, 1), pt(0, 1), pt(1, 0)),
    ]
    for i, (t, z, e1, e2) in enumerate(halves):
        region = _poly(z, e1, e2)
        for tri, k, v in (a_tris[i], b_tris[(i + 1) % 4]):
            m = _place_in(tri, k, v, z, (e1, e2), region)
            specs.append((tri, t, m))
    return Dissection("abul-wafa", s, 3, ONE, _pieces(specs))


def _place_in(tri: Polygon, k: Point, v: Point, z: Point, ends, region: Polygon) -> RigidMotion:
    for e in ends:
        m = motion_from_points(k, v, z, e)
        if polygon_contains(region, apply_motion(m, tri)):
            return m
    raise ValueError("corner piece does not fit")


def build_frederickson() -> Dissection:
    """Same tilted square; the side lines run through two side midpoints."""
    s = SQRT3
    c = Point(_H, _H)
    half_turn = _rot_about(c, 2)
    centre = _poly(_v(-1, -1), _v(1, -1), _v(1, 1), _v(-1, 1))
    p_top = _centred(_H * (1 - SQRT2), _H)
    m_right = Point(s, _H)
    m_left = Point(ZERO, _H)
    corner = Point(s, s)
    grey = _poly(_v(-1, 1), _v(1, 1), p_top, Point(ZERO, s), m_left)
    # the corner triangle is cut square to its hypotenuse at length 1 from p_top
    q = Point(p_top.x + _H, s)
    f = Point(p_top.x + SQRT2 / 2 * (SQRT6 / 3), s - SQRT2 / 2 * (SQRT3 / 3))
    small = _poly(p_top, f, q)
    quad = _poly(corner, q, f, m_right)
    # frame of the first target: u = n1.(p - c) + 1/2, w = n2.(p - c) - 1/2
    frame = motion_from_points(_v(-1, 1), _v(1, 1), pt(0, 0), pt(1, 0))
    far = _centred((_N1.x + 3 * _N2.x) / 2, (_N1.y + 3 * _N2.y) / 2)
    swing = motion_from_points(p_top, f, p_top, far)
    slide = _translate(-s, 0)
    first = [(grey, frame), (small, frame @ swing), (quad, frame @ slide)]
    specs = [(centre, 0, motion_from_points(_v(-1, -1), _v(1, -1), pt(0, 0), pt(1, 0)))]
    specs += [(shape, 1, m) for shape, m in first]
    specs += [(apply_motion(half_turn, shape), 2, m @ half_turn) for shape, m in first]
    return Dissection("frederickson", s, 3, ONE, _pieces(specs))


def build_perigal() -> Dissection:
    """Worked out on three unit squares in a row, then moved into the big square."""
    s = SQRT3
    r3 = SQRT3
    third = r3 / 3
    row = {
        "a": ([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)], 0, (ZERO, ZERO)),
        "b": ([pt(1, 0), Point(r3, ZERO), Point(r3, r3 - 1), Point(3 - r3, ONE), pt(1, 1)], 1, (ZERO, ZERO)),
        "c": ([Point(3 - r3, ONE), Point(Scalar(2), third), pt(2, 1)], 1, (r3 - 3, r3 - 1)),
        "d": ([Point(Scalar(2), third), pt(3, 0), pt(3, 1), pt(2, 1)], 2, (r3 - 3, r3 - 1)),
        "e": ([Point(r3, ZERO), pt(2, 0), Point(Scalar(2), third), Point(r3, r3 - 1)], 1, (-r3, ONE)),
        "f": ([pt(2, 0), pt(3, 0), Point(Scalar(2), third)], 2, (-r3, ONE)),
    }
    specs = []
    for verts, t, (dx, dy) in row.values():
        shape = Polygon([Point(v.x + dx, v.y + dy) for v in verts])
        specs.append((shape, t, _translate(-dx - t, -dy)))
    return Dissection("perigal", s, 3, ONE, _pieces(specs))


# -- the inclined band ---------------------------------------------------

# unit vectors along the band and across it (band direction is 30 degrees)
_ALONG = Point(_H, HALF)
_ACROSS = Point(-HALF, _H)


class ParameterOutOfRange(ValueError):
    """The family parameter puts a sliding cut on or past a corner of its half."""


def blanvillain_range() -> tuple[Scalar, Scalar]:
    """Open interval of positions for the sliding cut.

    The position is measured along the band from (0, sqrt3 - 1).  At either
    end the cut runs into a corner of its half of the band.
    """
    return 2 - SQRT3, (3 - SQRT3) / 2


def _band_points(t: Scalar) -> dict[str, Point]:
    s = SQRT3
    cp = Point(ZERO, s - 1)
    c = Point(s - 1, ZERO)
    top = cp + _ALONG.scale(t)
    return {
        "O": pt(0, 0),
        "K": Point(s, ZERO),
        "C": c,
        "P": Point(s, ONE),
        "Cp": cp,
        "M": Point(_H, HALF),
        "G": Point(_H, s - HALF),
        "V": c + _ALONG,
        "S1": top,
        "S0": top - _ACROSS,
    }


def _band_pieces(t: Scalar):
    q = _band_points(t)
    outer = _poly(q["C"], q["K"], q["P"], q["M"], q["V"])
    left = _poly(q["O"], q["C"], q["S0"], q["S1"], q["Cp"])
    right = _poly(q["S0"], q["V"], q["M"], q["G"], q["S1"])
    return q, outer, left, right


def blanvillain_equal_area() -> Scalar:
    """Position at which all six pieces have area 1/2.

    The outer pieces are always 1/2.  The left band piece grows linearly with
    the position, so two samples pin down the line.
    """
    lo, hi = blanvillain_range()
    t0 = lo + (hi - lo) / 3
    t1 = lo + (hi - lo) * 2 / 3
    a0 = polygon_area(_band_pieces(t0)[2])
    a1 = polygon_area(_band_pieces(t1)[2])
    return t0 + (HALF - a0) * (t1 - t0) / (a1 - a0)


def build_blanvillain(t: Optional[Scalar] = None) -> Dissection:
    """Six pieces: a 30 degree band in two symmetric halves plus two outer pieces.

    Each half of the band is a unit-long stretch of a unit-wide strip.  A cut
    across the strip at position ``t`` splits it; sliding the lower piece one
    unit along the strip closes it into a square.  The outer piece and its
    half-turn copy fit together as the third square.
    """
    if t is None:
        t = blanvillain_equal_area()
    t = Scalar.coerce(t)
    lo, hi = blanvillain_range()
    if not lo < t < hi:
        raise ParameterOutOfRange(f"t = {t} is outside the open interval ({lo}, {hi})")
    s = SQRT3
    half_turn = _rot_about(Point(_H, _H), 2)
    q, outer, left, right = _band_pieces(t)
    # square frame: the foot of the sliding cut goes to the origin
    frame = motion_from_points(q["S0"], q["S0"] + _ALONG, pt(0, 0), pt(1, 0))
    slide = _translate(_ALONG.x, _ALONG.y)
    to_unit = _translate(1 - s, 0)
    flip = _rot_about(pt(Fraction(1, 2), Fraction(1, 2)), 2)
    specs = [
        (outer, 0, to_unit),
        (apply_motion(half_turn, outer), 0, flip @ to_unit @ half_turn),
        (left, 1, frame @ slide),
        (right, 1, frame),
        (apply_motion(half_turn, left), 2, frame @ slide @ half_turn),
        (apply_motion(half_turn, right), 2, frame @ half_turn),
    ]
    return Dissection("blanvillain", s, 3, ONE, _pieces(specs), family_parameter=t)


def skeleton_points(d: Dissection) -> set[Point]:
    """Piece vertices that do not move with the family parameter.

    Source corners and the ends of the sliding cuts are left out.
    """
    side = d.source_side
    corners = {Point(x, y) for x in (ZERO, side) for y in (ZERO, side)}
    if d.family_parameter is None:
        sliding: set[Point] = set()
    else:
        q = _band_points(d.family_parameter)
        half_turn = _rot_about(d.center, 2)
        sliding = {q["S0"], q["S1"], half_turn.apply(q["S0"]), half_turn.apply(q["S1"])}
    verts = {v for p in d.pieces for v in p.shape.vertices}
    return verts - corners - sliding


# -- ruler and compass traces ----------------------------------------------

STEP_KINDS = ("mark-point", "line-through", "circle", "intersect")


class ConstructionError(ValueError):
    """A trace step is malformed or refers to an unknown object."""


class SelectorAmbiguity(ConstructionError):
    """An intersect step's selector leaves zero or several candidates."""


@dataclass(frozen=True)
class ConstructionStep:
    """One ruler or compass action.

    ``mark-point`` lays off ``value`` from ``operands[0]`` towards ``operands[1]``;
    ``line-through`` joins two points; ``circle`` is centred on ``operands[0]``
    with radius ``value``; ``intersect`` meets two lines or circles and keeps
    the candidate on side ``selector[1]`` (+1 left, -1 right, 0 on) of the
    directed line through the two points named in ``selector[0]``.
    """

    kind: str
    operands: tuple[str, ...]
    result_name: str
    selector: Optional[tuple[tuple[str, str], int]] = None
    value: Optional[Scalar] = None

    def __post_init__(self):
        if self.kind not in STEP_KINDS:
            raise ConstructionError(f"unknown step kind {self.kind!r}")


@dataclass(frozen=True)
class _Line:
    p: Point
    q: Point


@dataclass(frozen=True)
class _Circle:
    center: Point
    radius: Scalar


@dataclass(frozen=True)
class ConstructionTrace:
    """Steps replayed from the named corners of the square."""

    given: dict
    steps: tuple[ConstructionStep, ...]
    output_names: tuple[str, ...]

    def replay(self) -> dict:
        objs: dict = dict(self.given)
        for i, st in enumerate(self.steps):
            if st.result_name in objs:
                raise ConstructionError(f"step {i} redefines {st.result_name!r}")
            args = []
            for name in st.operands:
                if name not in objs:
                    raise ConstructionError(f"step {i} uses {name!r} before it exists")
                args.append(objs[name])
            objs[st.result_name] = _perform(st, args, objs, i)
        return objs

    @property
    def outputs(self) -> dict[str, Point]:
        objs = self.replay()
        return {n: objs[n] for n in self.output_names}

    def radii(self) -> set[Scalar]:
        return {st.value for st in self.steps if st.kind == "circle"}


def _perform(st: ConstructionStep, args, objs, i: int):
    if st.kind == "mark-point":
        a, b = _points(args, 2, i)
        d = b - a
        length = sqrt_scalar(d.x * d.x + d.y * d.y)
        k = st.value / length
        return Point(a.x + d.x * k, a.y + d.y * k)
    if st.kind == "line-through":
        a, b = _points(args, 2, i)
        if a == b:
            raise ConstructionError(f"step {i}: line through a single point")
        return _Line(a, b)
    if st.kind == "circle":
        (a,) = _points(args, 1, i)
        if st.value is None or st.value.sign() <= 0:
            raise ConstructionError(f"step {i}: circle needs a positive radius")
        return _Circle(a, st.value)
    if len(args) != 2:
        raise ConstructionError(f"step {i}: intersect takes two objects")
    cands = _meet(args[0], args[1])
    if st.selector is not None:
        (na, nb), side = st.selector
        la, lb = objs[na], objs[nb]
        cands = [p for p in cands if orientation(la, lb, p) == side]
    if len(cands) != 1:
        raise SelectorAmbiguity(f"step {i} ({st.result_name}): {len(cands)} candidates")
    return cands[0]


def _points(args, n, i):
    if len(args) != n or not all(isinstance(a, Point) for a in args):
        raise ConstructionError(f"step {i}: expected {n} point operand(s)")
    return args


def _meet(a, b) -> list[Point]:
    if isinstance(a, _Circle) and isinstance(b, _Line):
        a, b = b, a
    if isinstance(a, _Line) and isinstance(b, _Line):
        d1, d2 = a.q - a.p, b.q - b.p
        den = d1.x * d2.y - d1.y * d2.x
        if den.is_zero():
            return []
        w = b.p - a.p
        s = (w.x * d2.y - w.y * d2.x) / den
        return [Point(a.p.x + d1.x * s, a.p.y + d1.y * s)]
    if isinstance(a, _Line):
        return _line_circle(a.p, a.q - a.p, b)
    # two circles: meet the radical line with the first circle
    d = b.center - a.center
    dd = d.x * d.x + d.y * d.y
    if dd.is_zero():
        return []
    t = (a.radius * a.radius - b.radius * b.radius + dd) / (2 * dd)
    base = Point(a.center.x + d.x * t, a.center.y + d.y * t)
    return _line_circle(base, Point(-d.y, d.x), a)


def _line_circle(p: Point, d: Point, circ: _Circle) -> list[Point]:
    w = p - circ.center
    qa = d.x * d.x + d.y * d.y
    qb = d.x * w.x + d.y * w.y
    qc = w.x * w.x + w.y * w.y - circ.radius * circ.radius
    disc = qb * qb - qa * qc
    sg = disc.sign()
    if sg < 0:
        return []
    if sg == 0:
        s = -qb / qa
        return [Point(p.x + d.x * s, p.y + d.y * s)]
    r = sqrt_scalar(disc)
    out = []
    for s in ((-qb - r) / qa, (-qb + r) / qa):
        out.append(Point(p.x + d.x * s, p.y + d.y * s))
    return out


def _corners() -> dict:
    s = SQRT3
    return {"A": pt(0, 0), "B": Point(s, ZERO), "C": Point(s, s), "D": Point(ZERO, s)}


TRACE_OUTPUTS = ("mark_bottom", "mark_right", "mark_left", "mark_top", "m", "g", "v", "w")


def ruler_trace() -> ConstructionTrace:
    """Unit lengths marked from the corners, then straight lines only."""
    one = ONE
    S = ConstructionStep
    steps = (
        S("mark-point", ("B", "A"), "mark_bottom", value=one),
        S("mark-point", ("B", "C"), "mark_right", value=one),
        S("mark-point", ("D", "A"), "mark_left", value=one),
        S("mark-point", ("D", "C"), "mark_top", value=one),
        S("mark-point", ("A", "D"), "up_one", value=one),
        S("mark-point", ("C", "B"), "down_one", value=one),
        S("line-through", ("A", "mark_right"), "lower_band"),
        S("line-through", ("C", "mark_left"), "upper_band"),
        S("line-through", ("B", "up_one"), "from_b"),
        S("line-through", ("D", "down_one"), "from_d"),
        S("line-through", ("C", "mark_bottom"), "steep_c"),
        S("line-through", ("A", "mark_top"), "steep_a"),
        S("intersect", ("lower_band", "from_b"), "m"),
        S("intersect", ("upper_band", "from_d"), "g"),
        S("intersect", ("lower_band", "from_d"), "x1"),
        S("intersect", ("lower_band", "steep_c"), "x2"),
        S("intersect", ("from_b", "upper_band"), "x3"),
        S("intersect", ("upper_band", "steep_a"), "x4"),
        S("line-through", ("B", "x1"), "l1"),
        S("line-through", ("x2", "x3"), "l2"),
        S("line-through", ("D", "x3"), "l3"),
        S("line-through", ("x4", "x1"), "l4"),
        S("intersect", ("l1", "l2"), "v"),
        S("intersect", ("l3", "l4"), "w"),
    )
    return ConstructionTrace(_corners(), steps, TRACE_OUTPUTS)


def compass_trace() -> ConstructionTrace:
    """Arcs of radius 1 and circles of radius sqrt3 - 1, nothing else."""
    one, short = ONE, SQRT3 - 1
    S = ConstructionStep
    steps = (
        S("circle", ("A",), "ring_a", value=short),
        S("circle", ("C",), "ring_c", value=short),
        S("circle", ("A",), "arc_a", value=one),
        S("circle", ("B",), "arc_b", value=one),
        S("circle", ("C",), "arc_c", value=one),
        S("circle", ("D",), "arc_d", value=one),
        # |AB| = 1 + (sqrt3 - 1), so these pairs touch in a single point
        S("intersect", ("arc_b", "ring_a"), "mark_bottom"),
        S("intersect", ("arc_b", "ring_c"), "mark_right"),
        S("intersect", ("arc_d", "ring_a"), "mark_left"),
        S("intersect", ("arc_d", "ring_c"), "mark_top"),
        S("intersect", ("arc_a", "arc_b"), "m", selector=(("A", "B"), 1)),
        S("intersect", ("arc_c", "arc_d"), "g", selector=(("C", "D"), 1)),
        S("circle", ("mark_bottom",), "arc_v", value=one),
        S("circle", ("m",), "ring_v", value=short),
        S("intersect", ("arc_v", "ring_v"), "v", selector=(("mark_bottom", "m"), -1)),
        S("circle", ("mark_top",), "arc_w", value=one),
        S("circle", ("g",), "ring_w", value=short),
        S("intersect", ("arc_w", "ring_w"), "w", selector=(("mark_top", "g"), -1)),
    )
    return ConstructionTrace(_corners(), steps, TRACE_OUTPUTS)


CATALOG: dict[str, Callable[..., Dissection]] = {
    "split-four": build_split_four,
    "split-two-diagonal": build_split_two_diagonal,
    "split-two-midpoint": build_split_two_midpoint,
    "wrong-artisan": build_wrong_artisan,
    "abul-wafa": build_abul_wafa,
    "frederickson": build_frederickson,
    "perigal": build_perigal,
    "blanvillain": build_blanvillain,
}

NAMES = tuple(CATALOG)


def build(name: str, param: Scalar | None = None) -> Dissection:
    try:
        builder = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown dissection {name!r}") from None
    if param is not None:
        if name != "blanvillain":
            raise ValueError(f"{name} takes no parameter")
        return builder(param)
    return builder()
