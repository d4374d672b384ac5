"""Exact planar geometry over Q(sqrt2, sqrt3).

Points, segments, canonical simple polygons, incidence predicates and rigid
motions.  Nothing here uses floating point; every predicate is decided by
:meth:`Scalar.sign`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from fractions import Fraction
from math import isqrt
from typing import Iterable, NamedTuple, Sequence

from .scalar import ONE, ZERO, Scalar

__all__ = [
    "Point",
    "Segment",
    "Polygon",
    "RigidMotion",
    "Location",
    "InvalidPolygon",
    "pt",
    "orientation",
    "polygon_area",
    "point_in_polygon",
    "interiors_disjoint",
    "polygon_contains",
    "apply_motion",
    "segment_length_decimal",
    "sqrt_decimal",
    "motion_from_points",
    "square",
    "convex_overlap_area",
]


class InvalidPolygon(ValueError):
    pass


class Point(NamedTuple):
    x: Scalar
    y: Scalar

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    def __str__(self):
        return f"({self.x}, {self.y})"


def pt(x, y) -> Point:
    """Build a point from anything Scalar-coercible."""
    return Point(Scalar.coerce(x), Scalar.coerce(y))


def _cross(o: Point, p: Point, q: Point) -> Scalar:
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x)


def _dot(u: Point, v: Point) -> Scalar:
    return u.x * v.x + u.y * v.y


@lru_cache(maxsize=1 << 16)
def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear."""
    # float filter first; the exact product only runs near degeneracy
    (px, ex1), (py, ey1) = p.x.approx(), p.y.approx()
    (qx, ex2), (qy, ey2) = q.x.approx(), q.y.approx()
    (rx, ex3), (ry, ey3) = r.x.approx(), r.y.approx()
    ax, ay, bx, by = qx - px, qy - py, rx - px, ry - py
    v = ax * by - ay * bx
    ea, eb = ex1 + ex2 + ey1 + ey2, ex1 + ex3 + ey1 + ey3
    mag = (abs(ax) + abs(ay)) * (abs(bx) + abs(by))
    err = ea * (abs(bx) + abs(by) + eb) + eb * (abs(ax) + abs(ay)) + mag * 1e-14
    if abs(v) > err:
        return 1 if v > 0 else -1
    return _cross(p, q, r).sign()


def _point_key(p: Point):
    return (p.x.coeffs, p.y.coeffs)


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("degenerate segment")

    def canonical(self) -> "Segment":
        """Endpoints in lexicographic (x, y) order, compared exactly."""
        if _lex_less(self.q, self.p):
            return Segment(self.q, self.p)
        return self

    def midpoint(self) -> Point:
        return Point((self.p.x + self.q.x) / 2, (self.p.y + self.q.y) / 2)

    def squared_length(self) -> Scalar:
        d = self.q - self.p
        return _dot(d, d)


def _lex_less(a: Point, b: Point) -> bool:
    sx = (a.x - b.x).sign()
    if sx:
        return sx < 0
    return (a.y - b.y).sign() < 0


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment ab (assumes nothing about collinearity)."""
    if orientation(a, b, p) != 0:
        return False
    # collinear, so p is on ab iff it is inside the bounding box
    for u, v, w in ((p.x, a.x, b.x), (p.y, a.y, b.y)):
        lo, hi = (v, w) if v <= w else (w, v)
        if u < lo or u > hi:
            return False
    return True


class Polygon:
    """Simple polygon in canonical form.

    Canonical form: counter-clockwise, no repeated consecutive vertices, no
    collinear consecutive triples, starting at the lexicographically smallest
    vertex.  Two descriptions of the same polygon compare equal.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Point]):
        vs = [v if isinstance(v, Point) else pt(*v) for v in vertices]
        self.vertices: tuple[Point, ...] = _canonicalize(vs)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "Polygon([" + ", ".join(str(v) for v in self.vertices) + "])"

    def edges(self) -> list[Segment]:
        vs = self.vertices
        return [Segment(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_convex(self) -> bool:
        vs = self.vertices
        n = len(vs)
        return all(orientation(vs[i - 1], vs[i], vs[(i + 1) % n]) > 0 for i in range(n))

    def is_simple(self) -> bool:
        es = self.edges()
        n = len(es)
        for i in range(n):
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    # neighbours meet only at their shared vertex
                    a, b = es[i], es[j]
                    shared = a.q if j == i + 1 else a.p
                    other_a = a.p if j == i + 1 else a.q
                    other_b = b.q if j == i + 1 else b.p
                    if _on_segment(other_b, a.p, a.q) or _on_segment(other_a, b.p, b.q):
                        return False
                    del shared
                    continue
                if _segments_touch(es[i], es[j]):
                    return False
        return True

    def interior_point(self) -> Point:
        """A point strictly inside the polygon (centroid of an ear)."""
        vs = list(self.vertices)
        n = len(vs)
        for i in range(n):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
            if orientation(a, b, c) <= 0:
                continue
            blocked = [
                v for v in vs
                if v not in (a, b, c)
                and orientation(a, b, v) >= 0
                and orientation(b, c, v) >= 0
                and orientation(c, a, v) >= 0
            ]
            if not blocked:
                return Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
            # shrink towards the blocking vertex nearest the diagonal-free side
            nearest = min(blocked, key=lambda v: float(_cross(c, a, v)))
            m = Point((b.x + nearest.x) / 2, (b.y + nearest.y) / 2)
            if point_in_polygon(m, self) is Location.INSIDE:
                return m
        raise InvalidPolygon("polygon has no interior")


def _canonicalize(vs: list[Point]) -> tuple[Point, ...]:
    out: list[Point] = []
    for v in vs:
        if not out or out[-1] != v:
            out.append(v)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        n = len(out)
        for i in range(n):
            if orientation(out[i - 1], out[i], out[(i + 1) % n]) == 0:
                del out[i]
                changed = True
                break
    if len(out) < 3:
        raise InvalidPolygon("polygon needs at least three non-collinear vertices")
    if _signed_area2(out).sign() < 0:
        out.reverse()
    start = 0
    for i in range(1, len(out)):
        if _lex_less(out[i], out[start]):
            start = i
    return tuple(out[start:] + out[:start])


def _signed_area2(vs: Sequence[Point]) -> Scalar:
    total = ZERO
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        total = total + p.x * q.y - q.x * p.y
    return total


def polygon_area(P: Polygon) -> Scalar:
    return _signed_area2(P.vertices) / 2


def square(side, origin: Point | None = None) -> Polygon:
    s = Scalar.coerce(side)
    o = origin or Point(ZERO, ZERO)
    return Polygon([o, o + Point(s, ZERO), o + Point(s, s), o + Point(ZERO, s)])


# -- incidence -----------------------------------------------------------


class Location(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def point_in_polygon(p: Point, P: Polygon) -> Location:
    vs = P.vertices
    n = len(vs)
    winding = 0
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if _on_segment(p, a, b):
            return Location.BOUNDARY
        ay = (a.y - p.y).sign()
        by = (b.y - p.y).sign()
        if ay <= 0 < by:
            if orientation(a, b, p) > 0:
                winding += 1
        elif by <= 0 < ay:
            if orientation(a, b, p) < 0:
                winding -= 1
    return Location.INSIDE if winding else Location.OUTSIDE


def _proper_cross(s: Segment, t: Segment) -> bool:
    o1 = orientation(s.p, s.q, t.p)
    o2 = orientation(s.p, s.q, t.q)
    o3 = orientation(t.p, t.q, s.p)
    o4 = orientation(t.p, t.q, s.q)
    return o1 * o2 < 0 and o3 * o4 < 0


def _segments_touch(s: Segment, t: Segment) -> bool:
    if _proper_cross(s, t):
        return True
    return (
        _on_segment(t.p, s.p, s.q)
        or _on_segment(t.q, s.p, s.q)
        or _on_segment(s.p, t.p, t.q)
        or _on_segment(s.q, t.p, t.q)
    )


def _line_intersection(s: Segment, t: Segment) -> Point | None:
    d1 = s.q - s.p
    d2 = t.q - t.p
    den = d1.x * d2.y - d1.y * d2.x
    if den.is_zero():
        return None
    w = t.p - s.p
    k = (w.x * d2.y - w.y * d2.x) / den
    return s.p + d1.scale(k)


def _split_points(s: Segment, others: Sequence[Segment]) -> list[Point]:
    """Points where ``s`` meets any of ``others``, sorted along ``s``."""
    pts = [s.p, s.q]
    box = _box(s)
    for t in others:
        if _apart(box, _box(t)):
            continue
        o1, o2 = orientation(s.p, s.q, t.p), orientation(s.p, s.q, t.q)
        if o1 == 0 and _on_segment(t.p, s.p, s.q):
            pts.append(t.p)
        if o2 == 0 and _on_segment(t.q, s.p, s.q):
            pts.append(t.q)
        if o1 == o2 or o1 == 0 or o2 == 0:
            # no crossing strictly between t's endpoints
            continue
        o3, o4 = orientation(t.p, t.q, s.p), orientation(t.p, t.q, s.q)
        if o3 == o4:
            continue
        x = _line_intersection(s, t)
        if x is not None:
            pts.append(x)
    d = s.q - s.p
    uniq = {p: _dot(p - s.p, d) for p in pts}
    return sorted(uniq, key=lambda p: _SortKey(uniq[p]))


def _box(s: Segment):
    (x1, e1), (y1, f1) = s.p.x.approx(), s.p.y.approx()
    (x2, e2), (y2, f2) = s.q.x.approx(), s.q.y.approx()
    e = max(e1, e2, f1, f2) + 1e-12
    return min(x1, x2) - e, min(y1, y2) - e, max(x1, x2) + e, max(y1, y2) + e


def _apart(a, b) -> bool:
    return a[2] < b[0] or b[2] < a[0] or a[3] < b[1] or b[3] < a[1]


class _SortKey:
    __slots__ = ("v",)

    def __init__(self, v: Scalar):
        self.v = v

    def __lt__(self, other):
        return self.v < other.v


def _subsegments(s: Segment, others: Sequence[Segment]) -> list[Segment]:
    pts = _split_points(s, others)
    return [Segment(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]


def _same_direction_overlap(sub: Segment, edges: Sequence[Segment]) -> int:
    """+1 if ``sub`` runs along an edge in the same direction, -1 opposite, 0 if neither."""
    m = sub.midpoint()
    d = sub.q - sub.p
    for e in edges:
        if _on_segment(m, e.p, e.q) and orientation(e.p, e.q, sub.p) == 0 \
                and orientation(e.p, e.q, sub.q) == 0:
            return 1 if _dot(d, e.q - e.p).sign() > 0 else -1
    return 0


def interiors_disjoint(A: Polygon, B: Polygon) -> bool:
    """True iff the open interiors of A and B do not meet (touching allowed)."""
    ea, eb = A.edges(), B.edges()
    for s in ea:
        for t in eb:
            if _proper_cross(s, t):
                return False
    for v in A.vertices:
        if point_in_polygon(v, B) is Location.INSIDE:
            return False
    for v in B.vertices:
        if point_in_polygon(v, A) is Location.INSIDE:
            return False
    for P, Q, eq in ((A, B, eb), (B, A, ea)):
        for e in P.edges():
            for sub in _subsegments(e, eq):
                if point_in_polygon(sub.midpoint(), Q) is Location.INSIDE:
                    return False
                # shared edge with both interiors on the same side
                if _same_direction_overlap(sub, eq) > 0:
                    return False
    # no boundary evidence either way: one may still sit inside the other
    if point_in_polygon(A.interior_point(), B) is Location.INSIDE:
        return False
    if point_in_polygon(B.interior_point(), A) is Location.INSIDE:
        return False
    return True


def polygon_contains(outer: Polygon, inner: Polygon) -> bool:
    """True iff inner is a subset of outer (boundary contact allowed)."""
    eo = outer.edges()
    for v in inner.vertices:
        if point_in_polygon(v, outer) is Location.OUTSIDE:
            return False
    for s in inner.edges():
        for t in eo:
            if _proper_cross(s, t):
                return False
        for sub in _subsegments(s, eo):
            loc = point_in_polygon(sub.midpoint(), outer)
            if loc is Location.OUTSIDE:
                return False
            if loc is Location.BOUNDARY and _same_direction_overlap(sub, eo) < 0:
                # interiors on opposite sides of a shared edge
                return False
    return point_in_polygon(inner.interior_point(), outer) is not Location.OUTSIDE


def convex_overlap_area(A: Polygon, B: Polygon) -> Scalar:
    """Exact area of A & B for convex A and B (Sutherland-Hodgman clipping)."""
    if not (A.is_convex() and B.is_convex()):
        raise ValueError("convex_overlap_area needs convex polygons")
    pts = list(A.vertices)
    for e in B.edges():
        if not pts:
            break
        out = []
        n = len(pts)
        for i in range(n):
            cur, nxt = pts[i], pts[(i + 1) % n]
            oc, on = orientation(e.p, e.q, cur), orientation(e.p, e.q, nxt)
            if oc >= 0:
                out.append(cur)
            if oc * on < 0:
                out.append(_line_intersection(Segment(cur, nxt), e))
        pts = out
    if len(pts) < 3:
        return ZERO
    return _signed_area2(pts) / 2


# -- rigid motions -------------------------------------------------------


@dataclass(frozen=True)
class RigidMotion:
    """x -> R(cos, sin) . F . x + (tx, ty), F = reflection in the x-axis if ``reflect``."""

    cos: Scalar = ONE
    sin: Scalar = ZERO
    reflect: bool = False
    tx: Scalar = ZERO
    ty: Scalar = ZERO

    def __post_init__(self):
        for name in ("cos", "sin", "tx", "ty"):
            object.__setattr__(self, name, Scalar.coerce(getattr(self, name)))
        if self.cos * self.cos + self.sin * self.sin != ONE:
            raise ValueError("rotation part must satisfy cos^2 + sin^2 = 1")

    @classmethod
    def identity(cls) -> "RigidMotion":
        return cls()

    @classmethod
    def translation(cls, dx, dy) -> "RigidMotion":
        return cls(tx=Scalar.coerce(dx), ty=Scalar.coerce(dy))

    @classmethod
    def rotation(cls, cos, sin, center: Point | None = None) -> "RigidMotion":
        m = cls(cos=cos, sin=sin)
        if center is None:
            return m
        return cls.translation(center.x, center.y) @ m @ cls.translation(-center.x, -center.y)

    def apply(self, p: Point) -> Point:
        x, y = p.x, (-p.y if self.reflect else p.y)
        return Point(self.cos * x - self.sin * y + self.tx,
                     self.sin * x + self.cos * y + self.ty)

    def __matmul__(self, other: "RigidMotion") -> "RigidMotion":
        """Composition: (self @ other)(p) == self.apply(other.apply(p))."""
        if self.reflect:
            # F R(t) = R(-t) F
            c = self.cos * other.cos + self.sin * other.sin
            s = self.sin * other.cos - self.cos * other.sin
        else:
            c = self.cos * other.cos - self.sin * other.sin
            s = self.sin * other.cos + self.cos * other.sin
        t = self.apply(Point(other.tx, other.ty))
        return RigidMotion(c, s, self.reflect != other.reflect, t.x, t.y)

    def inverse(self) -> "RigidMotion":
        if self.reflect:
            # (R F)^-1 = F R^-1 = R F  -> same linear part
            lin = RigidMotion(self.cos, self.sin, True)
        else:
            lin = RigidMotion(self.cos, -self.sin, False)
        t = lin.apply(Point(self.tx, self.ty))
        return RigidMotion(lin.cos, lin.sin, lin.reflect, -t.x, -t.y)


def apply_motion(m: RigidMotion, P: Polygon) -> Polygon:
    return Polygon([m.apply(v) for v in P.vertices])


def motion_from_points(p1: Point, p2: Point, q1: Point, q2: Point) -> RigidMotion:
    """The orientation-preserving motion taking p1 -> q1 and p2 -> q2."""
    v = p2 - p1
    w = q2 - q1
    n = _dot(v, v)
    if n != _dot(w, w):
        raise ValueError("segments have different lengths; no rigid motion exists")
    c = _dot(v, w) / n
    s = (v.x * w.y - v.y * w.x) / n
    rot = RigidMotion(c, s)
    img = rot.apply(p1)
    return RigidMotion(c, s, False, q1.x - img.x, q1.y - img.y)


# -- lengths -------------------------------------------------------------


def sqrt_decimal(q: Scalar, digits: int) -> str:
    """sqrt(q) for q >= 0, rounded half-up to ``digits`` fractional digits."""
    if q.sign() < 0:
        raise ValueError("square root of a negative value")
    scale = Scalar(10 ** (2 * digits))
    target = q * scale
    guess = isqrt(max(int(float(target)), 0)) if float(target) < 2 ** 1000 else 0
    n = max(guess - 2, 0)
    while (target - (n + 1) ** 2).sign() >= 0:
        n += 1
    while n > 0 and (target - n ** 2).sign() < 0:
        n -= 1
    # round: sqrt(target) >= n + 1/2  <=>  target >= (n + 1/2)^2
    half = Fraction(2 * n + 1, 2)
    if (target - Scalar(half * half)).sign() >= 0:
        n += 1
    s = str(n).rjust(digits + 1, "0")
    return f"{s[:-digits]}.{s[-digits:]}"


def segment_length_decimal(s: Segment, digits: int = 6) -> str:
    return sqrt_decimal(s.squared_length(), digits)
