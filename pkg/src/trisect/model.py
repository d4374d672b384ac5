"""Dissection data model, exact verifier, symmetry order and metrics."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Optional, Sequence

from .geom import (
    Point,
    Polygon,
    RigidMotion,
    Segment,
    apply_motion,
    interiors_disjoint,
    orientation,
    polygon_area,
    polygon_contains,
    square,
)
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "StructuralError",
    "Piece",
    "Dissection",
    "Finding",
    "VerificationReport",
    "Metrics",
    "Comparison",
    "verify",
    "cut_segments",
    "symmetry_order",
    "metrics",
    "compare",
    "total_length_decimal",
    "SQUARE_SYMMETRIES",
]

FAILURE_KINDS = (
    "invalid-polygon",
    "overlap-in-source",
    "piece-outside-source",
    "missing-area",
    "overlap-in-target",
    "piece-outside-target",
)


class StructuralError(ValueError):
    """The dissection breaks its own structural invariants."""


@dataclass(frozen=True)
class Piece:
    id: int
    shape: Polygon
    target_index: int
    placement: RigidMotion = field(default_factory=RigidMotion.identity)

    def placed(self) -> Polygon:
        return apply_motion(self.placement, self.shape)


@dataclass(frozen=True)
class Dissection:
    name: str
    source_side: Scalar
    k: int
    target_side: Scalar
    pieces: tuple[Piece, ...]
    family_parameter: Optional[Scalar] = None

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.k < 1:
            raise StructuralError("k must be positive")
        if self.source_side.sign() <= 0 or self.target_side.sign() <= 0:
            raise StructuralError("sides must be positive")
        if self.target_side * self.target_side * self.k != self.source_side * self.source_side:
            raise StructuralError("k * target_side^2 must equal source_side^2")
        ids = [p.id for p in self.pieces]
        if len(set(ids)) != len(ids):
            raise StructuralError("piece ids must be unique")
        for p in self.pieces:
            if not 0 <= p.target_index < self.k:
                raise StructuralError(f"piece {p.id} has target index {p.target_index} outside [0, {self.k})")

    @property
    def source(self) -> Polygon:
        return square(self.source_side)

    @property
    def target(self) -> Polygon:
        return square(self.target_side)

    @property
    def center(self) -> Point:
        h = self.source_side / 2
        return Point(h, h)


@dataclass(frozen=True)
class Finding:
    kind: str
    pieces: tuple[int, ...]
    target: Optional[int] = None
    # signed area: positive = uncovered, negative = excess coverage
    deficit: Optional[Scalar] = None


@dataclass(frozen=True)
class VerificationReport:
    failures: tuple[Finding, ...]
    uses_reflection: bool

    @property
    def ok(self) -> bool:
        return not self.failures

    def kinds(self) -> set[str]:
        return {f.kind for f in self.failures}


def _float_box(P: Polygon):
    xs = [float(v.x) for v in P.vertices]
    ys = [float(v.y) for v in P.vertices]
    return min(xs), min(ys), max(xs), max(ys)


def _boxes_apart(a, b, eps=1e-9) -> bool:
    # conservative: only skip pairs that are clearly separated
    return a[2] < b[0] - eps or b[2] < a[0] - eps or a[3] < b[1] - eps or b[3] < a[1] - eps


def _check_cover(shapes: Sequence[tuple[int, Polygon]], region: Polygon, overlap_kind: str,
                 outside_kind: str, target: Optional[int]) -> list[Finding]:
    out: list[Finding] = []
    boxes = [_float_box(P) for _, P in shapes]
    for (i, (ia, A)), (j, (ib, B)) in combinations(enumerate(shapes), 2):
        if _boxes_apart(boxes[i], boxes[j]):
            continue
        if not interiors_disjoint(A, B):
            out.append(Finding(overlap_kind, (ia, ib), target))
    for pid, P in shapes:
        if not polygon_contains(region, P):
            out.append(Finding(outside_kind, (pid,), target))
    total = ZERO
    for _, P in shapes:
        total = total + polygon_area(P)
    gap = polygon_area(region) - total
    if not gap.is_zero():
        out.append(Finding("missing-area", tuple(pid for pid, _ in shapes), target, gap))
    return out


def verify(d: Dissection) -> VerificationReport:
    """Certify that the pieces partition the source and each target exactly."""
    failures: list[Finding] = []
    valid = []
    for p in d.pieces:
        if p.shape.is_simple():
            valid.append(p)
        else:
            failures.append(Finding("invalid-polygon", (p.id,)))
    failures += _check_cover([(p.id, p.shape) for p in valid], d.source,
                             "overlap-in-source", "piece-outside-source", None)
    tgt = d.target
    for t in range(d.k):
        placed = [(p.id, p.placed()) for p in valid if p.target_index == t]
        failures += _check_cover(placed, tgt, "overlap-in-target", "piece-outside-target", t)
    return VerificationReport(tuple(failures), any(p.placement.reflect for p in d.pieces))


# -- cut pattern ---------------------------------------------------------


def _on_boundary(s: Segment, side: Scalar) -> bool:
    for a, b in ((s.p.x, s.q.x), (s.p.y, s.q.y)):
        if a == b and (a.is_zero() or a == side):
            return True
    return False


def _key(p: Point):
    return (p.x.coeffs, p.y.coeffs)


def cut_segments(d: Dissection) -> frozenset[tuple[Point, Point]]:
    """Maximal interior cut segments as canonical (lexicographic) endpoint pairs."""
    verts = {v for p in d.pieces for v in p.shape.vertices}
    atoms: set[tuple[Point, Point]] = set()
    for p in d.pieces:
        for e in p.shape.edges():
            if _on_boundary(e, d.source_side):
                continue
            inner = [v for v in verts if v not in (e.p, e.q) and orientation(e.p, e.q, v) == 0
                     and ((v.x - e.p.x) * (v.x - e.q.x) + (v.y - e.p.y) * (v.y - e.q.y)).sign() < 0]
            dx, dy = e.q.x - e.p.x, e.q.y - e.p.y
            chain = sorted([e.p, e.q] + inner,
                           key=lambda v: _SortKey((v.x - e.p.x) * dx + (v.y - e.p.y) * dy))
            for a, b in zip(chain, chain[1:]):
                atoms.add(_canon(a, b))
    return frozenset(_merge(atoms))


class _SortKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return self.v < other.v


def _canon(a: Point, b: Point) -> tuple[Point, Point]:
    s = Segment(a, b).canonical()
    return (s.p, s.q)


def _merge(atoms: set[tuple[Point, Point]]) -> list[tuple[Point, Point]]:
    """Join collinear atoms that meet end to end into maximal segments."""
    atoms = set(atoms)
    merged = []
    while atoms:
        a, b = atoms.pop()
        grown = True
        while grown:
            grown = False
            for other in list(atoms):
                p, q = other
                if orientation(a, b, p) or orientation(a, b, q):
                    continue
                if q == a:
                    a = p
                elif p == b:
                    b = q
                else:
                    continue
                atoms.discard(other)
                grown = True
        merged.append((a, b))
    return merged


# the 8 symmetries of the square as integer matrices acting on p - center
SQUARE_SYMMETRIES = (
    ((1, 0), (0, 1)),
    ((0, -1), (1, 0)),
    ((-1, 0), (0, -1)),
    ((0, 1), (-1, 0)),
    ((1, 0), (0, -1)),
    ((-1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((0, -1), (-1, 0)),
)


def _act(m, p: Point, c: Point) -> Point:
    x, y = p.x - c.x, p.y - c.y
    return Point(c.x + x * m[0][0] + y * m[0][1], c.y + x * m[1][0] + y * m[1][1])


def _image(cuts, m, c):
    return frozenset(_canon(_act(m, a, c), _act(m, b, c)) for a, b in cuts)


def symmetry_group(d: Dissection) -> list:
    cuts = cut_segments(d)
    c = d.center
    return [m for m in SQUARE_SYMMETRIES if _image(cuts, m, c) == cuts]


def symmetry_order(d: Dissection) -> int:
    return len(symmetry_group(d))


# -- metrics -------------------------------------------------------------


def _sqrt_floor(q: Scalar, digits: int) -> int:
    """floor(sqrt(q) * 10**digits), exactly."""
    return isqrt((q * 10 ** (2 * digits)).floor())


def total_length_decimal(squared_lengths: Sequence[Scalar], digits: int = 6) -> str:
    """Correctly rounded decimal of sum(sqrt(q)), refining until rounding is certain."""
    n = len(squared_lengths)
    extra = 12
    while True:
        p = digits + extra
        lo = sum(_sqrt_floor(q, p) for q in squared_lengths)
        hi = lo + n  # each floor is off by less than one unit
        unit = 10 ** extra
        # rounding point: half a unit of the last kept digit
        r_lo = (2 * lo + unit) // (2 * unit)
        r_hi = (2 * hi + unit) // (2 * unit)
        if r_lo == r_hi or n == 0:
            s = str(r_lo).rjust(digits + 1, "0")
            return f"{s[:-digits]}.{s[-digits:]}"
        extra *= 2


@dataclass(frozen=True)
class Metrics:
    piece_count: int
    symmetry_order: int
    all_convex: bool
    total_cut_length: str
    piece_areas: tuple[Scalar, ...]
    equal_areas: bool


def metrics(d: Dissection) -> Metrics:
    areas = tuple(polygon_area(p.shape) for p in d.pieces)
    cuts = cut_segments(d)
    sq = [Segment(a, b).squared_length() for a, b in sorted(cuts, key=_seg_sort)]
    return Metrics(
        piece_count=len(d.pieces),
        symmetry_order=symmetry_order(d),
        all_convex=all(p.shape.is_convex() for p in d.pieces),
        total_cut_length=total_length_decimal(sq),
        piece_areas=areas,
        equal_areas=len(set(areas)) <= 1,
    )


def _seg_sort(s):
    return (float(s[0].x), float(s[0].y), float(s[1].x), float(s[1].y))


@dataclass(frozen=True)
class Comparison:
    piece_count_delta: int
    symmetry_order_delta: int
    cut_length: tuple[str, str]
    convexity: tuple[bool, bool]
    equal_areas: tuple[bool, bool]
    same_cut_pattern: bool

    @property
    def identical(self) -> bool:
        return (self.same_cut_pattern and self.piece_count_delta == 0
                and self.cut_length[0] == self.cut_length[1])


def compare(d1: Dissection, d2: Dissection) -> Comparison:
    """Structured difference, with cut patterns compared up to square symmetry."""
    m1, m2 = metrics(d1), metrics(d2)
    same = False
    if d1.source_side == d2.source_side:
        c1, c2 = cut_segments(d1), cut_segments(d2)
        same = any(_image(c1, m, d1.center) == c2 for m in SQUARE_SYMMETRIES)
    return Comparison(
        piece_count_delta=m2.piece_count - m1.piece_count,
        symmetry_order_delta=m2.symmetry_order - m1.symmetry_order,
        cut_length=(m1.total_cut_length, m2.total_cut_length),
        convexity=(m1.all_convex, m2.all_convex),
        equal_areas=(m1.equal_areas, m2.equal_areas),
        same_cut_pattern=same,
    )
