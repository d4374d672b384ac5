from fractions import Fraction

import pytest

from trisect.geom import Polygon, RigidMotion, pt, square
from trisect.model import (
    Dissection, Piece, StructuralError, compare, cut_segments, metrics, symmetry_order,
    total_length_decimal, verify,
)
from trisect.scalar import ONE, SQRT2, Scalar

TWO = Scalar(2)


def quarters(shift=ONE) -> Dissection:
    """Side-2 square cut into four unit squares, each sent to its own target."""
    pieces = []
    for i, (x, y) in enumerate(((0, 0), (1, 0), (0, 1), (1, 1))):
        move = RigidMotion.translation(-x, -y)
        if i == 3:
            move = RigidMotion.translation(-x * shift, -y)
        pieces.append(Piece(i, square(1, pt(x, y)), i, move))
    return Dissection("quarters", TWO, 4, ONE, tuple(pieces))


def test_quarters_verify():
    r = verify(quarters())
    assert r.ok
    assert not r.uses_reflection


def test_misplaced_piece_is_reported():
    r = verify(quarters(shift=Scalar(Fraction(1, 2))))
    assert not r.ok
    # area still balances, so only containment fails
    assert r.kinds() == {"piece-outside-target"}
    assert all(f.target == 3 for f in r.failures)


def test_missing_area_has_signed_deficit():
    d = quarters()
    d = Dissection("three", TWO, 4, ONE, d.pieces[:3])
    r = verify(d)
    gaps = [f for f in r.failures if f.kind == "missing-area"]
    assert gaps[0].target is None and gaps[0].deficit == 1
    assert [f.target for f in gaps[1:]] == [3]


def test_overlap_in_source():
    big = Piece(9, square(TWO), 0, RigidMotion.identity())
    d = quarters()
    d = Dissection("extra", TWO, 4, ONE, d.pieces + (big,))
    assert "overlap-in-source" in verify(d).kinds()


def test_invalid_piece():
    bowtie = Polygon([pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)])
    d = Dissection("bad", TWO, 4, ONE, (Piece(0, bowtie, 0),))
    assert "invalid-polygon" in verify(d).kinds()


@pytest.mark.parametrize("kwargs", [
    dict(k=3),                        # 3 * 1 != 4
    dict(k=0),
    dict(target_side=-ONE, k=4),
])
def test_structural_errors(kwargs):
    args = dict(name="x", source_side=TWO, k=4, target_side=ONE, pieces=())
    args.update(kwargs)
    with pytest.raises(StructuralError):
        Dissection(**args)


def test_duplicate_ids_and_bad_target():
    unit = square(1)
    with pytest.raises(StructuralError):
        Dissection("x", TWO, 4, ONE, (Piece(0, unit, 0), Piece(0, unit, 1)))
    with pytest.raises(StructuralError):
        Dissection("x", TWO, 4, ONE, (Piece(0, unit, 4),))


def test_cut_segments_are_maximal():
    cuts = cut_segments(quarters())
    assert cuts == {(pt(0, 1), pt(2, 1)), (pt(1, 0), pt(1, 2))}


def test_metrics():
    m = metrics(quarters())
    assert m.piece_count == 4
    assert m.symmetry_order == 8
    assert m.all_convex and m.equal_areas
    assert m.total_cut_length == "4.000000"


def test_total_length_rounding():
    # sqrt2 + sqrt2 = 2.8284271...
    assert total_length_decimal([TWO, TWO]) == "2.828427"
    assert total_length_decimal([SQRT2 * 0 + 1], 2) == "1.00"
    assert total_length_decimal([]) == "0.000000"


def test_symmetry_of_one_cut():
    half = Dissection("halves", TWO, 2, SQRT2, (
        Piece(0, Polygon([pt(0, 0), pt(2, 0), pt(2, 1), pt(0, 1)]), 0),
        Piece(1, Polygon([pt(0, 1), pt(2, 1), pt(2, 2), pt(0, 2)]), 1),
    ))
    # one horizontal midline: identity, half turn, both mirrors through it
    assert symmetry_order(half) == 4


def test_compare():
    a = quarters()
    c = compare(a, a)
    assert c.identical and c.same_cut_pattern
    assert c.piece_count_delta == 0
