"""
A family of trisections with one free parameter
===============================================

Two parallel cuts at 30 degrees bound a band across the square.  Sliding
the inner cut along the band changes the pieces but never breaks the
dissection.  One position makes all six pieces the same area.
"""
from fractions import Fraction

from trisect.catalog import blanvillain_equal_area, blanvillain_range, build_blanvillain
from trisect.geom import polygon_area
from trisect.model import compare, metrics, verify
from trisect.scalar import Scalar

lo, hi = blanvillain_range()
print(f"valid parameters: {lo.to_decimal(6)} < t < {hi.to_decimal(6)} (open interval)")

for t in (Scalar(Fraction(3, 10)), Scalar(Fraction(2, 5)), Scalar(Fraction(1, 2)), Scalar(Fraction(3, 5))):
    d = build_blanvillain(t)
    areas = ", ".join(str(polygon_area(p.shape)) for p in d.pieces[:3])
    print(f"t = {t}: ok = {verify(d).ok}, first three areas: {areas}")

###############################################################################
# The equal-area member
# ---------------------
# The area of each piece is affine in t, so the equal-area position is the
# solution of a linear equation and lands back in the field.

t = blanvillain_equal_area()
m = metrics(build_blanvillain(t))
print(f"t* = {t} ~ {t.to_decimal(6)}")
print(f"areas: {[str(a) for a in m.piece_areas]}, equal = {m.equal_areas}")
print(f"symmetry order {m.symmetry_order}, total cut length {m.total_cut_length}")

###############################################################################
# Different members are different dissections
# -------------------------------------------
# Even up to the symmetries of the square, the cut patterns differ.

c = compare(build_blanvillain(Scalar(Fraction(2, 5))), build_blanvillain(Scalar(Fraction(1, 2))))
print(f"same cut pattern: {c.same_cut_pattern}, cut lengths {c.cut_length}")
