"""
The artisans' square that almost closes
=======================================

Three unit squares rearranged into one big square by the recipe of the
workshop: one square in the middle turned on its corner, one halved on
its diagonal, one cut into a triangle and two trapezoids.  The pieces look
right, but the exact verifier finds where they fail to meet.
"""
from trisect.catalog import build, diagonal_defect, diagonal_gaps, wrong_gap
from trisect.model import verify

d = build("wrong-artisan")
report = verify(d)
print(f"{d.name}: ok = {report.ok}")
for f in report.failures:
    print(f"  {f.kind} between pieces {f.pieces}")

###############################################################################
# Measuring the defect
# --------------------
# Along the diagonal from the bottom-right to the top-left corner, the pieces
# cover a little less than the full length.  The shortfall is an exact
# element of Q(sqrt2, sqrt3).

covered, gap = diagonal_defect(d)
print(f"diagonal covered: {covered}  ({covered.to_decimal(6)})")
print(f"uncovered:        {gap}  ({gap.to_decimal(6)})")
assert gap == wrong_gap()
print(f"per side: {(gap / 2).to_decimal(6)}")

for a, b in diagonal_gaps(d):
    print(f"  gap from ({a.x.to_decimal(4)}, {a.y.to_decimal(4)}) to ({b.x.to_decimal(4)}, {b.y.to_decimal(4)})")
