"""
A tour of the catalog
=====================

Builds every dissection, verifies it exactly and prints the comparison
metrics side by side.  Nothing here uses floating point for a decision:
floats only appear in the printed cut lengths.
"""
from trisect.catalog import NAMES, build
from trisect.model import metrics, verify

print(f"{'name':20s} {'ok':>5s} {'pieces':>6s} {'sym':>4s} {'convex':>6s} {'equal':>6s} {'cut length':>11s}")
for name in NAMES:
    d = build(name)
    m = metrics(d)
    print(f"{name:20s} {str(verify(d).ok):>5s} {m.piece_count:6d} {m.symmetry_order:4d} "
          f"{str(m.all_convex):>6s} {str(m.equal_areas):>6s} {m.total_cut_length:>11s}")

###############################################################################
# Looking at one of them
# ----------------------
# Each piece records its shape in the source square and the rigid motion
# that carries it into its target square.

d = build("abul-wafa")
for p in d.pieces[:3]:
    m = p.placement
    print(f"piece {p.id} -> target {p.target_index}: cos {m.cos}, sin {m.sin}, shift ({m.tx}, {m.ty})")
