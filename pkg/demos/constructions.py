"""
Ruler-only and compass-only constructions
=========================================

The fixed points of the sliding-band family can be reached from the
corners of the square either with a marked ruler alone or with a compass
of two fixed openings.  Both traces replay exactly and land on the same
points.
"""
from trisect.catalog import build, compass_trace, ruler_trace, skeleton_points

ruler = ruler_trace()
compass = compass_trace()
print(f"ruler:   {len(ruler.steps)} steps")
print(f"compass: {len(compass.steps)} steps, radii {sorted(str(r) for r in compass.radii())}")

for name, p in ruler.outputs.items():
    q = compass.outputs[name]
    print(f"  {name:12s} ({p.x}, {p.y})  same: {p == q}")

###############################################################################
# Checking against the dissection
# -------------------------------
# The sliding endpoints move with the parameter, so only the fixed points
# are constructed.

assert set(ruler.outputs.values()) == skeleton_points(build("blanvillain"))
print("traces agree with the dissection's fixed points")
