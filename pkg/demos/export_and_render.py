"""
Exporting, importing and drawing
================================

Dissections travel as JSON with every coordinate kept as exact rational
coefficients over 1, sqrt2, sqrt3 and sqrt6.  The same data renders to SVG.
"""
import json
import os
import tempfile

from trisect.catalog import build
from trisect.cli import dissection_from_json, dissection_to_json, render_svg
from trisect.model import verify

d = build("perigal")
doc = dissection_to_json(d)
print(json.dumps(doc["pieces"][0]["vertices"][:2]))

back = dissection_from_json(json.loads(json.dumps(doc)))
print(f"round trip equal: {back == d}, verifies: {verify(back).ok}")

out = os.path.join(tempfile.gettempdir(), "perigal.svg")
with open(out, "w", encoding="utf-8") as fh:
    fh.write(render_svg(d))
print(f"wrote {out}")
