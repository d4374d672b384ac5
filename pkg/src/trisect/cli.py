"""``trisect`` command line: JSON interchange and SVG rendering.

Exit codes: 0 ok, 1 verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import catalog
from .geom import InvalidPolygon, Point, Polygon, RigidMotion
from .model import (
    Dissection,
    Metrics,
    Piece,
    StructuralError,
    VerificationReport,
    metrics,
    verify,
)
from .scalar import Scalar

DEFAULT_PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
)
DEFECT_STROKE = "#d40000"


class ParseError(ValueError):
    """Malformed interchange JSON; ``path`` points at the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message

    def to_json(self) -> dict:
        return {"error": "parse-error", "path": self.path, "message": self.message}


# -- JSON ------------------------------------------------------------------


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def scalar_to_json(s: Scalar) -> dict:
    return {k: _frac_str(v) for k, v in zip("abcd", s.coeffs)}


def _parse_frac(text: Any, path: str) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(path, "expected a string 'p/q'")
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ParseError(path, f"not a rational: {text!r}") from None
    if d == 0:
        raise ParseError(path, f"zero denominator in {text!r}")
    return Fraction(n, d)


def scalar_from_json(obj: Any, path: str = "$") -> Scalar:
    if not isinstance(obj, dict) or set(obj) != set("abcd"):
        raise ParseError(path, "expected an object with keys a, b, c, d")
    return Scalar(*(_parse_frac(obj[k], f"{path}.{k}") for k in "abcd"))


def _point_to_json(p: Point) -> list:
    return [scalar_to_json(p.x), scalar_to_json(p.y)]


def _point_from_json(obj: Any, path: str) -> Point:
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError(path, "expected [x, y]")
    return Point(scalar_from_json(obj[0], f"{path}[0]"), scalar_from_json(obj[1], f"{path}[1]"))


def motion_to_json(m: RigidMotion) -> dict:
    return {
        "cos": scalar_to_json(m.cos),
        "sin": scalar_to_json(m.sin),
        "reflect": m.reflect,
        "tx": scalar_to_json(m.tx),
        "ty": scalar_to_json(m.ty),
    }


def motion_from_json(obj: Any, path: str) -> RigidMotion:
    if not isinstance(obj, dict):
        raise ParseError(path, "expected a motion object")
    for key in ("cos", "sin", "reflect", "tx", "ty"):
        if key not in obj:
            raise ParseError(f"{path}.{key}", "missing")
    if not isinstance(obj["reflect"], bool):
        raise ParseError(f"{path}.reflect", "expected true or false")
    vals = {k: scalar_from_json(obj[k], f"{path}.{k}") for k in ("cos", "sin", "tx", "ty")}
    try:
        return RigidMotion(vals["cos"], vals["sin"], obj["reflect"], vals["tx"], vals["ty"])
    except ValueError as e:
        raise ParseError(path, str(e)) from None


def dissection_to_json(d: Dissection) -> dict:
    return {
        "name": d.name,
        "k": d.k,
        "source_side": scalar_to_json(d.source_side),
        "target_side": scalar_to_json(d.target_side),
        "family_parameter": None if d.family_parameter is None else scalar_to_json(d.family_parameter),
        "pieces": [
            {
                "id": p.id,
                "target_index": p.target_index,
                "vertices": [_point_to_json(v) for v in p.shape.vertices],
                "placement": motion_to_json(p.placement),
            }
            for p in d.pieces
        ],
    }


def dissection_from_json(obj: Any) -> Dissection:
    if not isinstance(obj, dict):
        raise ParseError("$", "expected an object")
    for key in ("name", "k", "source_side", "target_side", "pieces"):
        if key not in obj:
            raise ParseError(f"$.{key}", "missing")
    if not isinstance(obj["name"], str):
        raise ParseError("$.name", "expected a string")
    if not isinstance(obj["k"], int) or isinstance(obj["k"], bool):
        raise ParseError("$.k", "expected an integer")
    if not isinstance(obj["pieces"], list):
        raise ParseError("$.pieces", "expected a list")
    fam = obj.get("family_parameter")
    pieces = []
    for i, po in enumerate(obj["pieces"]):
        path = f"$.pieces[{i}]"
        if not isinstance(po, dict):
            raise ParseError(path, "expected an object")
        for key in ("id", "target_index", "vertices", "placement"):
            if key not in po:
                raise ParseError(f"{path}.{key}", "missing")
        if not isinstance(po["vertices"], list):
            raise ParseError(f"{path}.vertices", "expected a list")
        verts = [_point_from_json(v, f"{path}.vertices[{j}]") for j, v in enumerate(po["vertices"])]
        try:
            shape = Polygon(verts)
        except InvalidPolygon as e:
            raise ParseError(f"{path}.vertices", str(e)) from None
        for key in ("id", "target_index"):
            if not isinstance(po[key], int) or isinstance(po[key], bool):
                raise ParseError(f"{path}.{key}", "expected an integer")
        pieces.append(Piece(po["id"], shape, po["target_index"],
                            motion_from_json(po["placement"], f"{path}.placement")))
    try:
        return Dissection(
            obj["name"],
            scalar_from_json(obj["source_side"], "$.source_side"),
            obj["k"],
            scalar_from_json(obj["target_side"], "$.target_side"),
            tuple(pieces),
            None if fam is None else scalar_from_json(fam, "$.family_parameter"),
        )
    except StructuralError as e:
        raise ParseError("$", str(e)) from None


def report_to_json(d: Dissection, r: VerificationReport) -> dict:
    out: dict = {
        "name": d.name,
        "ok": r.ok,
        "uses_reflection": r.uses_reflection,
        "failures": [
            {
                "kind": f.kind,
                "pieces": list(f.pieces),
                "target": f.target,
                "deficit": None if f.deficit is None else scalar_to_json(f.deficit),
            }
            for f in r.failures
        ],
    }
    if d.name == "wrong-artisan":
        covered, gap = catalog.diagonal_defect(d)
        out["diagonal"] = {
            "covered": scalar_to_json(covered),
            "gap": scalar_to_json(gap),
            "gap_decimal": gap.to_decimal(6),
            "gap_per_side_decimal": (gap / 2).to_decimal(6),
        }
    return out


def metrics_to_json(d: Dissection, m: Metrics) -> dict:
    return {
        "name": d.name,
        "piece_count": m.piece_count,
        "symmetry_order": m.symmetry_order,
        "all_convex": m.all_convex,
        "total_cut_length": m.total_cut_length,
        "piece_areas": [scalar_to_json(a) for a in m.piece_areas],
        "equal_areas": m.equal_areas,
    }


def trace_to_json(t: "catalog.ConstructionTrace") -> dict:
    return {
        "steps": [
            {
                "kind": s.kind,
                "operands": list(s.operands),
                "selector": None if s.selector is None else {"line": list(s.selector[0]), "side": s.selector[1]},
                "result_name": s.result_name,
                **({} if s.value is None else {"value": scalar_to_json(s.value)}),
            }
            for s in t.steps
        ],
        "outputs": {name: _point_to_json(p) for name, p in sorted(t.outputs.items())},
    }


# -- SVG -------------------------------------------------------------------


def palette() -> tuple[str, ...]:
    env = os.environ.get("TRISECT_PALETTE", "").strip()
    if env:
        cols = tuple(c.strip() for c in env.split(",") if c.strip())
        if cols:
            return cols
    return DEFAULT_PALETTE


def _num(v: Scalar, digits: int) -> str:
    return v.to_decimal(digits)


def render_svg(d: Dissection, scale: int = 240, digits: int = 9,
               colors: Optional[Sequence[str]] = None) -> str:
    """Source square and the k targets side by side, pieces colour-matched."""
    cols = tuple(colors) if colors else palette()
    gap = Scalar(Fraction(1, 4))
    margin = Scalar(Fraction(1, 8))
    offsets = [margin]
    x = margin + d.source_side + gap
    for _ in range(d.k):
        offsets.append(x)
        x = x + d.target_side + gap
    width = x - gap + margin
    height = d.source_side + 2 * margin

    def xy(p: Point, dx: Scalar) -> str:
        px = (p.x + dx) * scale
        py = (height - margin - p.y) * scale
        return f"{_num(px, digits)},{_num(py, digits)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width * scale, digits)}" '
        f'height="{_num(height * scale, digits)}">',
        f'<title>{d.name}</title>',
    ]
    panels = [(d.source_side, offsets[0], "source")] + [
        (d.target_side, offsets[i + 1], f"target-{i}") for i in range(d.k)]
    for side, dx, label in panels:
        frame = [Point(Scalar(0), Scalar(0)), Point(side, Scalar(0)), Point(side, side), Point(Scalar(0), side)]
        pts = " ".join(xy(p, dx) for p in frame)
        lines.append(f'<polygon class="frame" id="{label}" points="{pts}" fill="none" stroke="#000000" stroke-width="2"/>')
    for p in d.pieces:
        color = cols[p.id % len(cols)]
        for poly, dx, cls in ((p.shape, offsets[0], "source"), (p.placed(), offsets[p.target_index + 1], "target")):
            pts = " ".join(xy(v, dx) for v in poly.vertices)
            lines.append(
                f'<polygon class="piece {cls}" data-piece="{p.id}" points="{pts}" '
                f'fill="{color}" fill-opacity="0.8" stroke="#202020" stroke-width="1"/>')
    if d.name == "wrong-artisan":
        for a, b in catalog.diagonal_gaps(d):
            lines.append(
                f'<polyline class="defect" points="{xy(a, offsets[0])} {xy(b, offsets[0])}" '
                f'fill="none" stroke="{DEFECT_STROKE}" stroke-width="6"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------


def _param(text: Optional[str]) -> Optional[Scalar]:
    if text is None:
        return None
    return Scalar(_parse_frac(text, "--param"))


def _emit(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _build(args) -> Dissection:
    return catalog.build(args.name, _param(getattr(args, "param", None)))


def cmd_list(args) -> int:
    for name in catalog.NAMES:
        d = catalog.build(name)
        print(f"{name} {len(d.pieces)} k={d.k}")
    return 0


def cmd_verify(args) -> int:
    d = _build(args)
    r = verify(d)
    _emit(report_to_json(d, r))
    return 0 if r.ok else 1


def cmd_metrics(args) -> int:
    d = _build(args)
    _emit(metrics_to_json(d, metrics(d)))
    return 0


def cmd_render(args) -> int:
    d = _build(args)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_svg(d))
    return 0


def cmd_export(args) -> int:
    d = _build(args)
    text = json.dumps(dissection_to_json(d), indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_import(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError("$", f"invalid JSON: {e.msg}") from None
    d = dissection_from_json(obj)
    r = verify(d)
    _emit(report_to_json(d, r))
    return 0 if r.ok else 1


def cmd_trace(args) -> int:
    t = catalog.ruler_trace() if args.kind == "ruler" else catalog.compass_trace()
    _emit(trace_to_json(t))
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trisect", description="Exact square trisection dissections.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="catalog names, piece counts and k").set_defaults(func=cmd_list)
    for name, func, help_ in (("verify", cmd_verify, "exact verification report"),
                              ("metrics", cmd_metrics, "piece count, symmetry, cut length, areas")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("name")
        p.add_argument("--param", metavar="p/q")
        p.set_defaults(func=func)
    p = sub.add_parser("render", help="SVG of the source and the assembled targets")
    p.add_argument("name")
    p.add_argument("--param", metavar="p/q")
    p.add_argument("-o", "--output", required=True, metavar="FILE")
    p.set_defaults(func=cmd_render)
    p = sub.add_parser("export", help="dissection as exact JSON")
    p.add_argument("name")
    p.add_argument("--param", metavar="p/q")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_export)
    p = sub.add_parser("import", help="read exported JSON and verify it")
    p.add_argument("file")
    p.set_defaults(func=cmd_import)
    p = sub.add_parser("trace", help="ruler-only or compass-only construction")
    p.add_argument("kind", choices=("ruler", "compass"))
    p.set_defaults(func=cmd_trace)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        _emit(e.to_json())
        return 2
    except (KeyError, ValueError) as e:
        msg = e.args[0] if e.args else str(e)
        sys.stderr.write(f"trisect: {msg}\n")
        return 2
    except OSError as e:
        sys.stderr.write(f"trisect: {e}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
