"""Deterministic SVG rendering of patches.

Generic-alpha patches are drawn at the reference value 99 degrees; output
bytes depend only on the patch and style.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .patch import Patch


def _default_palette() -> dict[str, str]:
    return {"T": "#f5f0e6", "S": "#7fb3d5"}


@dataclass(frozen=True)
class RenderStyle:
    scale: float = 60.0  # pixels per unit edge
    palette: dict = field(default_factory=_default_palette)
    stroke_width: float = 1.0
    stroke: str = "#333333"
    margin: float = 0.6  # in edge units
    label_vertices: bool = False

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(patch: Patch, style: RenderStyle = RenderStyle()) -> str:
    rad = patch.alpha.eval_radians()
    polys = []
    xs, ys = [0.0], [0.0]
    for t in patch.tiles:
        pts = t.corner_xy(rad)
        polys.append((t.kind, pts))
        xs.extend(p[0] for p in pts)
        ys.extend(p[1] for p in pts)
    m = style.margin
    x0, x1 = min(xs) - m, max(xs) + m
    y0, y1 = min(ys) - m, max(ys) + m
    s = style.scale
    w, h = (x1 - x0) * s, (y1 - y0) * s

    def to_px(x: float, y: float) -> tuple[float, float]:
        # flip y so the mathematical orientation is upright on screen
        return ((x - x0) * s, (y1 - y) * s)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(w)}" height="{_fmt(h)}" '
        f'viewBox="0 0 {_fmt(w)} {_fmt(h)}">',
        f'<g stroke="{style.stroke}" '
        f'stroke-width="{_fmt(style.stroke_width)}" '
        'stroke-linejoin="round">',
    ]
    for kind, pts in polys:
        coords = " ".join(
            f"{_fmt(px)},{_fmt(py)}" for px, py in (to_px(x, y) for x, y in pts)
        )
        fill = style.palette.get(kind, "#cccccc")
        out.append(f'<polygon points="{coords}" fill="{fill}"/>')
    out.append("</g>")
    if style.label_vertices:
        out.append('<g font-size="10" text-anchor="middle" stroke="none">')
        for vid in patch.vertex_ids():
            word = patch.interior_word(vid)
            if word is None:
                continue
            px, py = to_px(*patch.vertex_xy(vid))
            out.append(
                f'<text x="{_fmt(px)}" y="{_fmt(py)}">{word}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
