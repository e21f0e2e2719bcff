"""Deterministic text and SVG pictures of paths.

RSOS pictures shade dark bands and mark scoring vertices (`o` up, `*`
down, `+` non-scoring); half-lattice pictures use the doubled grid and can
overlay particle baselines for paths that start and end at height 1.
"""

from __future__ import annotations

from . import rsos as rs
from .halfpath import HalfPath
from .rsos import RsosPath


def rsos_ascii(path: RsosPath) -> str:
    top = path.p_prime - 1
    width = 2 * path.horizon + 1
    rows = 2 * top - 1
    grid = [[" "] * width for _ in range(rows)]
    dark = rs.dark_floors(path.p, path.p_prime)

    for y in range(1, top):
        if y in dark:
            r = 2 * (top - y) - 1
            for c in range(width):
                grid[r][c] = "."
    marks = {v.x: ("o" if v.up else "*") if v.scoring else "+"
             for v in rs.classify(path)}
    for x in range(path.horizon + 1):
        h = path.height(x)
        grid[2 * (top - h)][2 * x] = marks.get(x, "+")
        if x < path.horizon:
            nh = path.height(x + 1)
            r = 2 * (top - max(h, nh)) + 1
            grid[r][2 * x + 1] = "/" if nh > h else "\\"

    lines = []
    for r, row in enumerate(grid):
        label = f"{top - r // 2:2d} " if r % 2 == 0 else "   "
        lines.append(label + "".join(row).rstrip())
    return "\n".join(lines)


def half_ascii(path: HalfPath, baselines: bool = False) -> str:
    top = path.t2
    width = 2 * path.horizon + 1
    rows = top - 1
    grid = [[" "] * width for _ in range(rows)]

    spans = []
    if baselines:
        from .particles import dissect

        spans = [(p.base_h, p.origin, p.origin + p.length)
                 for p in dissect(path).particles]
    for base_h, lo, hi in spans:
        r = top - base_h
        for c in range(2 * lo, 2 * hi + 1):
            if 0 <= c < width:
                grid[r][c] = "="

    for i in range(path.horizon + 1):
        h = path.height(i)
        grid[top - h][2 * i] = "+"
        if i < path.horizon:
            nh = path.height(i + 1)
            grid[top - max(h, nh)][2 * i + 1] = "/" if nh > h else "\\"

    lines = []
    for r, row in enumerate(grid):
        h2 = top - r
        label = f"{h2 // 2:2d} " if h2 % 2 == 0 else "   "
        lines.append(label + "".join(row).rstrip())
    return "\n".join(lines)


_SVG_HEAD = (
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
)
_UNIT = 16


def rsos_svg(path: RsosPath) -> str:
    top = path.p_prime - 1
    u = _UNIT
    w = (path.horizon + 2) * u
    h = (top + 1) * u

    def xy(x: int, y: int) -> tuple[int, int]:
        return ((x + 1) * u, (top - y + 1) * u)

    parts = [_SVG_HEAD.format(w=w, h=h)]
    for y in sorted(rs.dark_floors(path.p, path.p_prime)):
        x0, y1 = xy(0, y + 1)
        parts.append(
            f'<rect x="{x0}" y="{y1}" width="{path.horizon * u}" height="{u}" '
            'fill="#d8d8d8"/>'
        )
    pts = " ".join(
        "%d,%d" % xy(x, path.height(x)) for x in range(path.horizon + 1)
    )
    parts.append(f'<polyline points="{pts}" fill="none" stroke="black"/>')
    for v in rs.classify(path):
        if not v.scoring:
            continue
        cx, cy = xy(v.x, path.height(v.x))
        fill = "white" if v.up else "black"
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="{fill}" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def half_svg(path: HalfPath, baselines: bool = False) -> str:
    top = path.t2
    u = _UNIT
    w = (path.horizon + 2) * u
    h = (top + 1) * u

    def xy(i: int, h2: int) -> tuple[int, int]:
        return ((i + 1) * u, (top - h2 + 1) * u)

    parts = [_SVG_HEAD.format(w=w, h=h)]
    pts = " ".join(
        "%d,%d" % xy(i, path.height(i)) for i in range(path.horizon + 1)
    )
    parts.append(f'<polyline points="{pts}" fill="none" stroke="black"/>')
    if baselines:
        from .particles import dissect

        for p in dissect(path).particles:
            (x0, y0) = xy(p.origin, p.base_h)
            (x1, _) = xy(p.origin + p.length, p.base_h)
            parts.append(
                f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" '
                'stroke="gray" stroke-dasharray="3 2"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
