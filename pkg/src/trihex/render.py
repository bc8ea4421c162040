"""Deterministic SVG rendering of regions, tilings, words, and shadows.

The only place the irrational Cartesian embedding appears: the lattice
point x + y*omega maps to (x - y/2, -y*sqrt(3)/2), the minus sign giving
screen coordinates (y grows downward).  Every element carries a class
attribute (cell / tile / boundary / shadow / hexagon) so output can be
inspected and counted; identical inputs produce byte-identical SVG.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .hexlattice import LatticePoint, Word
from .regions import BenzelParams, Region, bounding_hexagon, cell_corners
from .tilings import TileKind, Tiling, cells_of

_SQRT3_2 = math.sqrt(3.0) / 2.0

_TILE_FILLS: Dict[TileKind, str] = {
    TileKind.BONE_AB: "#9ecae1",
    TileKind.BONE_BC: "#a1d99b",
    TileKind.BONE_CA: "#fdae6b",
    TileKind.STONE_R: "#e9a3c9",
    TileKind.STONE_L: "#c2b2d6",
}


@dataclass(frozen=True)
class RenderSpec:
    """Knobs for the SVG output: scale, palette, and layer toggles."""

    unit: float = 20.0
    margin: float = 10.0
    cell_fill: str = "#f5f0e6"
    cell_stroke: str = "#999999"
    tile_stroke: str = "#222222"
    boundary_stroke: str = "#d62728"
    shadow_stroke: str = "#1f77b4"
    hexagon_stroke: str = "#888888"
    show_cells: bool = True
    show_tiling: bool = True
    show_boundary: bool = True
    show_shadow: bool = True
    show_hexagon: bool = False


def embed(p: LatticePoint, unit: float) -> Tuple[float, float]:
    """Screen coordinates of a lattice point."""
    return (unit * (p.x - p.y / 2.0), unit * (-p.y * _SQRT3_2))


def _fmt(v: float) -> str:
    # Fixed two-decimal formatting keeps the output byte-stable.
    out = f"{v:.2f}"
    return "0.00" if out == "-0.00" else out


def _points_attr(pts: Sequence[Tuple[float, float]]) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)


def _tile_outline(t: Tiling, spec: RenderSpec) -> List[str]:
    """One closed path per placement: the cell edges not shared between
    two cells of the same tile."""
    out = []
    for p in t.placements:
        cells = cells_of(p)
        edges = set()
        for c in cells:
            corners = cell_corners(c)
            for i in range(6):
                e = (corners[i], corners[(i + 1) % 6])
                if (e[1], e[0]) in edges:
                    edges.remove((e[1], e[0]))
                else:
                    edges.add(e)
        succ = {tail: head for tail, head in edges}
        start = min(succ)
        ring = [start]
        v = succ[start]
        while v != start:
            ring.append(v)
            v = succ[v]
        pts = [embed(q, spec.unit) for q in ring]
        fill = _TILE_FILLS[p.kind]
        out.append(
            f'<polygon class="tile" points="{_points_attr(pts)}" '
            f'fill="{fill}" stroke="{spec.tile_stroke}" stroke-width="2" />'
        )
    return out


def render_svg(
    region: Optional[Region] = None,
    tiling: Optional[Tiling] = None,
    boundary: Optional[Word] = None,
    shadow: Optional[Word] = None,
    hexagon: Optional[BenzelParams] = None,
    spec: RenderSpec = RenderSpec(),
) -> str:
    """Compose the requested layers into a standalone SVG document."""
    elements: List[str] = []
    points: List[Tuple[float, float]] = []

    if tiling is not None and region is None:
        region = tiling.region

    if hexagon is not None and spec.show_hexagon:
        pts = [embed(q, spec.unit) for q in bounding_hexagon(hexagon)]
        points += pts
        elements.append(
            f'<polygon class="hexagon" points="{_points_attr(pts)}" '
            f'fill="none" stroke="{spec.hexagon_stroke}" stroke-width="1" '
            'stroke-dasharray="4 3" />'
        )

    if region is not None and spec.show_cells:
        for c in region.sorted_cells():
            pts = [embed(q, spec.unit) for q in cell_corners(c)]
            points += pts
            elements.append(
                f'<polygon class="cell" points="{_points_attr(pts)}" '
                f'fill="{spec.cell_fill}" stroke="{spec.cell_stroke}" '
                'stroke-width="1" />'
            )

    if tiling is not None and spec.show_tiling:
        tiles = _tile_outline(tiling, spec)
        for el in tiles:
            elements.append(el)
        for c in tiling.region.sorted_cells():
            points += [embed(q, spec.unit) for q in cell_corners(c)]

    for word, cls, stroke, show in (
        (boundary, "boundary", spec.boundary_stroke, spec.show_boundary),
        (shadow, "shadow", spec.shadow_stroke, spec.show_shadow),
    ):
        if word is None or not show:
            continue
        pts = [embed(q, spec.unit) for q in word.vertices()]
        points += pts
        elements.append(
            f'<polyline class="{cls}" points="{_points_attr(pts)}" '
            f'fill="none" stroke="{stroke}" stroke-width="2.5" '
            'stroke-linejoin="round" />'
        )

    if not points:
        points = [(0.0, 0.0)]
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    x0, y0 = min(xs) - spec.margin, min(ys) - spec.margin
    w = max(xs) - min(xs) + 2 * spec.margin
    h = max(ys) - min(ys) + 2 * spec.margin
    header = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" '
        f'width="{_fmt(w)}" height="{_fmt(h)}">'
    )
    return "\n".join([header] + elements + ["</svg>"]) + "\n"
