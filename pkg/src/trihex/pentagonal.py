"""The explicit bone tiling of benzels with pentagonal-pair parameters.

For k >= 2 the (k(3k-1)/2, k(3k+1)/2)-benzel splits into three congruent
sectors bounded by two lattice paths and their rotations; each sector is a
stack of diagonal runs whose lengths are divisible by 3, so it can be
tiled by bones of a single orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import ConstructionFailed, InvalidParams
from .hexlattice import (
    ORIGIN,
    LatticePoint,
    Word,
    rotate120,
    winding_numbers,
    word_from_string,
)
from .regions import BenzelParams, Region, benzel
from .tilings import BONES, Placement, TileKind, Tiling, cells_of


@dataclass(frozen=True)
class SectorPaths:
    """The two paths from the origin to the upper-right corner of the
    bounding hexagon: P1 goes by way of the right corner and P2 by way of
    the upper-left corner."""

    P1: Word
    P2: Word


@dataclass(frozen=True)
class Sector:
    """One third of a pentagonal benzel: the cells between P1 and P2,
    rotated by 120 * rotation degrees."""

    cells: Region
    rotation: int


def pentagonal_benzel(k: int) -> BenzelParams:
    """Parameters (k(3k-1)/2, k(3k+1)/2) of the k-th bone-tileable benzel."""
    if k < 2:
        raise InvalidParams(f"pentagonal construction needs k >= 2, got {k}")
    return BenzelParams(k * (3 * k - 1) // 2, k * (3 * k + 1) // 2)


def sector_paths(k: int) -> SectorPaths:
    """The boundary paths of sector 0.

    P1's spine alternates ever-longer zigzag blocks (a c' a b')^j (a c')
    for j < k, reaching the right corner -a*omega - b*omega^2 = (b, b-a);
    its tail (b a' b c')^s climbs to the upper-right corner.  P2 mirrors
    the pattern through the upper-left corner, with tail exponent t.
    """
    p = pentagonal_benzel(k)
    s = k * (k - 1) // 2
    t = k * (k + 1) // 2
    p1 = []
    p2 = []
    for j in range(k):
        p1 += ["a", "c'", "a", "b'"] * j + ["a", "c'"]
        p2 += ["b", "a'", "b", "c'"] * j + ["b", "a'"]
    spine_end = word_from_string(" ".join(p1)).displacement()
    if spine_end != LatticePoint(p.b, p.b - p.a):
        raise ConstructionFailed(
            f"P1 spine ends at {spine_end}, not the right corner"
        )
    p1 += ["b", "a'", "b", "c'"] * s
    p2 += ["a", "b'", "a", "c'"] * t
    paths = SectorPaths(word_from_string(" ".join(p1)), word_from_string(" ".join(p2)))
    corner = LatticePoint(p.b, p.a)
    if paths.P1.displacement() != corner or paths.P2.displacement() != corner:
        raise ConstructionFailed("sector paths do not meet at the upper-right corner")
    return paths


def _sector0_cells(k: int, region: Region) -> frozenset:
    """Cells of the benzel strictly between P1 and P2 (winding number 1
    under the closed polygon P1 followed by reversed P2)."""
    paths = sector_paths(k)
    reverse = tuple(s.inverse for s in reversed(paths.P2.steps))
    polygon = Word(paths.P1.steps + reverse, ORIGIN)
    wn = winding_numbers(polygon, sorted(region.cells))
    return frozenset(c for c, n in wn.items() if n == 1)


def sector_cells(k: int, r: int) -> Sector:
    """Sector r of the pentagonal benzel; the three sectors partition it."""
    if r not in (0, 1, 2):
        raise InvalidParams(f"rotation index must be 0, 1, or 2, got {r}")
    region = benzel(pentagonal_benzel(k))
    cells = _sector0_cells(k, region)
    for _ in range(r):
        cells = frozenset(rotate120(c) for c in cells)
    return Sector(Region(cells), r)


def _bone_runs(cells: frozenset) -> List[Placement]:
    """Tile a sector-0 cell set with a-b bones: group cells into lines of
    constant x + y (the a-b axis direction), split each line into maximal
    runs of consecutive x, and fill each run left to right.

    Each run's length must be divisible by 3; a remainder means the sector
    geometry is wrong, which is a bug rather than bad input.
    """
    lines: Dict[int, List[int]] = {}
    for c in cells:
        lines.setdefault(c.x + c.y, []).append(c.x)
    out: List[Placement] = []
    for key in sorted(lines):
        xs = sorted(lines[key])
        run_start = prev = xs[0]
        runs: List[Tuple[int, int]] = []
        for x in xs[1:]:
            if x != prev + 1:
                runs.append((run_start, prev))
                run_start = x
            prev = x
        runs.append((run_start, prev))
        for lo, hi in runs:
            length = hi - lo + 1
            if length % 3:
                raise ConstructionFailed(
                    f"run of {length} cells on line x+y={key} is not a"
                    " multiple of 3"
                )
            for x in range(lo, hi + 1, 3):
                out.append(Placement(TileKind.BONE_AB, LatticePoint(x, key - x)))
    return out


def construct_tiling(k: int) -> Tiling:
    """An all-bones tiling of the pentagonal benzel: sector r is filled
    with bones of orientation r (rotating sector 0's placements)."""
    region = benzel(pentagonal_benzel(k))
    sector0 = _sector0_cells(k, region)
    placements: List[Placement] = []
    for p in _bone_runs(sector0):
        cells = list(cells_of(p))
        for r in range(3):
            if r:
                cells = [rotate120(c) for c in cells]
            placements.append(Placement(BONES[r], min(cells)))
    return Tiling(region, tuple(placements))
