"""Prototile placements, tiling validation, enumeration, and exact counting.

The tileset consists of the three bone orientations (three cells with
collinear centers) and the two stone chiralities (three pairwise-adjacent
cells).  Counting uses a memoized frontier search over a fixed sweep order
so that 19-digit counts stay exact; enumeration is a separate plain
backtracking engine sharing the same placement table.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import FormatError, InvalidPlacement, InvalidTiling, ResourceLimit
from .hexlattice import LatticePoint, class_of
from .regions import Region, region_from_json, region_to_json


class TileKind(Enum):
    """The five prototiles: bones along each lattice axis and the two stone
    chiralities.  StoneR is the chirality whose boundary shadow encloses
    area +3; StoneL encloses -3."""

    BONE_AB = "boneAB"
    BONE_BC = "boneBC"
    BONE_CA = "boneCA"
    STONE_R = "stoneR"
    STONE_L = "stoneL"

    @property
    def is_stone(self) -> bool:
        return self in (TileKind.STONE_R, TileKind.STONE_L)


# Offsets from the anchor (the lexicographically smallest covered cell).
# Bone axes are the center-difference directions 1 - w = (1,-1),
# w - w^2 = (1,2), and w^2 - 1 = (-2,-1) re-anchored; the stone chirality
# labels are pinned by the shadow-area criterion (+3 for StoneR).
TILE_OFFSETS: Dict[TileKind, Tuple[LatticePoint, ...]] = {
    TileKind.BONE_AB: (LatticePoint(0, 0), LatticePoint(1, -1), LatticePoint(2, -2)),
    TileKind.BONE_BC: (LatticePoint(0, 0), LatticePoint(1, 2), LatticePoint(2, 4)),
    TileKind.BONE_CA: (LatticePoint(0, 0), LatticePoint(2, 1), LatticePoint(4, 2)),
    TileKind.STONE_R: (LatticePoint(0, 0), LatticePoint(1, 2), LatticePoint(2, 1)),
    TileKind.STONE_L: (LatticePoint(0, 0), LatticePoint(1, -1), LatticePoint(2, 1)),
}

BONES = (TileKind.BONE_AB, TileKind.BONE_BC, TileKind.BONE_CA)
STONES = (TileKind.STONE_R, TileKind.STONE_L)
STONES_AND_BONES = BONES + STONES


_KIND_INDEX = {k: i for i, k in enumerate(TileKind)}


@dataclass(frozen=True)
class Placement:
    """A prototile dropped on the lattice, named by kind and anchor cell."""

    kind: TileKind
    anchor: LatticePoint

    def __post_init__(self) -> None:
        if class_of(self.anchor) != -1:
            raise InvalidPlacement(
                f"anchor {self.anchor} has class {class_of(self.anchor)}, not -1"
            )

    def __lt__(self, other: "Placement") -> bool:
        # Kinds sort in declaration order (bones before stones).
        return _placement_key(self) < _placement_key(other)


def _placement_key(p: Placement) -> Tuple[int, LatticePoint]:
    return (_KIND_INDEX[p.kind], p.anchor)


def cells_of(p: Placement) -> Tuple[LatticePoint, LatticePoint, LatticePoint]:
    """The three cells covered by a placement."""
    o = TILE_OFFSETS[p.kind]
    return (p.anchor + o[0], p.anchor + o[1], p.anchor + o[2])


@dataclass(frozen=True)
class Tiling:
    """A region together with placements intended to partition it."""

    region: Region
    placements: Tuple[Placement, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "placements", tuple(sorted(self.placements, key=_placement_key))
        )


def placements(r: Region, tileset: Sequence[TileKind]) -> List[Placement]:
    """All placements of the given kinds lying entirely inside r, in
    deterministic (kind, anchor) order."""
    cells = set(r.cells)
    kinds = sorted(set(tileset), key=_KIND_INDEX.__getitem__)
    out: List[Placement] = []
    for kind in kinds:
        offs = TILE_OFFSETS[kind]
        for anchor in sorted(cells):
            if all(anchor + o in cells for o in offs):
                out.append(Placement(kind, anchor))
    return out


def validate(t: Tiling) -> bool:
    """True iff the placements partition the region's cells exactly."""
    return validation_error(t) is None


def validation_error(t: Tiling) -> Optional[str]:
    """None if t validates, else a diagnostic for the first violation."""
    region_cells = set(t.region.cells)
    covered: set = set()
    for p in t.placements:
        for c in cells_of(p):
            if c not in region_cells:
                return f"{p.kind.value} at {p.anchor} spills outside the region at {c}"
            if c in covered:
                return f"cell {c} covered twice ({p.kind.value} at {p.anchor})"
            covered.add(c)
    if covered != region_cells:
        missing = min(region_cells - covered)
        return f"cell {missing} is uncovered"
    return None


class _PlacementTable:
    """Shared precomputation for the two engines: cells in sweep order, and
    placements bucketed by their first (lowest-index) covered cell."""

    def __init__(self, r: Region, tileset: Sequence[TileKind]):
        # Sweep along the x - y direction: tile index spans stay small on
        # benzels, which bounds the memo window.
        self.order = sorted(r.cells, key=lambda c: (c.x - c.y, c.x))
        self.index = {c: i for i, c in enumerate(self.order)}
        self.n = len(self.order)
        self.by_first: List[List[Tuple[Placement, Tuple[int, int]]]] = [
            [] for _ in range(self.n)
        ]
        self.span = 1
        for p in placements(r, tileset):
            i0, i1, i2 = sorted(self.index[c] for c in cells_of(p))
            self.by_first[i0].append((p, (i1 - i0, i2 - i0)))
            self.span = max(self.span, i2 - i0 + 1)


def _memo_entry_limit(memo_limit_mb: Optional[float]) -> Optional[int]:
    if memo_limit_mb is None:
        env = os.environ.get("TRIBONE_MEMO_LIMIT_MB")
        if env is None:
            return None
        try:
            memo_limit_mb = float(env)
        except ValueError:
            raise ResourceLimit(f"bad TRIBONE_MEMO_LIMIT_MB value {env!r}")
    # Rough per-entry cost of a dict slot plus a small key tuple and an int
    # value; deliberately conservative so the cap binds before the OS does.
    return max(1, int(memo_limit_mb * 1024 * 1024) // 200)


def count_tilings(
    r: Region,
    tileset: Sequence[TileKind],
    memo_limit_mb: Optional[float] = None,
) -> int:
    """Exact number of partitions of r into tiles of the given kinds.

    Memoized frontier search: branch on every placement covering the first
    uncovered cell in sweep order; the memo key is that cell's index plus
    the occupancy pattern of the lookahead window (whose width is the
    largest index span of any placement).  Raises ResourceLimit, never
    returns a bogus 0, when the memo exceeds its cap (set explicitly or
    via the TRIBONE_MEMO_LIMIT_MB environment variable).
    """
    table = _PlacementTable(r, tileset)
    n = table.n
    if n == 0:
        return 1
    if n % 3:
        return 0
    limit = _memo_entry_limit(memo_limit_mb)
    memo: Dict[Tuple[int, int], int] = {}
    by_first = table.by_first
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 100))

    def go(i: int, mask: int) -> int:
        # i is the first uncovered cell; bit j of mask says cell i+j is
        # already covered (bit 0 is always clear).
        if i >= n:
            return 1
        key = (i, mask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for _p, (d1, d2) in by_first[i]:
            bits = (1 << d1) | (1 << d2)
            if mask & bits:
                continue
            m2 = mask | bits | 1
            j = (~m2 & (m2 + 1)).bit_length() - 1  # lowest clear bit
            total += go(i + j, m2 >> j)
        if limit is not None and len(memo) >= limit:
            raise ResourceLimit(
                f"memo exceeded its cap of {limit} entries while counting"
            )
        memo[key] = total
        return total

    return go(0, 0)


def enumerate_tilings(
    r: Region,
    tileset: Sequence[TileKind],
    limit: Optional[int] = None,
) -> Iterator[Tiling]:
    """All tilings of r by the given kinds, lazily, in a deterministic
    order (lexicographic in the choice made at each first-uncovered cell).

    Plain backtracking; use count_tilings when only the number is needed.
    """
    if limit is not None and limit <= 0:
        return
    table = _PlacementTable(r, tileset)
    n = table.n
    if n == 0:
        yield Tiling(r, ())
        return
    if n % 3:
        return
    by_first = table.by_first
    chosen: List[Placement] = []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 100))

    def walk(i: int, mask: int) -> Iterator[Tiling]:
        if i >= n:
            yield Tiling(r, tuple(chosen))
            return
        for p, (d1, d2) in by_first[i]:
            bits = (1 << d1) | (1 << d2)
            if mask & bits:
                continue
            m2 = mask | bits | 1
            j = (~m2 & (m2 + 1)).bit_length() - 1
            chosen.append(p)
            yield from walk(i + j, m2 >> j)
            chosen.pop()

    emitted = 0
    for t in walk(0, 0):
        yield t
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def stone_balance(t: Tiling) -> int:
    """3 x (number of right stones - number of left stones); the quantity
    every tiling of a fixed region shares."""
    _require_valid(t)
    r = sum(1 for p in t.placements if p.kind is TileKind.STONE_R)
    l = sum(1 for p in t.placements if p.kind is TileKind.STONE_L)
    return 3 * (r - l)


def orientation_histogram(t: Tiling) -> Tuple[int, int, int, int, int]:
    """Per-kind placement counts (nAB, nBC, nCA, nStoneR, nStoneL)."""
    _require_valid(t)
    counts = {k: 0 for k in TileKind}
    for p in t.placements:
        counts[p.kind] += 1
    return (
        counts[TileKind.BONE_AB],
        counts[TileKind.BONE_BC],
        counts[TileKind.BONE_CA],
        counts[TileKind.STONE_R],
        counts[TileKind.STONE_L],
    )


def _require_valid(t: Tiling) -> None:
    err = validation_error(t)
    if err is not None:
        raise InvalidTiling(err)


def placement_frequency(
    r: Region,
    tileset: Sequence[TileKind],
    p: Placement,
    memo_limit_mb: Optional[float] = None,
) -> int:
    """Number of tilings of r (by the tileset) that contain p: force the
    placement and count tilings of the remainder."""
    region_cells = set(r.cells)
    covered = cells_of(p)
    for c in covered:
        if c not in region_cells:
            raise InvalidPlacement(f"{p.kind.value} at {p.anchor} is not inside the region")
    rest = Region(frozenset(region_cells - set(covered)))
    return count_tilings(rest, tileset, memo_limit_mb)


# -- serialization -----------------------------------------------------------

def tiling_to_json(t: Tiling) -> dict:
    """JSON-ready dict for a tiling; tiles sorted by (kind, anchor)."""
    return {
        "region": region_to_json(t.region),
        "tiles": [
            {"kind": p.kind.value, "anchor": [p.anchor.x, p.anchor.y]}
            for p in t.placements
        ],
    }


def tiling_from_json(obj: object) -> Tiling:
    """Parse the tiling JSON shape; FormatError on any malformed input."""
    if not isinstance(obj, dict):
        raise FormatError("tiling must be a JSON object")
    extra = set(obj) - {"region", "tiles"}
    if extra:
        raise FormatError(f"unknown tiling keys {sorted(extra)}")
    if "region" not in obj or "tiles" not in obj:
        raise FormatError("tiling needs 'region' and 'tiles'")
    region = region_from_json(obj["region"])
    tiles = obj["tiles"]
    if not isinstance(tiles, list):
        raise FormatError("'tiles' must be a list")
    kinds_by_value = {k.value: k for k in TileKind}
    placs = []
    for entry in tiles:
        if not isinstance(entry, dict) or set(entry) != {"kind", "anchor"}:
            raise FormatError(f"bad tile entry {entry!r}")
        kind = kinds_by_value.get(entry["kind"])
        if kind is None:
            raise FormatError(f"unknown tile kind {entry['kind']!r}")
        anchor = entry["anchor"]
        if (
            not isinstance(anchor, list)
            or len(anchor) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in anchor)
        ):
            raise FormatError(f"bad anchor {anchor!r}")
        try:
            placs.append(Placement(kind, LatticePoint(anchor[0], anchor[1])))
        except InvalidPlacement as e:
            raise FormatError(str(e))
    return Tiling(region, tuple(placs))
