"""Command-line interface.

Commands: benzel, triangle, shadow, tile (construct|count|enumerate|freq),
scan, render.  Exit codes: 0 success, 2 input error, 3 resource limit.
All numeric output is exact decimal; a memo-cap abort prints
"resource-limit" and never masquerades as a count of 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .errors import ResourceLimit, TrihexError
from .hexlattice import LatticePoint, Word, signed_area
from .pentagonal import construct_tiling, pentagonal_benzel
from .regions import (
    BenzelParams,
    Region,
    benzel,
    boundary_word_closed_form,
    region_from_json,
    region_to_json,
    trace_boundary,
    triangle,
    word_from_text,
    word_to_text,
)
from .render import RenderSpec, render_svg
from .shadow import (
    DEFAULT_SEED,
    ShadowSeed,
    cl_invariant_formula,
    cl_invariant_path,
    is_pentagonal_pair,
    shadow_word,
)
from .tilings import (
    BONES,
    STONES_AND_BONES,
    Placement,
    TileKind,
    count_tilings,
    placement_frequency,
    enumerate_tilings,
    tiling_from_json,
    tiling_to_json,
)

_TILESETS = {"bones": BONES, "stones+bones": STONES_AND_BONES}


def _parse_pair(text: str) -> BenzelParams:
    try:
        a_str, b_str = text.split(",")
        return BenzelParams(int(a_str), int(b_str))
    except ValueError:
        raise TrihexError(f"expected 'a,b' integers, got {text!r}") from None


def _parse_point(text: str) -> LatticePoint:
    try:
        x_str, y_str = text.split(",")
        return LatticePoint(int(x_str), int(y_str))
    except ValueError:
        raise TrihexError(f"expected 'x,y' integers, got {text!r}") from None


def _load_region(args: argparse.Namespace) -> Region:
    if getattr(args, "region", None):
        with open(args.region) as f:
            return region_from_json(f.read())
    return benzel(_parse_pair(args.benzel))


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text)


def _region_command(args: argparse.Namespace, region: Region, params) -> None:
    if args.cells:
        print(json.dumps(region_to_json(region)))
    elif args.boundary_word:
        if isinstance(params, BenzelParams):
            word = boundary_word_closed_form(params)
        else:
            word = trace_boundary(region)
        _emit(args, {"word": word_to_text(word)}, word_to_text(word))
    elif args.area:
        _emit(args, {"area": len(region)}, str(len(region)))
    else:
        inv = cl_invariant_path(region)
        payload = {"I": inv.I, "i": str(inv.i), "iIntegral": inv.i_integral}
        _emit(args, payload, str(inv.I))


def _cmd_benzel(args: argparse.Namespace) -> int:
    p = BenzelParams(args.a, args.b)
    _region_command(args, benzel(p), p)
    return 0


def _cmd_triangle(args: argparse.Namespace) -> int:
    _region_command(args, triangle(args.n), None)
    return 0


def _cmd_shadow(args: argparse.Namespace) -> int:
    if args.word:
        with open(args.word) as f:
            word = word_from_text(f.read())
    elif args.benzel:
        word = trace_boundary(benzel(_parse_pair(args.benzel)))
    else:
        word = trace_boundary(triangle(args.triangle))
    seed = DEFAULT_SEED if args.seed is None else ShadowSeed(args.seed[0], args.seed[1])
    base = word.basepoint if args.basepoint is None else _parse_point(args.basepoint)
    shadow = shadow_word(word, base, seed)
    area = signed_area(shadow)
    payload = {"shadow": word_to_text(shadow), "area": area}
    _emit(args, payload, f"{word_to_text(shadow)}\narea {area}")
    return 0


def _cmd_tile(args: argparse.Namespace) -> int:
    if args.tile_cmd == "construct":
        doc = json.dumps(tiling_to_json(construct_tiling(args.k)))
        if args.output:
            with open(args.output, "w") as f:
                f.write(doc + "\n")
        else:
            print(doc)
        return 0
    region = _load_region(args)
    tileset = _TILESETS[args.tiles]
    if args.tile_cmd == "count":
        print(count_tilings(region, tileset, args.memo_limit_mb))
    elif args.tile_cmd == "enumerate":
        for t in enumerate_tilings(region, tileset, args.limit):
            print(json.dumps(tiling_to_json(t)))
    else:  # freq
        kind_str, rest = args.placement.split(",", 1)
        kinds = {k.value: k for k in TileKind}
        if kind_str not in kinds:
            raise TrihexError(f"unknown tile kind {kind_str!r}")
        p = Placement(kinds[kind_str], _parse_point(rest))
        print(placement_frequency(region, tileset, p, args.memo_limit_mb))
    return 0


def _scan_rows(args: argparse.Namespace) -> List[dict]:
    rows = []
    for a in range(2, args.max + 1):
        for b in range(2, args.max + 1):
            try:
                p = BenzelParams(a, b)
            except TrihexError:
                continue
            count = len(benzel(p))
            k = is_pentagonal_pair(a, b)
            row = {
                "a": a,
                "b": b,
                "class": p.cls,
                "cellCount": count,
                "invariantI": cl_invariant_formula(p).I,
                "pentagonalK": k,
            }
            if args.search and count % 3 == 0 and count <= args.search_cap:
                row["boneTileable"] = count_tilings(benzel(p), BONES) > 0
            rows.append(row)
    return rows


def _cmd_scan(args: argparse.Namespace) -> int:
    rows = _scan_rows(args)
    if args.json:
        print(json.dumps(rows))
        return 0
    cols = ["a", "b", "class", "cellCount", "invariantI", "pentagonalK"]
    if args.search:
        cols.append("boneTileable")
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) for c in cols}
    print("  ".join(c.rjust(widths[c]) for c in cols))
    for r in rows:
        print(
            "  ".join(
                str(r.get(c, "") if r.get(c) is not None else "-").rjust(widths[c])
                for c in cols
            )
        )
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    region = tiling = hexagon = None
    boundary = shadow = None
    if args.tiling:
        with open(args.tiling) as f:
            tiling = tiling_from_json(json.loads(f.read()))
        region = tiling.region
    elif args.region:
        with open(args.region) as f:
            region = region_from_json(f.read())
    elif args.benzel:
        hexagon = _parse_pair(args.benzel)
        region = benzel(hexagon)
    elif args.triangle:
        region = triangle(args.triangle)
    if args.word:
        with open(args.word) as f:
            boundary = word_from_text(f.read())
    elif args.boundary and region is not None:
        boundary = trace_boundary(region)
    if args.shadow:
        source = boundary if boundary is not None else trace_boundary(region)
        shadow = shadow_word(source, source.basepoint)
    spec = RenderSpec(
        unit=args.unit,
        show_cells=not args.no_cells,
        show_hexagon=args.show_hexagon and hexagon is not None,
    )
    svg = render_svg(
        region=region,
        tiling=tiling,
        boundary=boundary,
        shadow=shadow,
        hexagon=hexagon,
        spec=spec,
    )
    if args.output:
        with open(args.output, "w") as f:
            f.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _add_region_source(sub: argparse.ArgumentParser, required: bool = True) -> None:
    group = sub.add_mutually_exclusive_group(required=required)
    group.add_argument("--benzel", metavar="A,B", help="benzel parameters")
    group.add_argument("--region", metavar="FILE", help="region JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trihex",
        description="Trihex (stone/bone) tilings of benzels on the hexagonal grid",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("benzel", "triangle"):
        p = sub.add_parser(name, help=f"inspect a {name}")
        if name == "benzel":
            p.add_argument("--a", type=int, required=True)
            p.add_argument("--b", type=int, required=True)
        else:
            p.add_argument("--n", type=int, required=True)
        sel = p.add_mutually_exclusive_group(required=True)
        sel.add_argument("--cells", action="store_true", help="print the region JSON")
        sel.add_argument(
            "--boundary-word", action="store_true", help="print the boundary word"
        )
        sel.add_argument("--area", action="store_true", help="print the cell count")
        sel.add_argument(
            "--invariant", action="store_true", help="print the invariant I"
        )
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("shadow", help="shadow a boundary word")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--benzel", metavar="A,B")
    src.add_argument("--triangle", type=int, metavar="N")
    src.add_argument("--word", metavar="FILE", help="word text file")
    p.add_argument("--basepoint", metavar="X,Y")
    p.add_argument("--seed", metavar="LL", help="two distinct letters from abc")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tile", help="construct, count, or enumerate tilings")
    tile_sub = p.add_subparsers(dest="tile_cmd", required=True)
    pc = tile_sub.add_parser("construct", help="explicit bone tiling, pentagonal k")
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("-o", "--output", metavar="FILE")
    for name in ("count", "enumerate", "freq"):
        ps = tile_sub.add_parser(name)
        _add_region_source(ps)
        ps.add_argument(
            "--tiles", choices=sorted(_TILESETS), required=True, help="prototile set"
        )
        if name == "enumerate":
            ps.add_argument("--limit", type=int, default=None)
        else:
            ps.add_argument("--memo-limit-mb", type=float, default=None)
        if name == "freq":
            ps.add_argument(
                "--placement", metavar="KIND,X,Y", required=True,
                help="e.g. boneAB,-1,0",
            )

    p = sub.add_parser("scan", help="tabulate benzels up to a parameter bound")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--search", action="store_true", help="also search for bone tilings")
    p.add_argument(
        "--search-cap", type=int, default=400,
        help="skip the search above this many cells",
    )
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("render", help="write an SVG figure")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--tiling", metavar="FILE")
    src.add_argument("--region", metavar="FILE")
    src.add_argument("--benzel", metavar="A,B")
    src.add_argument("--triangle", type=int, metavar="N")
    p.add_argument("--word", metavar="FILE", help="overlay a word from a file")
    p.add_argument("--boundary", action="store_true", help="overlay the traced boundary")
    p.add_argument("--shadow", action="store_true", help="overlay a shadow path")
    p.add_argument("--show-hexagon", action="store_true")
    p.add_argument("--no-cells", action="store_true")
    p.add_argument("--unit", type=float, default=20.0)
    p.add_argument("-o", "--output", metavar="FILE")
    return parser


_HANDLERS = {
    "benzel": _cmd_benzel,
    "triangle": _cmd_triangle,
    "shadow": _cmd_shadow,
    "tile": _cmd_tile,
    "scan": _cmd_scan,
    "render": _cmd_render,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ResourceLimit:
        print("resource-limit")
        return 3
    except (TrihexError, OSError) as e:
        if getattr(args, "json", False):
            print(json.dumps({"error": str(e)}))
        else:
            print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
