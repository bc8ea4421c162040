"""Unit tests for benzels, triangles, boundary words, and serialization."""

import pytest

from trihex.errors import (
    EmptyRegion,
    FormatError,
    InvalidParams,
    NotSimplyConnected,
)
from trihex.hexlattice import LatticePoint, rotate120, signed_area, word_from_string
from trihex.regions import (
    BenzelParams,
    Region,
    benzel,
    boundary_word_closed_form,
    bounding_hexagon,
    cell_corners,
    cyclically_equal,
    despur,
    find_spurs,
    region_from_cells,
    region_from_json,
    region_to_json,
    rightmost_corner,
    trace_boundary,
    triangle,
    word_from_text,
    word_to_text,
)


def all_valid_params(bound: int):
    for a in range(2, bound + 1):
        for b in range(2, bound + 1):
            if a <= 2 * b and b <= 2 * a:
                yield BenzelParams(a, b)


def test_params_validation():
    with pytest.raises(InvalidParams):
        BenzelParams(1, 2)
    with pytest.raises(InvalidParams):
        BenzelParams(2, 5)
    with pytest.raises(InvalidParams):
        BenzelParams(5, 2)
    assert BenzelParams(2, 4).cls == 0
    assert BenzelParams(2, 2).cls == 1
    assert BenzelParams(2, 3).cls == -1


def test_region_rejects_non_centers():
    with pytest.raises(InvalidParams):
        Region(frozenset({LatticePoint(0, 0)}))


def test_small_benzels():
    assert len(benzel(BenzelParams(2, 2))) == 3
    assert len(benzel(BenzelParams(3, 3))) == 6
    assert len(benzel(BenzelParams(5, 7))) == 27


def test_benzel_rotation_invariance():
    for p in (BenzelParams(4, 6), BenzelParams(5, 7), BenzelParams(4, 4)):
        cells = benzel(p).cells
        assert frozenset(rotate120(c) for c in cells) == cells


def test_bounding_hexagon_rightmost():
    p = BenzelParams(5, 7)
    hexagon = bounding_hexagon(p)
    corner = rightmost_corner(p)
    assert corner in hexagon
    assert corner == LatticePoint(7, 2)
    assert max(2 * v.x - v.y for v in hexagon) == 2 * corner.x - corner.y


def test_triangle_shape():
    assert len(triangle(1)) == 1
    assert len(triangle(6)) == 21
    assert triangle(3).cells == benzel(BenzelParams(3, 3)).cells
    with pytest.raises(InvalidParams):
        triangle(0)


def test_cell_corners_surround_center():
    center = LatticePoint(-2, -2)
    corners = cell_corners(center)
    assert len(set(corners)) == 6
    total = LatticePoint(0, 0)
    for c in corners:
        total = total + (c - center)
    assert total == LatticePoint(0, 0)


def test_trace_boundary_single_cell():
    r = region_from_cells([(-2, -2)])
    w = trace_boundary(r)
    assert len(w) == 6
    assert signed_area(w) == 1


def test_trace_boundary_area_is_cell_count():
    for p in all_valid_params(8):
        r = benzel(p)
        if r.cells:
            assert signed_area(trace_boundary(r)) == len(r)


def test_trace_boundary_rejects_holes():
    # A ring of six cells around an uncovered center.
    center = LatticePoint(1, 1)
    from trihex.regions import CELL_NEIGHBOR_OFFSETS

    ring = Region(frozenset(center + d for d in CELL_NEIGHBOR_OFFSETS))
    with pytest.raises(NotSimplyConnected):
        trace_boundary(ring)


def test_trace_boundary_rejects_disconnected():
    r = region_from_cells([(-2, -2), (4, 4)])
    with pytest.raises(NotSimplyConnected):
        trace_boundary(r)


def test_trace_boundary_empty():
    with pytest.raises(EmptyRegion):
        trace_boundary(Region(frozenset()))


def test_closed_form_words_match_tracing():
    for p in all_valid_params(12):
        w = despur(boundary_word_closed_form(p))
        assert cyclically_equal(w, trace_boundary(benzel(p))), (p.a, p.b)


def test_closed_form_word_is_closed_and_counts_cells():
    for p in (BenzelParams(4, 4), BenzelParams(3, 5), BenzelParams(6, 6)):
        w = boundary_word_closed_form(p)
        assert w.is_closed
        assert signed_area(w) == len(benzel(p))


HEXAGON = "b a' c b' a c'"  # counterclockwise around the cell at (-2, -2)


def test_find_spurs_and_despur():
    w = word_from_string("b c c' a' c b' a c'", LatticePoint(-1, -2))
    assert find_spurs(w) == [1]
    d = despur(w)
    assert d.tokens() == HEXAGON.split()
    assert find_spurs(d) == []


def test_despur_cascades():
    # Removing the inner a a' pair exposes the surrounding c c' pair.
    w = word_from_string("b c a a' c' a' c b' a c'", LatticePoint(-1, -2))
    d = despur(w)
    assert d.tokens() == HEXAGON.split()


def test_despur_handles_wraparound():
    # First step a cancels the final step a' across the word boundary
    # (no adjacent pair exists inside); the basepoint must move onto the
    # surviving loop.
    w = word_from_string("a " + HEXAGON + " a'", LatticePoint(-2, -2))
    assert w.is_closed
    d = despur(w)
    assert d.tokens() == HEXAGON.split()
    assert d.basepoint == LatticePoint(-1, -2)


def test_cyclic_equality():
    u = word_from_string("b a' c b' a c'", LatticePoint(-1, -2))
    assert cyclically_equal(u, u.rotated(2))
    v = word_from_string("b a' c b' a c'", LatticePoint(2, 1))
    assert not cyclically_equal(u, v)


def test_region_json_roundtrip():
    r = benzel(BenzelParams(4, 5))
    assert region_from_json(region_to_json(r)).cells == r.cells


def test_region_json_rejects_bad_input():
    with pytest.raises(FormatError):
        region_from_json("not json")
    with pytest.raises(FormatError):
        region_from_json({"cells": [[0, 0]], "extra": 1})
    with pytest.raises(FormatError):
        region_from_json({"cells": [[1, 1], [1, 1]]})
    with pytest.raises(FormatError):
        region_from_json({"cells": [[0, 0]]})  # class 0, not a center


def test_word_text_roundtrip():
    w = boundary_word_closed_form(BenzelParams(3, 4))
    again = word_from_text(word_to_text(w))
    assert again == w
    with pytest.raises(FormatError):
        word_from_text("base=1,x a b")
    with pytest.raises(FormatError):
        word_from_text("a q")
