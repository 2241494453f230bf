"""The eleven unit tiles and their connection points.

A mosaic is built from eleven square tiles, numbered 0 through 10.  Each
tile carries a piece of a curve; a *connection point* is an edge midpoint
where the curve meets the tile boundary.  For counting purposes a tile is
fully described by which of its four edges carry a connection point:

=====  ====================  =========================
tile   connection points     drawn as
=====  ====================  =========================
0      (none)                blank
1      left, bottom          corner arc
2      bottom, right         corner arc
3      top, right            corner arc
4      left, top             corner arc
5      left, right           horizontal line
6      top, bottom           vertical line
7      all four              double arc, pairs (L,B) and (T,R)
8      all four              double arc, pairs (L,T) and (R,B)
9      all four              crossing, vertical strand on top
10     all four              crossing, horizontal strand on top
=====  ====================  =========================

Tiles 7..10 are indistinguishable to every counting routine; the pairing
and over/under choices only matter when rendering.
"""

from __future__ import annotations

from enum import Enum


class Side(Enum):
    """One of the four edges of a tile."""

    LEFT = "L"
    RIGHT = "R"
    TOP = "T"
    BOTTOM = "B"


NUM_TILES = 11
ALL_TILES = tuple(range(NUM_TILES))

_FULL = frozenset({Side.LEFT, Side.RIGHT, Side.TOP, Side.BOTTOM})
_CP: dict[int, frozenset[Side]] = {
    0: frozenset(),
    1: frozenset({Side.LEFT, Side.BOTTOM}),
    2: frozenset({Side.BOTTOM, Side.RIGHT}),
    3: frozenset({Side.TOP, Side.RIGHT}),
    4: frozenset({Side.LEFT, Side.TOP}),
    5: frozenset({Side.LEFT, Side.RIGHT}),
    6: frozenset({Side.TOP, Side.BOTTOM}),
    7: _FULL,
    8: _FULL,
    9: _FULL,
    10: _FULL,
}

# (left, right, top, bottom) booleans indexed by tile id; the enumerator's
# hot path avoids set lookups.
SIDE_FLAGS = tuple(
    (Side.LEFT in _CP[t], Side.RIGHT in _CP[t], Side.TOP in _CP[t], Side.BOTTOM in _CP[t])
    for t in ALL_TILES
)


def connection_points(tile: int) -> frozenset[Side]:
    """Return the set of edges of ``tile`` that carry a connection point."""
    if not isinstance(tile, int) or not 0 <= tile < NUM_TILES:
        raise ValueError(f"tile id must be an integer in 0..10, got {tile!r}")
    return _CP[tile]


def tiles_matching(left: bool, right: bool, top: bool, bottom: bool) -> list[int]:
    """All tiles whose connection-point pattern is exactly the given one.

    The all-true pattern admits four tiles (two double arcs, two crossings);
    any other pattern with an even number of connection points admits exactly
    one tile; patterns with an odd number admit none.
    """
    want = (bool(left), bool(right), bool(top), bool(bottom))
    return [t for t in ALL_TILES if SIDE_FLAGS[t] == want]
