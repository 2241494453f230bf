"""Mosaic grids, connectivity predicates, boundary states, and the text format.

A mosaic is an m x n grid of tiles (row 0 at the top, column 0 at the
left).  It is *suitably connected* when every pair of adjacent tiles
agrees about the connection point on their shared edge, and it is a *knot
mosaic* when additionally no connection point touches the outer boundary.

A *boundary state* records, for one vertical boundary of the grid, which
rows carry a connection point.  States are strings over ``x`` (absent) and
``o`` (present), top row first.  Each length-p state has a canonical index
in ``0 .. 2**p - 1``: the top row is the least significant bit, so the
bottom row's bit is the most significant.  Index 0 is the all-``x`` state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tiles import NUM_TILES, Side, connection_points

MOSAIC_HEADER = "mosaic v1"


@dataclass(frozen=True)
class Mosaic:
    """An immutable grid of tile ids."""

    tiles: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.tiles or not self.tiles[0]:
            raise ValueError("mosaic dimensions must be positive")
        width = len(self.tiles[0])
        for row in self.tiles:
            if len(row) != width:
                raise ValueError("mosaic rows must all have the same length")
            for t in row:
                if not isinstance(t, int) or not 0 <= t < NUM_TILES:
                    raise ValueError(f"tile id must be in 0..10, got {t!r}")

    @classmethod
    def from_rows(cls, rows) -> "Mosaic":
        return cls(tuple(tuple(int(t) for t in row) for row in rows))

    @property
    def m(self) -> int:
        return len(self.tiles)

    @property
    def n(self) -> int:
        return len(self.tiles[0])


def is_suitably_connected(mosaic: Mosaic) -> bool:
    """True when every shared edge agrees about its connection point."""
    tiles = mosaic.tiles
    for i in range(mosaic.m):
        for j in range(mosaic.n):
            cp = connection_points(tiles[i][j])
            if j + 1 < mosaic.n:
                right = connection_points(tiles[i][j + 1])
                if (Side.RIGHT in cp) != (Side.LEFT in right):
                    return False
            if i + 1 < mosaic.m:
                below = connection_points(tiles[i + 1][j])
                if (Side.BOTTOM in cp) != (Side.TOP in below):
                    return False
    return True


def is_knot_mosaic(mosaic: Mosaic) -> bool:
    """True when the mosaic is suitably connected and its boundary is closed.

    The all-blank mosaic qualifies: it is the unique 1x1 knot mosaic.
    """
    if not is_suitably_connected(mosaic):
        return False
    tiles = mosaic.tiles
    for j in range(mosaic.n):
        if Side.TOP in connection_points(tiles[0][j]):
            return False
        if Side.BOTTOM in connection_points(tiles[-1][j]):
            return False
    for i in range(mosaic.m):
        if Side.LEFT in connection_points(tiles[i][0]):
            return False
        if Side.RIGHT in connection_points(tiles[i][-1]):
            return False
    return True


def l_state(mosaic: Mosaic) -> str:
    """Boundary state of the leftmost column, top row first."""
    return "".join(
        "o" if Side.LEFT in connection_points(row[0]) else "x" for row in mosaic.tiles
    )


def r_state(mosaic: Mosaic) -> str:
    """Boundary state of the rightmost column, top row first."""
    return "".join(
        "o" if Side.RIGHT in connection_points(row[-1]) else "x" for row in mosaic.tiles
    )


def state_index(state: str) -> int:
    """Canonical index of an x/o state string (top row = bit 0)."""
    index = 0
    for i, c in enumerate(state):
        if c == "o":
            index |= 1 << i
        elif c != "x":
            raise ValueError(f"state characters must be 'x' or 'o', got {c!r}")
    return index


def state_from_index(p: int, index: int) -> str:
    """Inverse of :func:`state_index` for length-``p`` states."""
    if p < 1:
        raise ValueError("state length must be positive")
    if not 0 <= index < (1 << p):
        raise ValueError(f"index {index} out of range for {p} rows")
    return "".join("o" if index >> i & 1 else "x" for i in range(p))


def has_bottom_cp(column: Mosaic) -> bool:
    """Whether the bottom tile of a single-column mosaic has a bottom connection point."""
    if column.n != 1:
        raise ValueError(f"expected a single-column mosaic, got {column.n} columns")
    return Side.BOTTOM in connection_points(column.tiles[-1][0])


# ---------------------------------------------------------------------------
# "mosaic v1" text format
#
#   line 1: mosaic v1
#   line 2: <m> <n>
#   then m lines of n whitespace-separated tile ids
#
# Multiple documents in one stream are separated by a blank line.


def format_mosaic(mosaic: Mosaic) -> str:
    lines = [MOSAIC_HEADER, f"{mosaic.m} {mosaic.n}"]
    lines.extend(" ".join(str(t) for t in row) for row in mosaic.tiles)
    return "\n".join(lines) + "\n"


def parse_mosaic(text: str) -> Mosaic:
    """Parse one "mosaic v1" document.

    Rejects wrong headers, dimension mismatches and out-of-range tile ids.
    """
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or lines[0] != MOSAIC_HEADER:
        raise ValueError(f"expected header {MOSAIC_HEADER!r}")
    if len(lines) < 2:
        raise ValueError("missing dimension line")
    dims = lines[1].split()
    if len(dims) != 2:
        raise ValueError(f"dimension line must be '<m> <n>', got {lines[1]!r}")
    try:
        m, n = int(dims[0]), int(dims[1])
    except ValueError:
        raise ValueError(f"dimension line must be '<m> <n>', got {lines[1]!r}") from None
    if m < 1 or n < 1:
        raise ValueError("mosaic dimensions must be positive")
    body = lines[2:]
    if len(body) != m:
        raise ValueError(f"expected {m} tile rows, got {len(body)}")
    rows = []
    for ln in body:
        fields = ln.split()
        if len(fields) != n:
            raise ValueError(f"expected {n} tiles per row, got {len(fields)}")
        try:
            row = tuple(int(f) for f in fields)
        except ValueError:
            raise ValueError(f"tile ids must be integers, got {ln!r}") from None
        rows.append(row)
    return Mosaic(tuple(rows))


def format_mosaic_stream(mosaics) -> str:
    """Join mosaics into a multi-document stream (blank-line separated)."""
    return "\n".join(format_mosaic(m) for m in mosaics)


def parse_mosaic_stream(text: str) -> list[Mosaic]:
    """Parse a multi-document stream produced by :func:`format_mosaic_stream`."""
    chunks = [c for c in text.split("\n\n") if c.strip()]
    return [parse_mosaic(c) for c in chunks]
