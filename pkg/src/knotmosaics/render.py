"""ASCII rendering of mosaics, three characters per tile edge.

Strand characters appear at a cell-edge midpoint exactly when the tile
has a connection point there, so a rendered knot mosaic never touches the
outer border of the drawing.  At a crossing the strand passing underneath
is interrupted at the centre character.
"""

from __future__ import annotations

from .mosaic import Mosaic

_ART = {
    0: ("   ", "   ", "   "),
    1: ("   ", "-. ", " | "),
    2: ("   ", " .-", " | "),
    3: (" | ", " '-", "   "),
    4: (" | ", "-' ", "   "),
    5: ("   ", "---", "   "),
    6: (" | ", " | ", " | "),
    7: (" | ", "-\\-", " | "),
    8: (" | ", "-/-", " | "),
    9: (" | ", "-|-", " | "),
    10: (" | ", "---", " | "),
}


def render_mosaic(mosaic: Mosaic) -> str:
    """Render as 3*m lines of 3*n characters."""
    lines = []
    for row in mosaic.tiles:
        for sub in range(3):
            lines.append("".join(_ART[t][sub] for t in row))
    return "\n".join(lines)
