"""Independent reference counter: broken-profile dynamic programming.

Counts knot mosaics cell by cell with a frontier of open/closed edge
bits.  Shares nothing with the package's engines beyond the tile table:
no state matrices, no recurrence, no border-completion argument.  Used by
the tests as a third, independent route to the same numbers.
"""

from knotmosaics.tiles import ALL_TILES, SIDE_FLAGS

# tiles grouped by their (left, top) connection points; each entry keeps
# the (right, bottom) pattern once per tile so multiplicities survive
_BY_LEFT_TOP: dict[tuple[bool, bool], list[tuple[bool, bool]]] = {}
for _t in ALL_TILES:
    _l, _r, _tp, _b = SIDE_FLAGS[_t]
    _BY_LEFT_TOP.setdefault((_l, _tp), []).append((_r, _b))


def dp_knot_count(m: int, n: int) -> int:
    """Number of m x n knot mosaics, by profile DP over cells."""
    # state: (bitmask of bottom-edge connection points for the frontier
    #         row, connection point on the right edge of the previous cell)
    states = {(0, False): 1}
    for i in range(m):
        for j in range(n):
            new: dict[tuple[int, bool], int] = {}
            bit = 1 << j
            last_col = j == n - 1
            last_row = i == m - 1
            for (profile, right_cp), ways in states.items():
                top = bool(profile & bit)
                left = right_cp if j > 0 else False
                for r, b in _BY_LEFT_TOP[(left, top)]:
                    if (last_col and r) or (last_row and b):
                        continue
                    key = ((profile | bit) if b else (profile & ~bit),
                           r if not last_col else False)
                    new[key] = new.get(key, 0) + ways
            states = new
    return sum(states.values())
