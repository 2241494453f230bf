"""Brute-force enumeration of mosaics, used to validate the algebraic engines.

Everything here counts by placing actual tiles: a backtracking search
fills the grid cell by cell in row-major order, trying tile ids in
ascending order and pruning any placement that disagrees with the left or
top neighbour (or with a closed boundary).  No state-matrix algebra is
involved, which is the point: agreement between these tallies and the
recurrence-built matrices checks the algebra against the definition.

The search space grows as 11**(m*n), so every public operation takes an
explicit budget and raises :class:`BudgetExceededError` rather than
silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .mosaic import Mosaic
from .tiles import ALL_TILES, SIDE_FLAGS
from .transfer import SplitPair, StateMatrix

__all__ = [
    "EnumBudget",
    "BudgetExceededError",
    "Tally",
    "DEFAULT_BUDGET",
    "enumerate_suitably_connected",
    "enumerate_knot_mosaics",
    "oracle_split_matrices",
    "oracle_state_matrix",
    "oracle_knot_count",
    "complete_to_knot",
]


class BudgetExceededError(RuntimeError):
    """Raised when a search would exceed its cell or node budget."""


@dataclass(frozen=True)
class EnumBudget:
    """Limits for exhaustive searches.

    ``max_cells`` caps the grid area, ``max_nodes`` caps the number of
    tile placements attempted during backtracking.
    """

    max_cells: int = 12
    max_nodes: int = 20_000_000

    def __post_init__(self) -> None:
        if self.max_cells < 1 or self.max_nodes < 1:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = EnumBudget()


@dataclass
class Tally:
    """Empirical split of single-column counts by boundary states.

    ``x_counts[i][j]`` counts columns with left state ``i``, right state
    ``j`` and no bottom connection point; ``o_counts`` the ones with a
    bottom connection point.
    """

    p: int
    x_counts: list[list[int]] = field(default_factory=list)
    o_counts: list[list[int]] = field(default_factory=list)

    def as_split(self) -> SplitPair:
        return SplitPair(
            StateMatrix(tuple(tuple(r) for r in self.x_counts)),
            StateMatrix(tuple(tuple(r) for r in self.o_counts)),
        )


# candidate tiles for every combination of side constraints
# (left, top, right, bottom), each None (free), False or True
_CANDIDATES: dict[tuple, tuple[int, ...]] = {}
for _key in product((None, False, True), repeat=4):
    _CANDIDATES[_key] = tuple(
        t
        for t in ALL_TILES
        if (_key[0] is None or SIDE_FLAGS[t][0] == _key[0])
        and (_key[2] is None or SIDE_FLAGS[t][1] == _key[2])
        and (_key[1] is None or SIDE_FLAGS[t][2] == _key[1])
        and (_key[3] is None or SIDE_FLAGS[t][3] == _key[3])
    )


def _grids(m, n, closed, fixed, budget):
    """Yield every consistent filling as a tuple of row tuples.

    ``closed`` forbids connection points on the outer boundary; ``fixed``
    maps (row, col) to a forced tile id.  A ``budget`` of None disables
    the node limit (used internally for border completion).
    """
    max_nodes = budget.max_nodes if budget is not None else None
    grid = [[0] * n for _ in range(m)]
    nodes = 0

    def place(idx):
        nonlocal nodes
        if idx == m * n:
            yield tuple(tuple(row) for row in grid)
            return
        i, j = divmod(idx, n)
        left = SIDE_FLAGS[grid[i][j - 1]][1] if j > 0 else (False if closed else None)
        top = SIDE_FLAGS[grid[i - 1][j]][3] if i > 0 else (False if closed else None)
        right = False if closed and j == n - 1 else None
        bottom = False if closed and i == m - 1 else None
        candidates = _CANDIDATES[(left, top, right, bottom)]
        forced = fixed.get((i, j)) if fixed else None
        if forced is not None:
            if forced not in candidates:
                return
            candidates = (forced,)
        for t in candidates:
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExceededError(
                    f"search exceeded {max_nodes} nodes at cell ({i}, {j})"
                )
            grid[i][j] = t
            yield from place(idx + 1)

    yield from place(0)


def _check_cells(m, n, budget):
    if m < 1 or n < 1:
        raise ValueError(f"grid dimensions must be positive, got {m} x {n}")
    if m * n > budget.max_cells:
        raise BudgetExceededError(
            f"{m} x {n} grid exceeds the {budget.max_cells}-cell budget"
        )


def enumerate_suitably_connected(p, q, budget=DEFAULT_BUDGET):
    """Stream every suitably connected p x q mosaic exactly once.

    Order is deterministic: row-major cells, ascending tile ids, i.e.
    lexicographic in the flattened tile sequence.  The cell budget is
    checked eagerly; the node budget may fire mid-stream.
    """
    _check_cells(p, q, budget)
    return (Mosaic(g) for g in _grids(p, q, closed=False, fixed=None, budget=budget))


def enumerate_knot_mosaics(m, n, budget=DEFAULT_BUDGET):
    """Stream every m x n knot mosaic, in the same deterministic order."""
    _check_cells(m, n, budget)
    return (Mosaic(g) for g in _grids(m, n, closed=True, fixed=None, budget=budget))


def oracle_split_matrices(p, budget=DEFAULT_BUDGET):
    """Tally all suitably connected single columns into a :class:`Tally`."""
    _check_cells(p, 1, budget)
    size = 1 << p
    x_counts = [[0] * size for _ in range(size)]
    o_counts = [[0] * size for _ in range(size)]
    for grid in _grids(p, 1, closed=False, fixed=None, budget=budget):
        li = ri = 0
        for i in range(p):
            flags = SIDE_FLAGS[grid[i][0]]
            if flags[0]:
                li |= 1 << i
            if flags[1]:
                ri |= 1 << i
        target = o_counts if SIDE_FLAGS[grid[p - 1][0]][3] else x_counts
        target[li][ri] += 1
    return Tally(p, x_counts, o_counts)


def oracle_state_matrix(p, q, budget=DEFAULT_BUDGET):
    """Count suitably connected p x q mosaics by (left, right) boundary states."""
    _check_cells(p, q, budget)
    size = 1 << p
    counts = [[0] * size for _ in range(size)]
    for grid in _grids(p, q, closed=False, fixed=None, budget=budget):
        li = ri = 0
        for i in range(p):
            if SIDE_FLAGS[grid[i][0]][0]:
                li |= 1 << i
            if SIDE_FLAGS[grid[i][q - 1]][1]:
                ri |= 1 << i
        counts[li][ri] += 1
    return StateMatrix(tuple(tuple(r) for r in counts))


def oracle_knot_count(m, n, budget=DEFAULT_BUDGET):
    """Count m x n knot mosaics by pruned exhaustive search."""
    _check_cells(m, n, budget)
    count = 0
    for _ in _grids(m, n, closed=True, fixed=None, budget=budget):
        count += 1
    return count


def complete_to_knot(inner: Mosaic) -> list[Mosaic]:
    """All knot mosaics obtained by adding a one-tile border around ``inner``.

    The border is found by constraint search over the 2m + 2n - 4 border
    cells, not by a hard-coded closure, so the fact that exactly two
    completions exist is an observable outcome rather than an assumption.
    """
    from .mosaic import is_suitably_connected

    if not is_suitably_connected(inner):
        raise ValueError("inner mosaic is not suitably connected")
    m, n = inner.m + 2, inner.n + 2
    fixed = {
        (i + 1, j + 1): inner.tiles[i][j]
        for i in range(inner.m)
        for j in range(inner.n)
    }
    return [
        Mosaic(grid)
        for grid in _grids(m, n, closed=True, fixed=fixed, budget=None)
    ]
