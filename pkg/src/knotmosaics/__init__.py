"""Exact counting, enumeration and rendering of knot mosaics.

A knot mosaic is a grid of the eleven standard tiles whose strands join
up across every shared edge and never touch the outer boundary.  This
package computes the exact number of such grids for any size, with two
interchangeable engines (explicit state-matrix powers and a matrix-free
vector recursion), a brute-force enumeration oracle for validating them,
and utilities for manipulating and drawing mosaic grids.

All counts are exact arbitrary-precision integers.
"""

from __future__ import annotations

from .matrixfree import OpCounter, apply_operator, apply_split, count_matrixfree
from .mosaic import (
    MOSAIC_HEADER,
    Mosaic,
    format_mosaic,
    format_mosaic_stream,
    has_bottom_cp,
    is_knot_mosaic,
    is_suitably_connected,
    l_state,
    parse_mosaic,
    parse_mosaic_stream,
    r_state,
    state_from_index,
    state_index,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    EnumBudget,
    Tally,
    complete_to_knot,
    enumerate_knot_mosaics,
    enumerate_suitably_connected,
    oracle_knot_count,
    oracle_split_matrices,
    oracle_state_matrix,
)
from .render import render_mosaic
from .tiles import ALL_TILES, NUM_TILES, Side, connection_points, tiles_matching
from .transfer import (
    SplitPair,
    StateMatrix,
    bounds_check,
    build_split,
    closed_form,
    count_dense,
    format_state_matrix,
    grand_sum,
    identity,
    mat_add,
    mat_mul,
    mat_power,
    parse_state_matrix,
    state_matrix,
)

__version__ = "0.1.0"

# the dense engine materialises 4**(m-2) entries; past this point the
# matrix-free engine is the sensible default
_DENSE_LIMIT = 6


def resolve_engine(m: int, engine: str = "auto") -> str:
    """Map an engine choice to a concrete engine name."""
    if engine == "auto":
        return "dense" if m - 2 <= _DENSE_LIMIT else "matrixfree"
    if engine not in ("dense", "matrixfree"):
        raise ValueError(f"engine must be dense, matrixfree or auto, got {engine!r}")
    return engine


def count(m: int, n: int, engine: str = "auto") -> int:
    """Number of m x n knot mosaics, dispatching on the engine choice."""
    engine = resolve_engine(m, engine)
    if engine == "dense":
        return count_dense(m, n)
    return count_matrixfree(m, n)
