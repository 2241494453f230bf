"""State matrices, their block recurrence, and exact mosaic counts.

The number of suitably connected single-column mosaics with p rows,
grouped by left and right boundary state, forms a 2**p x 2**p matrix.
That matrix splits as X_p + O_p according to whether the bottom tile has
a bottom connection point (O) or not (X), and the split obeys a block
recurrence over the bottom row:

    X_{k+1} = [ X_k  O_k ]        O_{k+1} = [ O_k  X_k   ]
              [ O_k  X_k ]                  [ X_k  4*O_k ]

starting from the 1x1 seeds X_0 = O_0 = [1].  Quadrants select the left
and right connection points of the new bottom tile (the bottom row's bit
is the most significant in the state index), the inner X/O choice is
forced by matching the new tile's top edge, and the factor 4 in the last
quadrant accounts for the four tiles that realise an all-four pattern.

Stacking q columns multiplies the single-column matrices, and a grid with
a closed boundary is obtained from its interior by exactly two border
fills, which yields the count of m x n knot mosaics:

    count(m, n) = 2 * grand_sum((X_{m-2} + O_{m-2}) ** (n-2))

with the exponent 0 meaning the identity matrix.  Everything here is
exact integer arithmetic; counts overflow 64-bit hardware integers well
before m = n = 8, so no value ever passes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import mul
from typing import NamedTuple

__all__ = [
    "StateMatrix",
    "SplitPair",
    "identity",
    "mat_add",
    "mat_mul",
    "mat_power",
    "grand_sum",
    "build_split",
    "state_matrix",
    "count_dense",
    "closed_form",
    "bounds_check",
    "format_state_matrix",
    "parse_state_matrix",
    "clear_caches",
]


@dataclass(frozen=True)
class StateMatrix:
    """A square matrix of exact non-negative integers with side 2**p."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        side = len(self.rows)
        if side == 0 or side & (side - 1):
            raise ValueError(f"state matrix side must be a power of two, got {side}")
        for row in self.rows:
            if len(row) != side:
                raise ValueError("state matrix must be square")
            for entry in row:
                if not isinstance(entry, int) or entry < 0:
                    raise ValueError(f"entries must be non-negative integers, got {entry!r}")

    @property
    def side(self) -> int:
        return len(self.rows)

    @property
    def p(self) -> int:
        return self.side.bit_length() - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "StateMatrix":
        return StateMatrix(tuple(zip(*self.rows)))


class SplitPair(NamedTuple):
    x: StateMatrix
    o: StateMatrix


def identity(side: int) -> StateMatrix:
    return StateMatrix(tuple(tuple(int(i == j) for j in range(side)) for i in range(side)))


def mat_add(a: StateMatrix, b: StateMatrix) -> StateMatrix:
    if a.side != b.side:
        raise ValueError(f"dimension mismatch: {a.side} vs {b.side}")
    return StateMatrix(tuple(tuple(map(sum, zip(ra, rb))) for ra, rb in zip(a.rows, b.rows)))


def mat_mul(a: StateMatrix, b: StateMatrix) -> StateMatrix:
    if a.side != b.side:
        raise ValueError(f"dimension mismatch: {a.side} vs {b.side}")
    cols = tuple(zip(*b.rows))
    return StateMatrix(
        tuple(tuple(sum(map(mul, row, col)) for col in cols) for row in a.rows)
    )


def mat_power(a: StateMatrix, e: int) -> StateMatrix:
    """``a`` raised to a non-negative integer power; exponent 0 is the identity.

    Uses plain repeated multiplication: entries grow so quickly that the
    last multiplication dominates either way, and successive powers are
    what the counting loops consume.
    """
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = identity(a.side)
    for _ in range(e):
        result = mat_mul(result, a)
    return result


def grand_sum(a: StateMatrix) -> int:
    """Sum of all entries."""
    return sum(map(sum, a.rows))


@lru_cache(maxsize=None)
def build_split(p: int) -> SplitPair:
    """Build (X_p, O_p) by the block recurrence from the 1x1 seeds."""
    if p < 0:
        raise ValueError("p must be non-negative")
    x_rows: list[tuple[int, ...]] = [(1,)]
    o_rows: list[tuple[int, ...]] = [(1,)]
    for _ in range(p):
        x_next = [xr + orow for xr, orow in zip(x_rows, o_rows)]
        x_next += [orow + xr for xr, orow in zip(x_rows, o_rows)]
        o_next = [orow + xr for xr, orow in zip(x_rows, o_rows)]
        o_next += [xr + tuple(e << 2 for e in orow) for xr, orow in zip(x_rows, o_rows)]
        x_rows, o_rows = x_next, o_next
    return SplitPair(StateMatrix(tuple(x_rows)), StateMatrix(tuple(o_rows)))


@lru_cache(maxsize=512)
def _operator_power(p: int, q: int) -> StateMatrix:
    # Successive powers of X_p + O_p, memoised so that sweeping q (as the
    # count tables and the engine-equivalence checks do) costs one new
    # multiplication per step instead of q.
    if q == 0:
        return identity(1 << p)
    return mat_mul(_operator_power(p, q - 1), mat_add(*build_split(p)))


def state_matrix(p: int, q: int) -> StateMatrix:
    """The matrix counting suitably connected p x q mosaics by boundary states."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    return _operator_power(p, q)


def count_dense(m: int, n: int) -> int:
    """Number of m x n knot mosaics, via explicit matrix powers."""
    _check_dims(m, n)
    if min(m, n) == 1:
        return 1
    return 2 * grand_sum(_operator_power(m - 2, n - 2))


def closed_form(m: int, n: int) -> int:
    """Closed-form counts for grids of height 1, 2 or 3."""
    if m not in (1, 2, 3):
        raise ValueError(f"closed forms exist for m in 1..3 only, got {m}")
    if n < 1:
        raise ValueError("n must be positive")
    if m == 1:
        return 1
    if m == 2:
        return 2 ** (n - 1)
    if n < 2:
        raise ValueError("the height-3 closed form needs n >= 2")
    numerator = 2 * (9 * 6 ** (n - 2) + 1)
    assert numerator % 5 == 0
    return numerator // 5


def bounds_check(m: int, n: int, d: int) -> bool:
    """Exact-rational check of the sandwich bounds on the count ``d``.

    For m, n >= 3 the normalised count
    275 * d / (2 * (9*6**(m-2) + 1) * (9*6**(n-2) + 1)) must lie between
    2**((m-3)(n-3)) and (22/5)**((m-3)(n-3)).
    """
    if m < 3 or n < 3:
        raise ValueError("bounds are stated for m, n >= 3")
    middle = Fraction(275 * d, 2 * (9 * 6 ** (m - 2) + 1) * (9 * 6 ** (n - 2) + 1))
    e = (m - 3) * (n - 3)
    return Fraction(2) ** e <= middle <= Fraction(22, 5) ** e


def _check_dims(m: int, n: int) -> None:
    if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
        raise ValueError(f"grid dimensions must be positive integers, got {m!r} x {n!r}")


def clear_caches() -> None:
    build_split.cache_clear()
    _operator_power.cache_clear()


# ---------------------------------------------------------------------------
# matrix dump format
#
#   line 1: statematrix p=<p> kind=<X|O|N>
#   then 2**p lines of 2**p space-separated decimal integers


def format_state_matrix(a: StateMatrix, kind: str) -> str:
    if kind not in ("X", "O", "N"):
        raise ValueError(f"kind must be X, O or N, got {kind!r}")
    lines = [f"statematrix p={a.p} kind={kind}"]
    lines.extend(" ".join(str(e) for e in row) for row in a.rows)
    return "\n".join(lines) + "\n"


def parse_state_matrix(text: str) -> tuple[StateMatrix, str]:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines:
        raise ValueError("empty matrix document")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "statematrix":
        raise ValueError(f"bad header {lines[0]!r}")
    if not header[1].startswith("p=") or not header[2].startswith("kind="):
        raise ValueError(f"bad header {lines[0]!r}")
    p = int(header[1][2:])
    kind = header[2][5:]
    if kind not in ("X", "O", "N"):
        raise ValueError(f"kind must be X, O or N, got {kind!r}")
    side = 1 << p
    if len(lines) - 1 != side:
        raise ValueError(f"expected {side} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != side:
            raise ValueError(f"expected {side} entries per row, got {len(fields)}")
        rows.append(tuple(int(f) for f in fields))
    return StateMatrix(tuple(rows)), kind
