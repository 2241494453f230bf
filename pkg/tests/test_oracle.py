import pytest

from knotmosaics.mosaic import Mosaic, is_knot_mosaic, is_suitably_connected
from knotmosaics.oracle import (
    BudgetExceededError,
    EnumBudget,
    complete_to_knot,
    enumerate_knot_mosaics,
    enumerate_suitably_connected,
    oracle_knot_count,
    oracle_split_matrices,
    oracle_state_matrix,
)
from knotmosaics.transfer import (
    build_split,
    count_dense,
    grand_sum,
    mat_add,
    mat_power,
    state_matrix,
)

BLANK_1 = Mosaic.from_rows([[0]])
CIRCLE_2X2 = Mosaic.from_rows([[2, 1], [3, 4]])
BORDERED_CIRCLE_3X3 = Mosaic.from_rows([[2, 5, 1], [6, 0, 6], [3, 5, 4]])


def test_enumerate_1x1_is_all_tiles():
    mosaics = list(enumerate_suitably_connected(1, 1))
    assert [m.tiles[0][0] for m in mosaics] == list(range(11))


def test_enumerate_totals_match_algebra():
    # single column: grand sum of X_2 + O_2
    assert sum(1 for _ in enumerate_suitably_connected(2, 1)) == grand_sum(
        mat_add(*build_split(2))
    ) == 65
    # single row: grand sum of (X_1 + O_1)^2
    n11 = mat_add(*build_split(1))
    assert sum(1 for _ in enumerate_suitably_connected(1, 2)) == grand_sum(
        mat_power(n11, 2)
    )


def test_enumeration_is_sorted_unique_and_valid():
    seen = []
    for mosaic in enumerate_suitably_connected(2, 2):
        assert is_suitably_connected(mosaic)
        flat = tuple(t for row in mosaic.tiles for t in row)
        seen.append(flat)
    assert len(seen) == len(set(seen)) == 1297
    assert seen == sorted(seen)


def test_split_p1_matches_direct_construction():
    tally = oracle_split_matrices(1)
    assert tally.x_counts == [[1, 1], [1, 1]]
    assert tally.o_counts == [[1, 1], [1, 4]]


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_split_matches_recurrence(p):
    tally = oracle_split_matrices(p)
    split = build_split(p)
    assert tally.as_split().x == split.x
    assert tally.as_split().o == split.o


def test_split_p4_entry():
    assert oracle_split_matrices(4).o_counts[10][11] == 16


def test_state_matrix_1x1():
    empirical = oracle_state_matrix(1, 1)
    assert empirical.rows == ((2, 2), (2, 5))
    assert grand_sum(empirical) == 11


def test_state_matrix_2x2_is_square_of_column_matrix():
    a = mat_add(*build_split(2))
    assert oracle_state_matrix(2, 2) == mat_power(a, 2)


@pytest.mark.parametrize(
    "p,q",
    [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (1, 3), (3, 1), (1, 4), (4, 1)],
)
def test_state_matrix_matches_algebra_small(p, q):
    assert oracle_state_matrix(p, q) == state_matrix(p, q)


@pytest.mark.parametrize("p,q", [(1, 5), (5, 1), (2, 4), (4, 2), (3, 3)])
def test_state_matrix_matches_algebra_large(p, q):
    # the heaviest brute-force sweeps, a few million mosaics each
    assert oracle_state_matrix(p, q) == state_matrix(p, q)


def test_state_matrix_sum_matches_enumeration():
    for p, q in [(1, 1), (2, 2), (2, 3)]:
        total = sum(1 for _ in enumerate_suitably_connected(p, q))
        assert grand_sum(oracle_state_matrix(p, q)) == total


def test_knot_counts():
    assert oracle_knot_count(2, 2) == 2
    assert oracle_knot_count(2, 3) == 4
    assert oracle_knot_count(3, 3) == 22
    assert oracle_knot_count(3, 4) == 130
    assert oracle_knot_count(1, 4) == 1
    for m, n in [(2, 2), (2, 3), (3, 3), (3, 4)]:
        assert oracle_knot_count(m, n) == count_dense(m, n)


def test_knot_count_consistency_with_interior():
    for m, n in [(3, 3), (3, 4), (4, 3)]:
        interior = oracle_state_matrix(m - 2, n - 2)
        assert oracle_knot_count(m, n) == 2 * grand_sum(interior)


def test_enumerate_knot_mosaics_2x2():
    mosaics = list(enumerate_knot_mosaics(2, 2))
    assert mosaics == [Mosaic.from_rows([[0, 0], [0, 0]]), CIRCLE_2X2]
    assert all(is_knot_mosaic(m) for m in mosaics)


def test_enumerate_knot_mosaics_3x3():
    mosaics = list(enumerate_knot_mosaics(3, 3))
    assert len(mosaics) == 22
    assert all(is_knot_mosaic(m) for m in mosaics)


def test_complete_blank():
    completions = complete_to_knot(BLANK_1)
    assert len(completions) == 2
    assert Mosaic.from_rows([[0, 0, 0], [0, 0, 0], [0, 0, 0]]) in completions
    assert BORDERED_CIRCLE_3X3 in completions


def test_complete_crossing():
    completions = complete_to_knot(Mosaic.from_rows([[9]]))
    assert len(completions) == 2
    for c in completions:
        assert is_knot_mosaic(c)
        assert c.tiles[1][1] == 9


def test_complete_circle():
    completions = complete_to_knot(CIRCLE_2X2)
    assert len(completions) == 2
    for c in completions:
        assert is_knot_mosaic(c)
        assert c.m == 4 and c.n == 4


def test_complete_rejects_disconnected():
    with pytest.raises(ValueError):
        complete_to_knot(Mosaic.from_rows([[5, 6]]))


def test_twofold_rule_exhaustive_small():
    for p, q in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        for inner in enumerate_suitably_connected(p, q):
            completions = complete_to_knot(inner)
            assert len(completions) == 2
            for c in completions:
                assert is_knot_mosaic(c)
                # the centre of the completion is the inner mosaic
                centre = tuple(row[1 : 1 + q] for row in c.tiles[1 : 1 + p])
                assert centre == inner.tiles


def test_budget_cells():
    with pytest.raises(BudgetExceededError):
        enumerate_suitably_connected(4, 4)
    with pytest.raises(BudgetExceededError):
        oracle_knot_count(4, 4)
    assert oracle_knot_count(4, 4, EnumBudget(max_cells=16)) == 2594


def test_budget_nodes_fires_mid_stream():
    tight = EnumBudget(max_cells=12, max_nodes=10)
    stream = enumerate_suitably_connected(2, 2, tight)
    with pytest.raises(BudgetExceededError):
        for _ in stream:
            pass


def test_budget_validation():
    with pytest.raises(ValueError):
        EnumBudget(max_cells=0)
    with pytest.raises(ValueError):
        EnumBudget(max_nodes=-1)
    with pytest.raises(ValueError):
        oracle_knot_count(0, 3)
