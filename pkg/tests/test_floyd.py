import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from apsp import (
    AdjacencyListGraph,
    DistanceMatrix,
    GenSpec,
    OrderingStrategy,
    Regime,
    detect_negative_cycle,
    fw_classic,
    fw_improved,
    generate,
    johnson,
    matrix_from_edges,
)
from conftest import EXAMPLE_AFTER_VERTEX_1, reference_apsp, reference_improved_fw

STRATEGIES = list(OrderingStrategy)


def test_classic_worked_example(example_matrix, example_final):
    dist, stats = fw_classic(example_matrix)
    assert dist == example_final
    assert stats.attempts_total == 125
    assert stats.attempts_per_iteration == [25] * 5
    assert stats.k_order == [0, 1, 2, 3, 4]


def test_classic_single_vertex():
    dist, stats = fw_classic(DistanceMatrix.from_rows([[0]]))
    assert dist.to_list() == [[0]] and stats.attempts_total == 1


def test_classic_matches_johnson_on_random_graph():
    checked = 0
    for seed in range(20):
        g = generate(GenSpec(n=8, regime=Regime.TWO_LGN_N, weight_min=-3, weight_max=20, seed=seed))
        dist, _ = fw_classic(matrix_from_edges(g))
        if detect_negative_cycle(dist) is None:
            assert dist == johnson(AdjacencyListGraph.from_edges(g))
            checked += 1
    assert checked >= 5


def test_classic_counts_useless_attempts():
    _, stats = fw_classic(DistanceMatrix.from_rows([[0, None], [None, 0]]))
    # only (k, k, k) triples have two finite operands
    assert stats.useless_attempts == 8 - 2


def test_improved_worked_example(example_matrix, example_final):
    dist, stats = fw_improved(example_matrix, OrderingStrategy.MIN_IN_OUT_PRODUCT)
    assert dist == example_final
    assert [k + 1 for k in stats.k_order] == [5, 3, 1, 2, 4]
    assert stats.attempts_per_iteration == [2, 4, 8, 16, 16]
    assert stats.attempts_total == 46
    assert stats.useless_attempts == 0


def test_improved_worked_example_successes(example_matrix):
    _, stats = fw_improved(example_matrix, "minprod")
    assert stats.successes_per_iteration[:2] == [0, 1]
    assert stats.successes_per_iteration[2] == 3
    assert sum(stats.successes_per_iteration[3:]) == 12


def test_improved_intermediate_matrix(example_matrix):
    _, stats = fw_improved(example_matrix, "minprod", keep_snapshots=True)
    # iteration index 2 processes vertex 1
    assert stats.k_order[2] == 0
    assert DistanceMatrix(stats.snapshots[2]) == DistanceMatrix.from_rows(EXAMPLE_AFTER_VERTEX_1)


def test_improved_no_edges():
    m = DistanceMatrix.from_rows([[0, None], [None, 0]])
    dist, stats = fw_improved(m)
    assert dist == m and stats.attempts_total == 0


def test_improved_natural_matches_classic(example_matrix):
    dist, stats = fw_improved(example_matrix, OrderingStrategy.NATURAL)
    assert dist == fw_classic(example_matrix)[0]
    assert stats.k_order == [0, 1, 2, 3, 4]
    # per-iteration counts from the plain-Python transcription in conftest
    assert stats.attempts_per_iteration == [8, 16, 16, 16, 16]


def test_improved_does_not_mutate_input(example_matrix):
    before = example_matrix.cells.copy()
    fw_improved(example_matrix)
    assert np.array_equal(example_matrix.cells, before)


def test_rejects_nonzero_diagonal():
    with pytest.raises(ValueError):
        fw_improved(DistanceMatrix.from_rows([[1]]))


def test_detect_negative_cycle_none(example_final):
    assert detect_negative_cycle(example_final) is None
    assert detect_negative_cycle(DistanceMatrix.from_rows([[0]])) is None


def test_detect_negative_cycle_two_cycle():
    dist, _ = fw_classic(DistanceMatrix.from_rows([[0, 1], [-3, 0]]))
    assert dist[0, 0] == -2
    assert detect_negative_cycle(dist) == 0


def test_tie_break_lowest_id():
    # all four vertices start with product 1; order is by id then by product
    m = DistanceMatrix.from_rows([[0, 1, None, None], [None, 0, 1, None],
                                  [None, None, 0, 1], [1, None, None, 0]])
    _, stats = fw_improved(m, "minprod")
    assert stats.k_order[0] == 0


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    ws = draw(st.lists(st.integers(-5, 30), min_size=len(chosen), max_size=len(chosen)))
    rows = [[0 if i == j else None for j in range(n)] for i in range(n)]
    for (u, v), w in zip(chosen, ws):
        rows[u][v] = w
    return rows


@settings(max_examples=150, deadline=None)
@given(graphs(), st.sampled_from(STRATEGIES))
def test_improved_matches_transcription(rows, strategy):
    m = DistanceMatrix.from_rows(rows)
    dist, stats = fw_improved(m, strategy)
    ref, attempts, order, ins, outs = reference_improved_fw(rows, strategy is OrderingStrategy.MIN_IN_OUT_PRODUCT)
    assert dist.to_list() == ref
    assert stats.attempts_per_iteration == attempts
    assert stats.k_order == order
    adj = stats.final_adjacency
    assert adj.in_lists == ins and adj.out_lists == outs


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_oracle_equivalence_against_plain_bellman_ford(rows):
    m = DistanceMatrix.from_rows(rows)
    edges = [(i, j, w) for i, r in enumerate(rows) for j, w in enumerate(r) if i != j and w is not None]
    ref = reference_apsp(m.n, edges)
    classic, _ = fw_classic(m)
    if ref is None:
        assert detect_negative_cycle(classic) is not None
        for s in STRATEGIES:
            assert detect_negative_cycle(fw_improved(m, s)[0]) is not None
        return
    assert classic.to_list() == ref
    for s in STRATEGIES:
        assert fw_improved(m, s)[0] == classic


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10), st.sampled_from(STRATEGIES))
def test_improved_invariants(rows, strategy):
    m = DistanceMatrix.from_rows(rows)
    dist, stats = fw_improved(m, strategy, keep_snapshots=True)
    n = m.n
    assert stats.useless_attempts == 0
    assert stats.attempts_total == sum(stats.attempts_per_iteration) <= n ** 3
    assert sorted(stats.k_order) == list(range(n))
    assert stats.successes_total <= stats.attempts_total
    sizes = stats.list_sizes
    # attempts are |in(k)| * |out(k)| at iteration start, and k's lists never grow mid-iteration
    assert list(sizes[:, 0] * sizes[:, 1]) == stats.attempts_per_iteration
    assert np.array_equal(sizes[:, 0], sizes[:, 2]) and np.array_equal(sizes[:, 1], sizes[:, 3])
    adj = stats.final_adjacency
    assert adj.is_mirrored() and not adj.has_duplicates()
    if detect_negative_cycle(dist) is None:
        finite = int(dist.finite_mask().sum()) - n
        assert stats.list_totals == (finite, finite)
    prev = m.cells
    for snap in stats.snapshots:
        assert np.all(snap <= prev)
        prev = snap


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=8))
def test_classic_invariants(rows):
    m = DistanceMatrix.from_rows(rows)
    dist, stats = fw_classic(m, keep_snapshots=True)
    assert stats.attempts_total == m.n ** 3
    assert stats.attempts_per_iteration == [m.n ** 2] * m.n
    prev = m.cells
    for snap in stats.snapshots:
        assert np.all(snap <= prev)
        prev = snap
