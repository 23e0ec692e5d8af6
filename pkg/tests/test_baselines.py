import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from apsp import (
    AdjacencyListGraph,
    EdgeListGraph,
    GenSpec,
    NegativeCycleError,
    NegativeEdgeError,
    OpCounters,
    Regime,
    bellman_ford,
    dijkstra_apsp,
    dijkstra_sssp,
    fw_classic,
    generate,
    johnson,
    johnson_potentials,
    matrix_from_edges,
)
from apsp.baselines import _dijkstra_matrix
from conftest import INF, EXAMPLE_FINAL, reference_apsp


def adj(n, edges):
    return AdjacencyListGraph.from_edges(EdgeListGraph(n, tuple(edges)))


TWO_CYCLE = adj(2, [(0, 1, 1), (1, 0, -3)])
THREE_CYCLE = adj(3, [(0, 1, 1), (1, 2, 1), (2, 0, -3)])


def test_csr_layout():
    g = adj(3, [(2, 0, 5), (0, 1, 1), (0, 2, 4)])
    assert g.indptr.tolist() == [0, 2, 2, 3]
    assert g.out(0) == [(1, 1), (2, 4)]
    assert g.out(1) == []


def test_dijkstra_path():
    res = dijkstra_sssp(adj(3, [(0, 1, 1), (1, 2, 2)]), 0)
    assert res.dist == [0, 1, 3]


def test_dijkstra_unreachable():
    assert dijkstra_sssp(adj(2, []), 0).dist == [0, INF]


def test_dijkstra_rejects_negative_edge():
    with pytest.raises(NegativeEdgeError) as info:
        dijkstra_sssp(adj(2, [(0, 1, 3), (1, 0, -1)]), 0)
    assert info.value.edge == (1, 0, -1)


def test_dijkstra_bad_source():
    with pytest.raises(ValueError):
        dijkstra_sssp(adj(2, []), 2)


def test_dijkstra_rows_match_classic_fw():
    g = generate(GenSpec(n=16, regime=Regime.TWO_LGN_N, seed=3))
    ref, _ = fw_classic(matrix_from_edges(g))
    a = AdjacencyListGraph.from_edges(g)
    for s in range(16):
        assert dijkstra_sssp(a, s).dist == ref.to_list()[s]


def test_dijkstra_apsp_single_vertex():
    assert dijkstra_apsp(adj(1, [])).to_list() == [[0]]


def test_dijkstra_apsp_no_edges():
    d = dijkstra_apsp(adj(3, [])).to_list()
    assert d == [[0, INF, INF], [INF, 0, INF], [INF, INF, 0]]


def test_dijkstra_apsp_matches_classic_fw():
    g = generate(GenSpec(n=24, regime=Regime.LGN_N, weight_min=0, weight_max=9, seed=9))
    assert dijkstra_apsp(AdjacencyListGraph.from_edges(g)) == fw_classic(matrix_from_edges(g))[0]


def test_dijkstra_settles_each_vertex_once_in_distance_order():
    g = AdjacencyListGraph.from_edges(generate(GenSpec(n=40, regime=Regime.FOUR_N, seed=1)))
    for s in range(g.n):
        res = dijkstra_sssp(g, s)
        assert len(set(res.settled_order)) == len(res.settled_order)
        ds = [res.dist[v] for v in res.settled_order]
        assert ds == sorted(ds)
        assert set(res.settled_order) == {v for v, d in enumerate(res.dist) if d != INF}


def test_dijkstra_counters():
    counters = OpCounters()
    dijkstra_sssp(adj(3, [(0, 1, 5), (0, 2, 1), (2, 1, 1)]), 0, counters)
    # vertex 1 is pushed at 5 then decreased to 2 through vertex 2
    assert (counters.heap_pushes, counters.heap_pops, counters.decrease_keys, counters.edge_scans) == (3, 3, 1, 3)


def test_parallel_dijkstra_matches_serial():
    g = AdjacencyListGraph.from_edges(generate(GenSpec(n=50, regime=Regime.TWO_N, seed=4)))
    c1, c4 = OpCounters(), OpCounters()
    serial = _dijkstra_matrix(g, c1, 1)
    parallel = _dijkstra_matrix(g, c4, 4)
    assert np.array_equal(serial, parallel)
    assert c1 == c4


def test_bellman_ford_example_row_4(example_matrix):
    res = bellman_ford(AdjacencyListGraph.from_matrix(example_matrix), 3)
    assert res.dist == EXAMPLE_FINAL[3] == [-1, 1, 2, 0, -1]


@pytest.mark.parametrize("g, cycle", [(TWO_CYCLE, {0, 1}), (THREE_CYCLE, {0, 1, 2})])
def test_bellman_ford_negative_cycle(g, cycle):
    with pytest.raises(NegativeCycleError) as info:
        bellman_ford(g, 0)
    assert info.value.vertex in cycle


def test_bellman_ford_witness_is_on_cycle():
    # cycle 2 -> 3 -> 2 is negative, reached through 0 -> 1 -> 2
    g = adj(4, [(0, 1, 1), (1, 2, 1), (2, 3, -2), (3, 2, 1)])
    with pytest.raises(NegativeCycleError) as info:
        bellman_ford(g, 0)
    assert info.value.vertex in {2, 3}


def test_bellman_ford_unreachable_cycle_ignored():
    g = adj(4, [(0, 1, 1), (2, 3, 1), (3, 2, -5)])
    assert bellman_ford(g, 0).dist == [0, 1, INF, INF]


def test_bellman_ford_single_vertex():
    assert bellman_ford(adj(1, []), 0).dist == [0]


def test_johnson_worked_example(example_matrix, example_final):
    assert johnson(AdjacencyListGraph.from_matrix(example_matrix)) == example_final


def test_johnson_equals_dijkstra_on_nonnegative():
    g = AdjacencyListGraph.from_edges(generate(GenSpec(n=30, regime=Regime.TWO_LGN_N, seed=2)))
    assert johnson(g) == dijkstra_apsp(g)
    assert np.all(johnson_potentials(g).h == 0)


@pytest.mark.parametrize("g", [TWO_CYCLE, THREE_CYCLE])
def test_johnson_negative_cycle(g):
    with pytest.raises(NegativeCycleError):
        johnson(g)


@st.composite
def edge_graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    ws = draw(st.lists(st.integers(-4, 25), min_size=len(chosen), max_size=len(chosen)))
    return n, [(u, v, w) for (u, v), w in zip(chosen, ws)]


@settings(max_examples=150, deadline=None)
@given(edge_graphs())
def test_johnson_against_plain_reference(graph):
    n, edges = graph
    g = adj(n, edges)
    ref = reference_apsp(n, edges)
    if ref is None:
        with pytest.raises(NegativeCycleError):
            johnson(g)
        return
    assert johnson(g).to_list() == ref
    h = johnson_potentials(g).h
    assert np.all(g.weights + h[g.src] - h[g.indices] >= 0)


@settings(max_examples=100, deadline=None)
@given(edge_graphs(), st.integers(0, 9))
def test_bellman_ford_fixed_point(graph, source):
    n, edges = graph
    source = source % n
    try:
        res = bellman_ford(adj(n, edges), source)
    except NegativeCycleError:
        assert reference_apsp(n, edges) is None
        return
    for u, v, w in edges:
        assert not res.dist[u] + w < res.dist[v]
