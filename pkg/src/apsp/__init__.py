"""All-pairs shortest paths: Floyd-Warshall with useless relaxations skipped,
plus classic Floyd-Warshall, Dijkstra, Bellman-Ford and Johnson baselines."""

from .baselines import (
    AdjacencyListGraph,
    NegativeCycleError,
    NegativeEdgeError,
    OpCounters,
    Potentials,
    SsspResult,
    bellman_ford,
    dijkstra_apsp,
    dijkstra_sssp,
    johnson,
    johnson_potentials,
)
from .estimators import DijkstraAPSP, FloydWarshall, ImprovedFloydWarshall, Johnson
from .floyd import OrderingStrategy, RelaxStats, detect_negative_cycle, fw_classic, fw_improved
from .generate import GenSpec, Regime, generate, regime_edge_count
from .graph import (
    INF,
    DistanceMatrix,
    DynAdjacency,
    EdgeListGraph,
    GraphValidationError,
    adjacency_from_matrix,
    edges_from_matrix,
    matrix_from_edges,
    weight_add,
)
from .io import FormatError, read_edges, read_matrix, write_edges, write_matrix

__version__ = "0.1.0"

__all__ = [
    "AdjacencyListGraph", "DijkstraAPSP", "DistanceMatrix", "DynAdjacency", "EdgeListGraph",
    "FloydWarshall", "FormatError", "GenSpec", "GraphValidationError", "INF", "ImprovedFloydWarshall",
    "Johnson", "NegativeCycleError", "NegativeEdgeError", "OpCounters", "OrderingStrategy",
    "Potentials", "Regime", "RelaxStats", "SsspResult", "adjacency_from_matrix", "bellman_ford",
    "detect_negative_cycle", "dijkstra_apsp", "dijkstra_sssp", "edges_from_matrix", "fw_classic",
    "fw_improved", "generate", "johnson", "johnson_potentials", "matrix_from_edges", "read_edges",
    "read_matrix", "regime_edge_count", "weight_add", "write_edges", "write_matrix",
]
