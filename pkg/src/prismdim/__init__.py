"""Metric dimension toolkit for the P(n,2)-with-prism graph family."""

from prismdim.errors import (
    BadSkip,
    BudgetExceeded,
    DisconnectedGraph,
    GraphError,
    LemmaViolation,
    NotApplicable,
    NotResolving,
    SelfLoop,
    TooSmall,
    VertexOutOfRange,
)
from prismdim.graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    closed_neighborhood,
    graph_from_edge_list,
    is_connected,
    open_neighborhood,
)

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "BadSkip",
    "BudgetExceeded",
    "DisconnectedGraph",
    "DistanceMatrix",
    "Graph",
    "GraphError",
    "LemmaViolation",
    "NotApplicable",
    "NotResolving",
    "SelfLoop",
    "TooSmall",
    "VertexOutOfRange",
    "all_pairs_distances",
    "closed_neighborhood",
    "graph_from_edge_list",
    "is_connected",
    "open_neighborhood",
]
