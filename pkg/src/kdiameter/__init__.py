"""Interchange-constrained shortest paths and diameters of edge-colored transit graphs."""

__version__ = "0.1.0"

from .core import ColoredGraph, Edge, PathResult, build_graph, is_connected, line_count, total_length
from .indicators import (
    DiSequence,
    IndicatorReport,
    dc_sequence,
    di_sequence,
    diameter,
    directness,
    extension,
    full_report,
)
from .netgen import paper_network, random_line_network, random_transit_network
from .pathfind import (
    all_budget_distances,
    interchange_constrained_shortest_path,
    min_interchanges_among_shortest_paths,
)

__all__ = [
    "ColoredGraph", "Edge", "PathResult", "build_graph", "is_connected", "line_count",
    "total_length", "DiSequence", "IndicatorReport", "dc_sequence", "di_sequence", "diameter",
    "directness", "extension", "full_report", "paper_network", "random_line_network",
    "random_transit_network", "all_budget_distances", "interchange_constrained_shortest_path",
    "min_interchanges_among_shortest_paths",
]
