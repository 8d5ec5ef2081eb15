"""Finite models and exhaustive structural checks for the zero-set
intersection graph of C(X) on a finite discrete space, and its line graph."""

__version__ = "0.1.0"

from .graphs import (Graph, INF, connected_components, cycle_length_matrix,
                     cycle_through_pair_length, diameter, distance,
                     distance_matrix, dominates, domination_number,
                     eccentricity, girth, is_chordal, is_complemented,
                     is_hypertriangulated, is_triangulated, naive_chordal,
                     naive_cycle_through_pair, naive_girth, orthogonal,
                     radius, shortest_path, smallest_cycle_through_pair)
from .linegraph import (EdgeVertex, LineGraph, build_line_graph,
                        cross_zero_pattern, shares_endpoint)
from .model import (FiniteSpace, FunctionVertex, ModelConfig, ZeroSet,
                    adjacent, build_gamma, complement_class,
                    enumerate_vertices, vertex_index)
from .verify import (Status, TheoremCheck, VerificationReport, default_sweep,
                     run_all)

__all__ = [
    "__version__",
    "Graph", "INF",
    "connected_components", "cycle_length_matrix",
    "cycle_through_pair_length", "diameter", "distance", "distance_matrix",
    "dominates", "domination_number", "eccentricity", "girth", "is_chordal",
    "is_complemented", "is_hypertriangulated", "is_triangulated",
    "naive_chordal", "naive_cycle_through_pair", "naive_girth", "orthogonal",
    "radius", "shortest_path", "smallest_cycle_through_pair",
    "EdgeVertex", "LineGraph", "build_line_graph", "cross_zero_pattern",
    "shares_endpoint",
    "FiniteSpace", "FunctionVertex", "ModelConfig", "ZeroSet", "adjacent",
    "build_gamma", "complement_class", "enumerate_vertices", "vertex_index",
    "Status", "TheoremCheck", "VerificationReport", "default_sweep",
    "run_all",
]
