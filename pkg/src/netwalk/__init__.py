"""netwalk: reconstruct networks from biased random-walk sequences and
measure how faithfully local properties are recovered."""

from netwalk.graph import Graph, graph_from_edge_list, largest_connected_component
from netwalk.generators import GeneratorSpec, generate
from netwalk.metrics import METRIC_NAMES, compute_metric
from netwalk.communities import Partition, detect_communities, modularity
from netwalk.dynamics import DynamicsId, WalkSequence, generate_sequence, transition_distribution
from netwalk.reconstruction import ReconstructedGraph, reconstruct, knowledge_fraction
from netwalk.analysis import pearson, spearman, nmi, matched_metric_correlation, recovery_series

__all__ = [
    "Graph",
    "GeneratorSpec",
    "generate",
    "METRIC_NAMES",
    "compute_metric",
    "Partition",
    "detect_communities",
    "modularity",
    "graph_from_edge_list",
    "largest_connected_component",
    "DynamicsId",
    "WalkSequence",
    "generate_sequence",
    "transition_distribution",
    "ReconstructedGraph",
    "reconstruct",
    "knowledge_fraction",
    "pearson",
    "spearman",
    "nmi",
    "matched_metric_correlation",
    "recovery_series",
]
