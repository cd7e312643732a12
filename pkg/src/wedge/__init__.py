"""Edge domination, equimatchability and well-edge-dominated graphs on small inputs."""

from .graph import (
    Bipartition,
    Graph,
    GraphError,
    GraphFormatError,
    SizeLimitError,
    from_edge_list,
    parse_graph6,
    serialize_graph6,
    to_graph6,
)
from .matching import (
    EdgeSet,
    edge_domination_number,
    is_equimatchable,
    is_well_edge_dominated,
    matching_number,
)
from .recognizer import Classification, classify_one_triangle

__all__ = [
    "Bipartition",
    "Classification",
    "EdgeSet",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "SizeLimitError",
    "classify_one_triangle",
    "edge_domination_number",
    "from_edge_list",
    "is_equimatchable",
    "is_well_edge_dominated",
    "matching_number",
    "parse_graph6",
    "serialize_graph6",
    "to_graph6",
]
