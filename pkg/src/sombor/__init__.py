"""Sombor index of small graphs: exact evaluation, extremal families and
exhaustive checks of the corresponding bounds."""

from .canon import are_isomorphic, canonical_code, canonical_form
from .errors import SomborError
from .formats import decode_graph6, encode_graph6
from .graph import Graph, PendentPath, transform_contract_pendant, transform_path_shift
from .index import RadicalSum, edge_term, so_equal, sombor_exact, sombor_index, theta

__all__ = [
    "Graph",
    "PendentPath",
    "RadicalSum",
    "SomborError",
    "are_isomorphic",
    "canonical_code",
    "canonical_form",
    "decode_graph6",
    "edge_term",
    "encode_graph6",
    "so_equal",
    "sombor_exact",
    "sombor_index",
    "theta",
    "transform_contract_pendant",
    "transform_path_shift",
]
