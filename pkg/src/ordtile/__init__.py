"""Perfect H-tilings in vertex-ordered graphs."""

from .core import OrderedGraph, mirror, min_degree, parse_ordered_graph
from .embed import Embedding, Outcome, Tiling, find_embedding, perfect_tiling, verify_tiling
from .profile import PatternProfile, compute_profile

__all__ = [
    "Embedding",
    "OrderedGraph",
    "Outcome",
    "PatternProfile",
    "Tiling",
    "compute_profile",
    "find_embedding",
    "min_degree",
    "mirror",
    "parse_ordered_graph",
    "perfect_tiling",
    "verify_tiling",
]

__version__ = "0.1.0"
