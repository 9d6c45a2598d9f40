"""Services module."""

from .backbone import SolveMode, SolveResult, solve, verify_backbone_coloring
from .dimacs import parse_dimacs, write_dimacs
from .graph import Graph, from_edges

__all__ = [
    "Graph",
    "from_edges",
    "parse_dimacs",
    "write_dimacs",
    "SolveMode",
    "SolveResult",
    "solve",
    "verify_backbone_coloring",
]
