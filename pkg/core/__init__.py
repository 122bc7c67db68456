"""
Core modules for the directed metric dimension toolkit.
"""

from .digraph import UNREACHABLE, Digraph, DistanceMatrix, build_digraph, distance_matrix
from .digraph import is_strongly_connected
from .exceptions import (
    BudgetExceededError,
    DigraphError,
    DimensionUndefinedError,
    DirDimError,
    FamilyParameterError,
    SpecParseError,
)
from .family_spec import FamilyRegistry, FamilySpec
from .orientation_search import OrdReport, UndirectedGraph, compute_ord, dim_spectrum
from .resolver import ALLOW_SENTINEL, REQUIRE_STRONG, BasisResult, metric_dimension

__all__ = [
    "UNREACHABLE",
    "Digraph",
    "DistanceMatrix",
    "build_digraph",
    "distance_matrix",
    "is_strongly_connected",
    "DirDimError",
    "DigraphError",
    "DimensionUndefinedError",
    "FamilyParameterError",
    "SpecParseError",
    "BudgetExceededError",
    "FamilyRegistry",
    "FamilySpec",
    "UndirectedGraph",
    "OrdReport",
    "compute_ord",
    "dim_spectrum",
    "REQUIRE_STRONG",
    "ALLOW_SENTINEL",
    "BasisResult",
    "metric_dimension",
]
