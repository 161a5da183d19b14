"""Degree-distance graph polynomials, their root-indices, and family-level
discrimination, correlation and sensitivity reports."""

from .backend import active_backend, available_backends, set_backend
from .families import FamilySpec, connected_graphs, enumerate_family, free_trees
from .graph6 import parse_graph6, write_graph6
from .graphs import (
    DistanceSpectrum,
    Graph,
    GraphError,
    KINDS,
    all_pairs_distances,
    complete_graph,
    cycle_graph,
    from_edge_list,
    is_connected,
    line_graph,
    parse_edge_list,
    path_graph,
    spectrum,
    star_graph,
    wheel_graph,
)
from .iso import CanonicalForm, canonical_form, canonical_graph, edge_addition_neighborhood, is_isomorphic
from .metrics import (
    INDEX_IDS,
    FamilyResult,
    SensitivityRow,
    discrimination,
    family_sensitivity,
    family_values,
    graph_indices,
    graph_sensitivity,
    pearson,
)
from .polynomials import (
    GraphFamily,
    Polynomial,
    PolynomialError,
    build,
    classic_index,
    closed_form,
    family_graph,
    max_coefficient,
    polynomial,
)
from .roots import RootDomainError, RootResult, complete_graph_root, lower_bound, root_index, root_indices

__version__ = "0.1.0"

__all__ = [
    "active_backend",
    "available_backends",
    "set_backend",
    "FamilySpec",
    "connected_graphs",
    "enumerate_family",
    "free_trees",
    "parse_graph6",
    "write_graph6",
    "DistanceSpectrum",
    "Graph",
    "GraphError",
    "KINDS",
    "all_pairs_distances",
    "complete_graph",
    "cycle_graph",
    "from_edge_list",
    "is_connected",
    "line_graph",
    "parse_edge_list",
    "path_graph",
    "spectrum",
    "star_graph",
    "wheel_graph",
    "CanonicalForm",
    "canonical_form",
    "canonical_graph",
    "edge_addition_neighborhood",
    "is_isomorphic",
    "INDEX_IDS",
    "FamilyResult",
    "SensitivityRow",
    "discrimination",
    "family_sensitivity",
    "family_values",
    "graph_indices",
    "graph_sensitivity",
    "pearson",
    "GraphFamily",
    "Polynomial",
    "PolynomialError",
    "build",
    "classic_index",
    "closed_form",
    "family_graph",
    "max_coefficient",
    "polynomial",
    "RootDomainError",
    "RootResult",
    "complete_graph_root",
    "lower_bound",
    "root_index",
    "root_indices",
    "__version__",
]
