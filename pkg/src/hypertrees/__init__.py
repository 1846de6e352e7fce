"""k-uniform hypertrees: recognition, constructions and edge-count bounds."""
from hypertrees.core import (
    Hypergraph,
    class_decomposition,
    check_class_inequalities,
    new_hypergraph,
    tight_line_graph,
)
from hypertrees.recognition import (
    classify,
    find_chain,
    find_semicycle,
    find_tight_cycle,
    focus_vertices,
    is_chain_connected,
    is_edge_maximal,
    is_edge_minimal,
    is_hypertree,
    is_l_geometric,
    is_l_hypertree,
    max_chain_length,
)
from hypertrees.bounds import (
    check_l_hypertree_bound,
    check_lower_bound,
    check_upper_bound,
    phi_assignment,
    phi_multi,
)
from hypertrees.enumeration import conjecture_probe, enumerate_all
from hypertrees.kernels import backend_name, use_backend

__version__ = "0.1.0"

__all__ = [
    "Hypergraph", "new_hypergraph", "tight_line_graph", "class_decomposition",
    "check_class_inequalities", "classify", "find_chain", "find_semicycle",
    "find_tight_cycle", "focus_vertices", "is_chain_connected", "is_edge_maximal",
    "is_edge_minimal", "is_hypertree", "is_l_geometric", "is_l_hypertree",
    "max_chain_length", "check_lower_bound", "check_upper_bound",
    "check_l_hypertree_bound", "phi_assignment", "phi_multi", "enumerate_all",
    "conjecture_probe", "backend_name", "use_backend",
]
