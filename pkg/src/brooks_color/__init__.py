"""Certified graph coloring: a k-coloring, or a clique / odd cycle proving none exists."""

from .certify import (
    chromatic_number_bruteforce,
    dsatur_baseline,
    exists_k_coloring_bruteforce,
    verify_coloring,
    verify_obstruction,
)
from .engine import (
    EngineStats,
    color_with,
    maximal_independent_set,
    peel_reducible,
    resolve_regular_component,
    shrink_to_induced_odd_cycle,
    two_color,
)
from .extension import extend_over_D, extend_over_T, list_color_connected
from .generate import GenSpec, generate
from .graph import (
    Graph,
    connected_components,
    from_edge_list,
    induced_subgraph,
    is_clique,
    neighborhood_of_set,
    parse_dimacs,
    serialize_dimacs,
)
from .outcome import Clique, ContractError, InvariantError, OddCycle, Outcome

__version__ = "0.1.0"
