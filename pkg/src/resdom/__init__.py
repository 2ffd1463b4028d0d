"""Exact computation of the distance k-resolving domination number and its companions.

The core objects are :class:`Graph` (an immutable simple graph), the exact
solvers (:func:`minimum_set`, :func:`all_invariants`), the family generators
in :mod:`resdom.families`, and the verification harness in :mod:`resdom.verify`.
"""

from .errors import (
    ConnectivityError,
    DomainError,
    InfeasibleTripleError,
    ParameterError,
    ParseError,
    ResdomError,
    SizeGuardError,
)
from .families import (
    FamilyParams,
    TripleTarget,
    certify,
    claimed_invariants,
    extremal_gr,
    generate_family,
    predicted_gamma_rk_cycle,
    predicted_gamma_rk_path,
    predicted_max_order,
    realize_triple,
)
from .graph import (
    Graph,
    all_pairs_distances,
    complement,
    from_edge_list,
    generate_basic,
    is_connected,
    is_isomorphic,
    metrics,
    to_edge_list,
)
from .solvers import (
    Predicate,
    Solver,
    WitnessedInvariant,
    all_invariants,
    find_set,
    minimum_set,
    naive_minimum_set,
)

__version__ = "0.1.0"

__all__ = [
    "ConnectivityError", "DomainError", "InfeasibleTripleError", "ParameterError", "ParseError",
    "ResdomError", "SizeGuardError", "FamilyParams", "TripleTarget", "certify",
    "claimed_invariants", "extremal_gr", "generate_family", "predicted_gamma_rk_cycle",
    "predicted_gamma_rk_path", "predicted_max_order", "realize_triple", "Graph",
    "all_pairs_distances", "complement", "from_edge_list", "generate_basic", "is_connected",
    "is_isomorphic", "metrics", "to_edge_list", "Predicate", "Solver", "WitnessedInvariant",
    "all_invariants", "find_set", "minimum_set", "naive_minimum_set",
]
