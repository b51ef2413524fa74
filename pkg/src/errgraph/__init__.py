"""Ball intersections and vertex reconstruction in graphs, centred on the transposition Cayley graph."""

from .classic import HammingView, JohnsonView, SrgFamily, hamming_closed, johnson_closed
from .counts import ball_size, denes_count, restricted_stirling, sphere_size, stirling_first_signless
from .errors import ConsistencyError, InconsistentObservations, InfeasibleError, UnreachableError
from .graph import ExplicitGraph, GraphView, NResult, materialize, n_of_gamma
from .perm import CycleType, Permutation, cayley_distance, parse_permutation
from .reconstruct import ObservationSet, reconstruct_intersection
from .symt import SymnTView, n_sym_brute, n_sym_closed, table1

__all__ = [
    "ConsistencyError",
    "CycleType",
    "ExplicitGraph",
    "GraphView",
    "HammingView",
    "InconsistentObservations",
    "InfeasibleError",
    "JohnsonView",
    "NResult",
    "ObservationSet",
    "Permutation",
    "SrgFamily",
    "SymnTView",
    "UnreachableError",
    "ball_size",
    "cayley_distance",
    "denes_count",
    "hamming_closed",
    "johnson_closed",
    "materialize",
    "n_of_gamma",
    "n_sym_brute",
    "n_sym_closed",
    "parse_permutation",
    "reconstruct_intersection",
    "restricted_stirling",
    "sphere_size",
    "stirling_first_signless",
    "table1",
]
