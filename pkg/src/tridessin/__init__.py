"""Dessins d'enfants on rational triangular billiards surfaces.

Construct the bicolored edge graph of the unfolded triangle (p0, p1, p2),
compute its monodromy group by explicit closure, and verify the structure
(C_n x C_{n/alpha}) : C_3 by brute force.
"""

from .dessin import (
    DessinStats,
    EdgeLabel,
    build_sigma0,
    build_sigma1,
    export_dot,
    is_connected,
    stats,
)
from .errors import ConsistencyError, InvalidTripleError, SizeLimitExceeded
from .groups import (
    GroupClosure,
    TheoremReport,
    abelian_structure,
    closure,
    conjugation_checks,
    intersection_trivial,
    is_abelian,
    is_normal,
    product_covers,
    verify_theorem,
)
from .lattice import ModVector, phi_generators, phi_of_word, span_order, verify_row_reduction
from .perms import Perm, compose, cycle_decomposition, cycle_string, inverse, order
from .triples import Triple, cross_congruences, enumerate_triples, predicted_orders, reduce

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "DessinStats",
    "EdgeLabel",
    "GroupClosure",
    "InvalidTripleError",
    "ModVector",
    "Perm",
    "SizeLimitExceeded",
    "TheoremReport",
    "Triple",
    "abelian_structure",
    "build_sigma0",
    "build_sigma1",
    "closure",
    "compose",
    "conjugation_checks",
    "cross_congruences",
    "cycle_decomposition",
    "cycle_string",
    "enumerate_triples",
    "export_dot",
    "intersection_trivial",
    "inverse",
    "is_abelian",
    "is_connected",
    "is_normal",
    "order",
    "phi_generators",
    "phi_of_word",
    "predicted_orders",
    "product_covers",
    "reduce",
    "span_order",
    "stats",
    "verify_row_reduction",
    "verify_theorem",
]
