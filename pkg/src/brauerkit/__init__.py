"""Exact computations in Brauer algebras and their action on orthogonal tensor space."""

from .diagram import (
    BrauerDiagram,
    StrandMismatchError,
    all_diagrams,
    compose,
    generator_e,
    generator_s,
    identity_diagram,
    parse_diagram,
    perm_diagram,
    star,
)
from .algebra import (
    AlgebraElement,
    alt_interval,
    apply_star,
    element,
    ideal_membership,
    ideal_span,
    presentation_check,
    reduce_mod_p,
    specialize_delta,
)
from .exactalg import GF, QQ, QQ_DELTA, Ring, Subspace, subspace_equal

__version__ = "0.1.0"

__all__ = [
    "BrauerDiagram", "StrandMismatchError", "all_diagrams", "compose", "generator_e",
    "generator_s", "identity_diagram", "parse_diagram", "perm_diagram", "star",
    "AlgebraElement", "alt_interval", "apply_star", "element", "ideal_membership",
    "ideal_span", "presentation_check", "reduce_mod_p", "specialize_delta",
    "GF", "QQ", "QQ_DELTA", "Ring", "Subspace", "subspace_equal",
]
