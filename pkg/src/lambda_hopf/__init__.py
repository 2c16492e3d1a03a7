"""Exact arithmetic for the weight-lambda divided power Hopf algebra."""

from .binomial import binom, binom_classical
from .hopf import (
    GradedElement,
    HopfContext,
    LinearEndo,
    TensorElement2,
    TensorElement3,
    make_context,
    symbolic_context,
)
from .ring import (
    IntegerRing,
    ModularRing,
    PolyQuotientRing,
    RationalRing,
    Ring,
    RingElement,
    SymbolicLambdaRing,
    parse_element,
    parse_ring,
    specialize,
)

__all__ = [
    "GradedElement",
    "HopfContext",
    "IntegerRing",
    "LinearEndo",
    "ModularRing",
    "PolyQuotientRing",
    "RationalRing",
    "Ring",
    "RingElement",
    "SymbolicLambdaRing",
    "TensorElement2",
    "TensorElement3",
    "binom",
    "binom_classical",
    "make_context",
    "parse_element",
    "parse_ring",
    "specialize",
    "symbolic_context",
]
