"""Exact computation of abelian returns to prefixes of Sturmian words.

The main entry points are :func:`apr_set`, which runs the continued-fraction
renormalisation, :func:`apr_cardinality` for the closed-form size, and
:func:`apr_bruteforce`, an independent scan of a long prefix of the word.
"""

from .contfrac import ContinuedFraction, Convergents, cf_to_field, convergents, field_to_cf
from .delta import DeltaValue, MinimalIndices, delta, delta_values, minimal_indices
from .errors import (IncompatibleFieldError, InfiniteResult, InsufficientData,
                     IterationCapExceeded, ParseError, RationalSlopeError, SturmianError)
from .field import FieldElement, parse_field
from .iet import (InductionResult, IntervalExchange, Piece, code_orbit, induce,
                  inverse_iterate_alpha, itineraries_zero_beta, make_two_iet)
from .oracle import OracleReport, abelian_returns_of_factor, apr_bruteforce
from .returns import (ReturnSetResult, apr_cardinality, apr_set, characteristic_apr,
                      light_or_heavy, r_prime_set, r_set)
from .words import BinaryWord, exchange_morphism

__version__ = "0.1.0"

__all__ = [
    "BinaryWord", "ContinuedFraction", "Convergents", "DeltaValue", "FieldElement",
    "IncompatibleFieldError", "InductionResult", "InfiniteResult", "InsufficientData",
    "IntervalExchange", "IterationCapExceeded", "MinimalIndices", "OracleReport", "ParseError",
    "Piece", "RationalSlopeError", "ReturnSetResult", "SturmianError",
    "abelian_returns_of_factor", "apr_bruteforce", "apr_cardinality", "apr_set",
    "cf_to_field", "characteristic_apr", "code_orbit", "convergents", "delta", "delta_values",
    "exchange_morphism", "field_to_cf", "induce", "inverse_iterate_alpha",
    "itineraries_zero_beta", "light_or_heavy", "make_two_iet", "minimal_indices",
    "parse_field", "r_prime_set", "r_set",
]
