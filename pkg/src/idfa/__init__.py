"""Incomplete DFAs for finite languages.

Partial-transition automata with union, intersection, complement,
concatenation, star and reversal; refined state/transition measures;
upper-bound formulas and witness families; and a harness that checks the
bounds against minimized constructions.
"""

from .automata import (
    AutomatonError,
    Dfa,
    FiniteLanguage,
    InfiniteLanguageError,
    Nfa,
    accepts,
    canonical,
    complete,
    complete_state_count,
    determinize,
    enumerate_language,
    is_acyclic,
    is_isomorphic,
    minimize,
    trim,
    validate,
    word,
)
from .measures import MeasureSet, isc, itc, level, measure
from .model_io import ParseError, parse_dfa, read_dfa, serialize_dfa, write_dfa
from .ops import complement, concat, intersection, reversal, star, union

__version__ = "0.1.0"

__all__ = [
    "AutomatonError",
    "Dfa",
    "FiniteLanguage",
    "InfiniteLanguageError",
    "MeasureSet",
    "Nfa",
    "ParseError",
    "accepts",
    "canonical",
    "complement",
    "complete",
    "complete_state_count",
    "concat",
    "determinize",
    "enumerate_language",
    "intersection",
    "is_acyclic",
    "is_isomorphic",
    "isc",
    "itc",
    "level",
    "measure",
    "minimize",
    "parse_dfa",
    "read_dfa",
    "reversal",
    "serialize_dfa",
    "star",
    "trim",
    "union",
    "validate",
    "word",
    "write_dfa",
]
