"""Oriented Ramsey numbers r(I_m, L_n): witnesses, exhaustive search and bounds."""

from .bounds import BoundEntry, appendix_v, best_bounds, quadratic_upper
from .constructions import CirculantSpec, build_circulant, enumerate_cayley, witness
from .detectors import (
    Certificate,
    find_independent_set,
    find_transitive_tournament,
    independence_number,
    is_free,
)
from .digraph import OrientedGraph, canonical_code, parse_arc_list, format_arc_list
from .search import SearchConfig, cayley_scan, extremal_search, verify_ramsey_value

__all__ = [
    "BoundEntry",
    "Certificate",
    "CirculantSpec",
    "OrientedGraph",
    "SearchConfig",
    "appendix_v",
    "best_bounds",
    "build_circulant",
    "canonical_code",
    "cayley_scan",
    "enumerate_cayley",
    "extremal_search",
    "find_independent_set",
    "find_transitive_tournament",
    "format_arc_list",
    "independence_number",
    "is_free",
    "parse_arc_list",
    "quadratic_upper",
    "verify_ramsey_value",
    "witness",
]
