"""Normal o-graphs: E-data, moves, dual triangulations and homology."""
from .ecore import (EDataError, EDatum, ParseError, ValidationError, canonicalize, isomorphic,
                    parse, serialize)
from .homology import homology
from .rewrite import apply, catalog, find_matches, get_rule, run_script
from .triangulate import is_closed_normal, to_triangulation

__all__ = [
    "EDataError", "EDatum", "ParseError", "ValidationError", "apply", "canonicalize",
    "catalog", "find_matches", "get_rule", "homology", "is_closed_normal", "isomorphic",
    "parse", "run_script", "serialize", "to_triangulation",
]
