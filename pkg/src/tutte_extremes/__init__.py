"""Exact Tutte polynomials of multigraphs and closed forms for their extreme coefficients."""

__version__ = "0.1.0"

from .errors import CapExceededError, GraphParseError, PreconditionError, TutteError
from .graph import Multigraph, parse_graph
from .poly import BiPoly, UniPoly
from .tutte import tutte_convolution, tutte_delcon, tutte_subset

__all__ = [
    "BiPoly",
    "CapExceededError",
    "GraphParseError",
    "Multigraph",
    "PreconditionError",
    "TutteError",
    "UniPoly",
    "parse_graph",
    "tutte_convolution",
    "tutte_delcon",
    "tutte_subset",
]
