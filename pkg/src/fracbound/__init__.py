"""Exact fractional chromatic numbers of vertex-weighted graphs, the upper
bounds B1..B5, colourings that realise them, and the worst-case ratios
beta_i(G)."""

from .bounds import all_bounds, b1, b2, b3, b3_applicable, b4, b5, bound
from .colorers import color, color_b1, color_b2, color_b3, color_b4, color_b5, color_sorted_greedy
from .errors import DomainError, GraphParseError, PreconditionError, SizeLimitError
from .graph import Graph, WeightedGraph
from .invariants import BetaResult, beta1, beta3, beta4, beta5
from .lp import FractionalColoring, LpSolution, chi_f, coloring_from_lp, verify_coloring
from .numeric import IntervalSet, MeasureMap, build_nesting_map

__version__ = "0.1.0"
