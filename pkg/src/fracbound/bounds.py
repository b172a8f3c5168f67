"""Closed-form upper bounds B1..B5 on the fractional chromatic number.

All five are maxima over vertices of local expressions in x(v), x(N(v)),
the lightest neighbour and the degree.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .graph import WeightedGraph, is_complete, is_connected, is_odd_cycle, weight_of_set

BOUND_IDS = ("b1", "b2", "b3", "b4", "b5")


def _closed(gx: WeightedGraph, v: int) -> Fraction:
    return gx.weights[v] + weight_of_set(gx, gx.graph.neighbors(v))


def _lightest_neighbor(gx: WeightedGraph, v: int) -> Fraction:
    nbrs = gx.graph.neighbors(v)
    if not nbrs:
        raise PreconditionError(f"vertex {v} has no neighbours; the lightest-neighbour term is undefined")
    return min(gx.weights[w] for w in nbrs)


def b1(gx: WeightedGraph) -> Fraction:
    return max((_closed(gx, v) for v in gx.graph.vertices), default=Fraction(0))


def b2(gx: WeightedGraph, v1: int = 0) -> Fraction:
    g = gx.graph
    if not 0 <= v1 < g.n:
        raise PreconditionError(f"designated vertex {v1} out of range")
    if not is_connected(g):
        raise PreconditionError("B2 needs a connected graph")
    best = _closed(gx, v1)
    for v in g.vertices:
        if v != v1:
            best = max(best, _closed(gx, v) - _lightest_neighbor(gx, v))
    return best


def b3(gx: WeightedGraph) -> Fraction:
    """Formula value; see :func:`b3_applicable` for when it bounds chi_f."""
    return max(
        (_closed(gx, v) - _lightest_neighbor(gx, v) for v in gx.graph.vertices),
        default=Fraction(0),
    )


def b3_applicable(g) -> bool:
    return is_connected(g) and g.n >= 2 and not is_complete(g) and not is_odd_cycle(g)


def b4(gx: WeightedGraph) -> Fraction:
    return max((gx.weights[v] * (gx.graph.degree(v) + 1) for v in gx.graph.vertices), default=Fraction(0))


def b5(gx: WeightedGraph) -> Fraction:
    return max(
        (min(_closed(gx, v), gx.weights[v] * (gx.graph.degree(v) + 1)) for v in gx.graph.vertices),
        default=Fraction(0),
    )


def bound(gx: WeightedGraph, bound_id: str, v1: int = 0) -> Fraction:
    if bound_id == "b2":
        return b2(gx, v1)
    try:
        return {"b1": b1, "b3": b3, "b4": b4, "b5": b5}[bound_id](gx)
    except KeyError:
        raise PreconditionError(f"unknown bound {bound_id!r}") from None


def all_bounds(gx: WeightedGraph, v1: int = 0) -> dict[str, Fraction | bool | None]:
    """Every bound at once; B2/B3 are None where their formulas are undefined."""
    g = gx.graph
    out: dict[str, Fraction | bool | None] = {"b1": b1(gx)}
    formula_ok = is_connected(g) and g.n >= 2
    out["b2"] = b2(gx, v1) if formula_ok else None
    out["b3"] = b3(gx) if formula_ok else None
    out["b3_applicable"] = b3_applicable(g)
    out["b4"] = b4(gx)
    out["b5"] = b5(gx)
    return out
