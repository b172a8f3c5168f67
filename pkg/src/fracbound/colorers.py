"""Interval assignments whose span equals each of the bounds B1..B5.

Each colourer is constructive: it hands every vertex a subset of ``[0, B)``
of measure x(v), disjoint from its neighbours' subsets, so the resulting
:class:`FractionalColoring` certifies ``chi_f <= B``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .bounds import b1, b2, b3, b4, b5
from .errors import PreconditionError
from .graph import (
    AtLeast3,
    Cut1,
    Cut2,
    WeightedGraph,
    bfs_order,
    connected_components,
    connectivity_class,
    is_complete,
    is_connected,
    is_odd_cycle,
    max_degree,
    remove_vertices,
    separating_pairs,
)
from .lp import FractionalColoring
from .numeric import EMPTY, IntervalSet, build_nesting_map

Assignment = list  # vertex -> IntervalSet | None


def _first_fit(gx: WeightedGraph, assigned: Assignment, v: int, span: Fraction) -> IntervalSet:
    blocked = EMPTY
    for w in gx.graph.neighbors(v):
        if assigned[w] is not None:
            blocked = blocked | assigned[w]
    free = blocked.complement_within(span)
    need = gx.weights[v]
    assert free.measure() >= need, f"vertex {v}: only {free.measure()} free, needs {need}"
    return free.take_prefix(need)


def _finish(gx: WeightedGraph, assigned: Assignment, span: Fraction) -> FractionalColoring:
    assert all(s is not None for s in assigned)
    return FractionalColoring(Fraction(span), tuple(assigned))


def _assign_reverse(
    gx: WeightedGraph,
    assigned: Assignment,
    span: Fraction,
    order: Sequence[int],
    include_designated: bool = True,
) -> None:
    """Colour ``order[-1], ..., order[1]`` first-fit, then ``order[0]``.

    Every vertex after the first must have an earlier neighbour in ``order``;
    that neighbour is still uncoloured when the vertex is reached.
    """
    for v in reversed(order[1:]):
        assigned[v] = _first_fit(gx, assigned, v, span)
    if include_designated:
        assigned[order[0]] = _first_fit(gx, assigned, order[0], span)


def color_b1(gx: WeightedGraph) -> FractionalColoring:
    span = b1(gx)
    assigned: Assignment = [None] * gx.n
    for v in gx.graph.vertices:
        assigned[v] = _first_fit(gx, assigned, v, span)
    return _finish(gx, assigned, span)


def color_b2(gx: WeightedGraph, v1: int = 0) -> FractionalColoring:
    span = b2(gx, v1)
    assigned: Assignment = [None] * gx.n
    _assign_reverse(gx, assigned, span, bfs_order(gx.graph, v1))
    return _finish(gx, assigned, span)


def color_sorted_greedy(gx: WeightedGraph, span: Fraction) -> FractionalColoring:
    """First-fit in ascending weight order (ties by index) inside ``[0, span)``."""
    span = Fraction(span)
    if span < b5(gx):
        raise PreconditionError("span must be at least B5 for the sorted greedy colouring")
    assigned: Assignment = [None] * gx.n
    for v in sorted(gx.graph.vertices, key=lambda v: (gx.weights[v], v)):
        assigned[v] = _first_fit(gx, assigned, v, span)
    return _finish(gx, assigned, span)


def color_b4(gx: WeightedGraph) -> FractionalColoring:
    return color_sorted_greedy(gx, b4(gx))


def color_b5(gx: WeightedGraph) -> FractionalColoring:
    return color_sorted_greedy(gx, b5(gx))


# -- B3 -------------------------------------------------------------------------

def _check_b3(gx: WeightedGraph) -> None:
    g = gx.graph
    if g.n < 3:
        raise PreconditionError("the B3 colouring needs at least 3 vertices")
    if not is_connected(g):
        raise PreconditionError("the B3 colouring needs a connected graph")
    if is_complete(g):
        raise PreconditionError("B3 is not an upper bound on complete graphs")
    if is_odd_cycle(g):
        raise PreconditionError("B3 is not an upper bound on odd cycles")


def b3_branch(g) -> str:
    """Which construction :func:`color_b3` uses: cut1, cut2, even-cycle or atleast3."""
    cls = connectivity_class(g)
    if isinstance(cls, Cut1):
        return "cut1"
    if isinstance(cls, Cut2):
        return "even-cycle" if max_degree(g) <= 2 else "cut2"
    return "atleast3"


def _b3_cutvertex(gx: WeightedGraph, span: Fraction, v1: int) -> FractionalColoring:
    g = gx.graph
    assigned: Assignment = [None] * gx.n
    comps = connected_components(g, (v for v in g.vertices if v != v1))
    for comp in comps:
        order = bfs_order(g, v1, set(comp) | {v1})
        _assign_reverse(gx, assigned, span, order, include_designated=False)
    first, second = comps[0], comps[1]
    va = min(w for w in first if g.adjacent(v1, w))
    vb = min(w for w in second if g.adjacent(v1, w))
    # move the component holding the lighter neighbour so that its set nests
    # inside the heavier neighbour's set
    if gx.weights[va] <= gx.weights[vb]:
        light, heavy, moved = va, vb, first
    else:
        light, heavy, moved = vb, va, second
    perm = build_nesting_map(assigned[light], assigned[heavy], span)
    for w in moved:
        assigned[w] = perm.apply(assigned[w])
    assert assigned[light].issubset(assigned[heavy])
    assigned[v1] = _first_fit(gx, assigned, v1, span)
    return _finish(gx, assigned, span)


def _b3_even_cycle(gx: WeightedGraph, span: Fraction) -> FractionalColoring:
    g = gx.graph
    walk = [0]
    prev = None
    while len(walk) < g.n:
        cur = walk[-1]
        nxt = min(w for w in g.neighbors(cur) if w != prev and w not in walk)
        prev = cur
        walk.append(nxt)
    assigned: Assignment = [None] * gx.n
    for i, v in enumerate(walk):
        x = gx.weights[v]
        assigned[v] = IntervalSet.interval(0, x) if i % 2 == 0 else IntervalSet.interval(span - x, span)
    return _finish(gx, assigned, span)


def _connected_after_removing(g, removed) -> bool:
    return is_connected(remove_vertices(g, removed).graph)


def _nested_triple(g) -> tuple[int, int, int]:
    """``(v1, va, vb)`` with va, vb nonadjacent neighbours of v1 and
    ``G - {va, vb}`` connected."""
    cls = connectivity_class(g)
    if isinstance(cls, AtLeast3):
        for v1 in g.vertices:
            nbrs = sorted(g.neighbors(v1))
            for i, a in enumerate(nbrs):
                for b in nbrs[i + 1:]:
                    if not g.adjacent(a, b):
                        return v1, a, b
    else:
        for v1, v2 in separating_pairs(g):
            comps = connected_components(g, (v for v in g.vertices if v not in (v1, v2)))
            touch = [[w for w in comp if g.adjacent(v1, w)] for comp in comps]
            for i in range(len(comps)):
                for j in range(i + 1, len(comps)):
                    for a in touch[i]:
                        for b in touch[j]:
                            if _connected_after_removing(g, (a, b)):
                                return v1, min(a, b), max(a, b)
    # any vertex with two nonadjacent neighbours whose removal keeps G connected
    for v1 in g.vertices:
        nbrs = sorted(g.neighbors(v1))
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if not g.adjacent(a, b) and _connected_after_removing(g, (a, b)):
                    return v1, a, b
    raise AssertionError("no designated vertex with removable nonadjacent neighbours")


def _b3_preassigned(gx: WeightedGraph, span: Fraction) -> FractionalColoring:
    g = gx.graph
    v1, va, vb = _nested_triple(g)
    assigned: Assignment = [None] * gx.n
    assigned[va] = IntervalSet.interval(0, gx.weights[va])
    assigned[vb] = IntervalSet.interval(0, gx.weights[vb])
    order = bfs_order(g, v1, set(g.vertices) - {va, vb})
    assert len(order) == g.n - 2
    _assign_reverse(gx, assigned, span, order)
    return _finish(gx, assigned, span)


def color_b3(gx: WeightedGraph) -> FractionalColoring:
    _check_b3(gx)
    span = b3(gx)
    branch = b3_branch(gx.graph)
    if branch == "cut1":
        return _b3_cutvertex(gx, span, connectivity_class(gx.graph).v1)
    if branch == "even-cycle":
        return _b3_even_cycle(gx, span)
    return _b3_preassigned(gx, span)


def color(gx: WeightedGraph, bound_id: str, v1: int = 0) -> FractionalColoring:
    if bound_id == "b1":
        return color_b1(gx)
    if bound_id == "b2":
        return color_b2(gx, v1)
    if bound_id == "b3":
        return color_b3(gx)
    if bound_id == "b4":
        return color_b4(gx)
    if bound_id == "b5":
        return color_b5(gx)
    raise PreconditionError(f"unknown bound {bound_id!r}")
