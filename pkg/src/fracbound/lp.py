"""The fractional chromatic number as a covering LP over independent sets.

``chi_f`` minimises ``sum(t)`` subject to ``A t >= x, t >= 0`` where the
columns of ``A`` are the maximal independent sets.  Every solve returns a
dual certificate, and any feasible ``t`` converts to an interval assignment
(:func:`coloring_from_lp`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, PreconditionError, SizeLimitError
from .graph import (
    Graph,
    WeightedGraph,
    connected_components,
    independence_number,
    induced_subgraph,
    maximal_cliques,
    maximal_independent_sets,
    weight_of_set,
)
from .numeric import EMPTY, IntervalSet, format_rational
from .simplex import solve_ge

MAX_COLUMNS = 5000


@dataclass(frozen=True)
class IncidenceMatrix:
    n: int
    columns: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, g: Graph, max_columns: int = MAX_COLUMNS) -> IncidenceMatrix:
        cols = maximal_independent_sets(g)
        if len(cols) > max_columns:
            raise SizeLimitError(f"{len(cols)} maximal independent sets exceed the cap of {max_columns}")
        return cls(g.n, tuple(cols))

    def rows(self) -> list[list[int]]:
        return [[int(v in col) for col in self.columns] for v in range(self.n)]


@dataclass(frozen=True)
class LpSolution:
    columns: tuple[frozenset[int], ...]
    t: tuple[Fraction, ...]
    objective: Fraction
    dual: tuple[Fraction, ...]

    def certificate_errors(self, gx: WeightedGraph) -> list[str]:
        """Empty iff primal, dual and strong duality all check out exactly."""
        errs = []
        if any(tj < 0 for tj in self.t):
            errs.append("negative column weight")
        if sum(self.t, Fraction(0)) != self.objective:
            errs.append("objective differs from sum of t")
        for v in range(gx.n):
            cover = sum((tj for tj, col in zip(self.t, self.columns) if v in col), Fraction(0))
            if cover < gx.weights[v]:
                errs.append(f"vertex {v} under-covered")
        if any(y < 0 for y in self.dual):
            errs.append("negative dual value")
        for col in self.columns:
            if any(gx.graph.adjacent(u, v) for u in col for v in col if u < v):
                errs.append(f"column {sorted(col)} is not independent")
            if sum((self.dual[v] for v in col), Fraction(0)) > 1:
                errs.append(f"dual violates column {sorted(col)}")
        if sum((y * x for y, x in zip(self.dual, gx.weights)), Fraction(0)) != self.objective:
            errs.append("strong duality fails")
        return errs


@dataclass(frozen=True)
class FractionalColoring:
    span: Fraction
    assignment: tuple[IntervalSet, ...]

    def __getitem__(self, v: int) -> IntervalSet:
        return self.assignment[v]


@dataclass
class Verdict:
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _solve_connected(gx: WeightedGraph, max_columns: int) -> LpSolution:
    g = gx.graph
    inc = IncidenceMatrix.of(g, max_columns)
    res = solve_ge([1] * len(inc.columns), inc.rows(), list(gx.weights))
    return LpSolution(inc.columns, res.z, res.objective, res.y)


def _overlay(parts: list[tuple[LpSolution, tuple[int, ...]]], n: int, total: Fraction) -> LpSolution:
    # Lay each component's columns along [0, T_c) and cut [0, total) at every
    # breakpoint; each elementary segment is an independent set of the whole graph.
    layouts = []
    cuts = {Fraction(0), total}
    for sol, verts in parts:
        pos = Fraction(0)
        segs = []
        for tj, col in zip(sol.t, sol.columns):
            if tj > 0:
                segs.append((pos, pos + tj, frozenset(verts[i] for i in col)))
                cuts.add(pos + tj)
                pos += tj
        layouts.append(segs)
    points = sorted(cuts)
    weight: dict[frozenset[int], Fraction] = {}
    for lo, hi in zip(points, points[1:]):
        members: set[int] = set()
        for segs in layouts:
            for a, b, col in segs:
                if a <= lo and hi <= b:
                    members |= col
                    break
        key = frozenset(members)
        weight[key] = weight.get(key, Fraction(0)) + (hi - lo)
    cols = sorted(weight, key=lambda s: sorted(s))
    best_sol, best_verts = max(parts, key=lambda p: p[0].objective)
    dual = [Fraction(0)] * n
    for i, v in enumerate(best_verts):
        dual[v] = best_sol.dual[i]
    return LpSolution(tuple(cols), tuple(weight[c] for c in cols), total, tuple(dual))


def chi_f(gx: WeightedGraph, max_columns: int = MAX_COLUMNS) -> tuple[Fraction, LpSolution]:
    """Exact fractional chromatic number with primal and dual certificates.

    Disconnected graphs are solved per component; the optimum is the largest
    component optimum.
    """
    g = gx.graph
    comps = connected_components(g)
    if len(comps) <= 1:
        sol = _solve_connected(gx, max_columns)
    else:
        parts = []
        for comp in comps:
            sub = induced_subgraph(g, comp)
            sub_gx = WeightedGraph(sub.graph, tuple(gx.weights[v] for v in sub.vertices))
            parts.append((_solve_connected(sub_gx, max_columns), sub.vertices))
        total = max(p[0].objective for p in parts)
        sol = _overlay(parts, g.n, total)
    errs = sol.certificate_errors(gx)
    assert not errs, errs
    return sol.objective, sol


def chi_f_value(gx: WeightedGraph) -> Fraction:
    return chi_f(gx)[0]


def coloring_from_lp(gx: WeightedGraph, solution: LpSolution) -> FractionalColoring:
    """Place column j on a segment of length t_j and give each vertex the
    leftmost part of its columns' segments of measure x(v)."""
    if any(tj < 0 for tj in solution.t):
        raise PreconditionError("LP solution has negative entries")
    owned: list[list[tuple[Fraction, Fraction]]] = [[] for _ in range(gx.n)]
    pos = Fraction(0)
    for tj, col in zip(solution.t, solution.columns):
        if tj:
            for v in col:
                owned[v].append((pos, pos + tj))
            pos += tj
    span = pos
    assignment = []
    for v in range(gx.n):
        avail = IntervalSet(owned[v])
        if avail.measure() < gx.weights[v]:
            raise PreconditionError(f"LP solution does not cover vertex {v}")
        assignment.append(avail.take_prefix(gx.weights[v]))
    return FractionalColoring(span, tuple(assignment))


def verify_coloring(gx: WeightedGraph, c: FractionalColoring) -> Verdict:
    problems = []
    if len(c.assignment) != gx.n:
        return Verdict(False, [f"coloring covers {len(c.assignment)} vertices, graph has {gx.n}"])
    for v, s in enumerate(c.assignment):
        if not s.within(c.span):
            problems.append(f"vertex {v}: set {s.format()} leaves [0,{format_rational(c.span)})")
        if s.measure() != gx.weights[v]:
            problems.append(
                f"vertex {v}: measure {format_rational(s.measure())} != weight {format_rational(gx.weights[v])}"
            )
    for u, v in gx.graph.sorted_edges():
        overlap = c.assignment[u] & c.assignment[v]
        if overlap:
            problems.append(f"edge ({u},{v}): sets overlap on {overlap.format()}")
    return Verdict(not problems, problems)


def max_weight_clique(gx: WeightedGraph) -> tuple[Fraction, frozenset[int]]:
    best = (Fraction(0), frozenset())
    for q in maximal_cliques(gx.graph):
        w = weight_of_set(gx, q)
        if w > best[0]:
            best = (w, q)
    return best


def chi_f_lower_bounds(gx: WeightedGraph) -> Fraction:
    """max(heaviest clique, x(V) / alpha(G)); never exceeds chi_f."""
    clique = max_weight_clique(gx)[0]
    if gx.n == 0:
        return clique
    return max(clique, weight_of_set(gx, range(gx.n)) / independence_number(gx.graph))


def empty_coloring(n: int) -> FractionalColoring:
    return FractionalColoring(Fraction(0), (EMPTY,) * n)


__all__ = [
    "DomainError",
    "FractionalColoring",
    "IncidenceMatrix",
    "LpSolution",
    "Verdict",
    "chi_f",
    "chi_f_lower_bounds",
    "chi_f_value",
    "coloring_from_lp",
    "max_weight_clique",
    "verify_coloring",
]
