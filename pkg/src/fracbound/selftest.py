"""Built-in regression suite of published closed-form values and witnesses.

Each check returns ``(ok, detail)``; :func:`run` prints one line per check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import families as fam
from .bounds import b1, b3, b4, b5
from .colorers import color_sorted_greedy
from .graph import Graph, WeightedGraph, max_degree
from .invariants import (
    BETA5_BOUNDS,
    beta1,
    beta3,
    beta4,
    beta5,
    beta5_bounds,
    beta5_locally_cliques,
    beta5_universal_vertex,
)
from .lp import verify_coloring
from .search import adversarial_search, check_theorem, construct_witness, evaluate_ratio

F = Fraction


def _leaves_one(r: int) -> WeightedGraph:
    return WeightedGraph(fam.star(r), (F(0),) + (F(1),) * r)


def _halves(r: int) -> WeightedGraph:
    return WeightedGraph(fam.star(r), (F(1, 2),) * (r + 1))


def _max_degree_indicator(g: Graph) -> tuple[Fraction, ...]:
    delta = max_degree(g)
    u = min(v for v in g.vertices if g.degree(v) == delta)
    return tuple(F(int(v == u)) for v in g.vertices)


def _eq(got, want) -> tuple[bool, str]:
    return got == want, f"got {got}, expected {want}"


def _checks() -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    checks: list[tuple[str, Callable[[], tuple[bool, str]]]] = []
    add = lambda name, fn: checks.append((name, fn))  # noqa: E731

    for r in (2, 3, 5):
        add(f"b1 star K1,{r}, leaves 1 -> {r}", lambda r=r: _eq(b1(_leaves_one(r)), F(r)))
        add(f"b3 star K1,{r}, leaves 1 -> {r - 1}", lambda r=r: _eq(b3(_leaves_one(r)), F(r - 1)))
        add(f"b5 star K1,{r}, halves -> {F(1 + r, 2)}", lambda r=r: _eq(b5(_halves(r)), F(1 + r, 2)))

        def greedy(r=r):
            gx = _halves(r)
            c = color_sorted_greedy(gx, b5(gx))
            return c.span == F(1 + r, 2) and verify_coloring(gx, c).ok, f"span {c.span}"
        add(f"sorted greedy within B5 on K1,{r} halves", greedy)

    for name, g in (("C6", fam.cycle(6)), ("K1,4", fam.star(4)), ("Q3", fam.hypercube(3))):
        add(f"b4 max-degree indicator on {name} -> Delta+1",
            lambda g=g: _eq(b4(WeightedGraph(g, _max_degree_indicator(g))), F(max_degree(g) + 1)))
        add(f"ratio B4 max-degree indicator on {name} -> Delta+1",
            lambda g=g: _eq(evaluate_ratio(g, _max_degree_indicator(g), "b4"), F(max_degree(g) + 1)))

    add("beta3 K1,3 -> 2", lambda: _eq(beta3(fam.star(3)), F(2)))
    for eta in (2, 3, 6):
        add(f"beta5 universal-vertex K1,{eta} -> {F(1 + eta, 2)}",
            lambda eta=eta: _eq(beta5_universal_vertex(fam.star(eta)), F(1 + eta, 2)))
    for n in (4, 5, 6, 7):
        add(f"beta5 locally-cliques C{n} -> 3/2", lambda n=n: _eq(beta5_locally_cliques(fam.cycle(n)), F(3, 2)))
    for r in (2, 4):
        add(f"beta5 locally-cliques K1,{r} -> {F(1 + r, 2)}",
            lambda r=r: _eq(beta5_locally_cliques(fam.star(r)), F(1 + r, 2)))
        add(f"beta5 bounds K1,{r} -> ({F(r + 1, 2)}, {r})",
            lambda r=r: _eq(beta5_bounds(fam.star(r)), (F(r + 1, 2), F(r))))

    def k4e_bounds():
        lo, hi = beta5_bounds(fam.complete_minus_edge(4))
        return (lo, hi) == (F(3, 2), F(2)) and lo <= F(8, 5) <= hi, f"({lo}, {hi})"
    add("beta5 bounds K4-e -> (3/2, 2) containing 8/5", k4e_bounds)
    add("beta5 C6 -> 3/2", lambda: _eq(beta5(fam.cycle(6)).value, F(3, 2)))

    def k4e_interval():
        r = beta5(fam.complete_minus_edge(4))
        return (r.lo, r.hi, r.method) == (F(3, 2), F(2), BETA5_BOUNDS), f"{r}"
    add("beta5 K4-e -> interval (3/2, 2)", k4e_interval)
    add("beta5 K1,5 -> 3", lambda: _eq(beta5(fam.star(5)).value, F(3)))

    add("ratio B1 K1,3 leaves 1 -> 3", lambda: _eq(evaluate_ratio(fam.star(3), (0, 1, 1, 1), "b1"), F(3)))
    add("witness B5 K1,3 -> 2", lambda: _eq(construct_witness(fam.star(3), "b5").ratio, F(2)))

    def c6_witness():
        w = construct_witness(fam.cycle(6), "b5")
        return w.ratio == F(3, 2) and sorted(w.weights).count(F(1, 2)) == 3, f"{w.weights} -> {w.ratio}"
    add("witness B5 C6 -> 3/2 with three halves", c6_witness)
    add("witness B4 K1,3 -> 4", lambda: _eq(construct_witness(fam.star(3), "b4").ratio, F(4)))
    add("search B4 K1,3 -> 4", lambda: _eq(adversarial_search(fam.star(3), "b4", denominator=4, support=4).ratio, F(4)))

    def k4e_search():
        w = adversarial_search(fam.complete_minus_edge(4), "b5", denominator=10, support=4)
        return w.ratio == F(8, 5) and w.rechecked(fam.complete_minus_edge(4)), f"{w.ratio} at {w.weights}"
    add("search B5 K4-e reaches 8/5", k4e_search)

    def k14_theorem():
        rep = check_theorem(fam.star(4), "beta5")
        return rep.ok and rep.witness.ratio == F(5, 2), f"closed {rep.closed_lo}, witness {rep.witness.ratio}"
    add("theorem check beta5 K1,4 -> 5/2 attained", k14_theorem)

    def k13_invariants():
        g = fam.star(3)
        got = (beta1(g), beta4(g), beta5(g).value)
        return got == (F(3), F(4), F(2)), f"{got}"
    add("invariants K1,3: beta1 3, beta4 4, beta5 2", k13_invariants)
    return checks


def run(out=print) -> bool:
    ok_all = True
    for name, fn in _checks():
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        ok_all &= ok
        out(f"{'PASS' if ok else 'FAIL'}  {name}" + ("" if ok else f"  ({detail})"))
    return ok_all
