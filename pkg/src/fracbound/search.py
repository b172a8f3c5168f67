"""Lower-bounding beta_i(G) from below with explicit weight vectors.

Three sources of candidates, all reported in exact rationals:

* the extremal constructions (0-1 star weights, degree indicators, the
  two-level vectors that make B5 tight);
* an exhaustive grid: every weight vector with coordinates in
  ``{0, 1/D, ..., 1}`` supported on at most ``k`` vertices;
* coordinate ascent in floating point, whose end point is rounded to nearby
  rationals and re-evaluated exactly.

Ratios are scale invariant, so the grid works with integer vectors and
``chi_f`` is solved on the subgraph induced by the support (zero-weight
vertices never constrain the covering LP).
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

import numpy as np

from .bounds import BOUND_IDS, b3_applicable, bound
from .errors import PreconditionError
from .graph import (
    Graph,
    WeightedGraph,
    clique_components,
    connected_components,
    independent_leaves,
    induced_subgraph,
    induced_star_number,
    is_connected,
    max_degree,
    maximal_independent_sets,
    s_set,
    star_witness,
)
from .invariants import _star_term, beta1, beta3, beta4, beta5, universal_vertex
from .lp import chi_f

log = logging.getLogger(__name__)

CONSTRUCTION = "construction"
SEARCH = "search"


@dataclass(frozen=True)
class WeightWitness:
    weights: tuple[Fraction, ...]
    bound_id: str
    ratio: Fraction
    provenance: str

    def rechecked(self, g: Graph, v1: int = 0) -> bool:
        return evaluate_ratio(g, self.weights, self.bound_id, v1) == self.ratio

    def normalized(self) -> WeightWitness:
        top = max(self.weights)
        return WeightWitness(tuple(w / top for w in self.weights), self.bound_id, self.ratio, self.provenance)


def _better(a: WeightWitness | None, b: WeightWitness | None) -> WeightWitness | None:
    """Higher ratio wins; ties go to the lexicographically smaller normalised vector."""
    if a is None:
        return b
    if b is None:
        return a
    if a.ratio != b.ratio:
        return a if a.ratio > b.ratio else b
    return a if a.normalized().weights <= b.normalized().weights else b


def check_bound_applicable(g: Graph, bound_id: str) -> None:
    if bound_id not in BOUND_IDS:
        raise PreconditionError(f"unknown bound {bound_id!r}")
    if bound_id in ("b2", "b3") and not (is_connected(g) and g.n >= 2):
        raise PreconditionError(f"{bound_id.upper()} needs a connected graph with at least 2 vertices")
    if bound_id == "b3" and not b3_applicable(g):
        raise PreconditionError("B3 is not an upper bound on complete graphs or odd cycles")


@lru_cache(maxsize=200_000)
def _local_chi(n: int, edges: tuple[tuple[int, int], ...], weights: tuple[int, ...]) -> Fraction:
    g = Graph.from_edges(n, edges)
    return chi_f(WeightedGraph(g, weights))[0]


def _support_chi(g: Graph, x: Sequence[Fraction]) -> Fraction:
    supp = [v for v in g.vertices if x[v] != 0]
    sub = induced_subgraph(g, supp)
    return _local_chi(len(supp), tuple(sub.graph.sorted_edges()), tuple(Fraction(x[v]) for v in supp))


def evaluate_ratio(g: Graph, x: Sequence, bound_id: str, v1: int = 0) -> Fraction:
    """Exact B_i(x) / chi_f(x)."""
    check_bound_applicable(g, bound_id)
    x = tuple(Fraction(w) for w in x)
    if len(x) != g.n:
        raise PreconditionError(f"expected {g.n} weights, got {len(x)}")
    if any(w < 0 for w in x):
        raise PreconditionError("weights must be nonnegative")
    if not any(x):
        raise PreconditionError("the ratio is undefined for the zero weight vector")
    return bound(WeightedGraph(g, x), bound_id, v1) / _support_chi(g, x)


# -- constructions ----------------------------------------------------------------

def _indicator(n: int, vertices, value=Fraction(1)) -> list[Fraction]:
    x = [Fraction(0)] * n
    for v in vertices:
        x[v] = Fraction(value)
    return x


def _two_level(g: Graph, u: int, cliques: Sequence[Sequence[int]]) -> list[Fraction]:
    """x(u) = eta / (eta + d); each clique shares the remaining 1 - x(u) evenly."""
    d = sum(len(c) for c in cliques)
    eta = len(cliques)
    x = [Fraction(0)] * g.n
    x[u] = Fraction(eta, eta + d)
    for c in cliques:
        for w in c:
            x[w] = (1 - x[u]) / len(c)
    return x


def construct_witness(g: Graph, bound_id: str) -> WeightWitness:
    """The weight vector the corresponding worst-case argument uses."""
    check_bound_applicable(g, bound_id)
    if g.n == 0:
        raise PreconditionError("empty graph")
    if bound_id == "b2":
        raise PreconditionError("no extremal construction is known for B2")
    if bound_id == "b4" or not g.edges:
        delta = max_degree(g)
        center = min(v for v in g.vertices if g.degree(v) == delta)
        x = _indicator(g.n, [center])
    elif bound_id == "b1":
        x = _indicator(g.n, star_witness(g).leaves)
    elif bound_id == "b3":
        sigma = induced_star_number(g)
        s_vertices = sorted(s_set(g))
        wide = [s for s in s_vertices if g.degree(s) > sigma]
        center = wide[0] if wide else s_vertices[0]
        x = _indicator(g.n, independent_leaves(g, center))
    else:
        x = _b5_construction(g)
    return WeightWitness(tuple(x), bound_id, evaluate_ratio(g, x, bound_id), CONSTRUCTION)


def _b5_construction(g: Graph) -> list[Fraction]:
    local = [clique_components(g, v) for v in g.vertices]
    if all(c is not None for c in local):
        terms = [_star_term(c.eta, g.degree(v)) for v, c in enumerate(local)]
        u = terms.index(max(terms))
        if g.degree(u) == 0:
            return _indicator(g.n, [u])
        return _two_level(g, u, [sorted(c) for c in local[u].components])
    u = universal_vertex(g)
    if u is not None:
        return _two_level(g, u, connected_components(g, (v for v in g.vertices if v != u)))
    star = star_witness(g)
    return _two_level(g, star.center, [[leaf] for leaf in star.leaves])


# -- exhaustive grid -------------------------------------------------------------

@lru_cache(maxsize=None)
def _cube(s: int, denominator: int) -> np.ndarray:
    return np.array(list(itertools.product(range(1, denominator + 1), repeat=s)), dtype=np.int64).reshape(-1, s)


@lru_cache(maxsize=4096)
def _chi_table(s: int, edges: tuple[tuple[int, int], ...], denominator: int) -> tuple[np.ndarray, np.ndarray]:
    """chi_f numerators / denominators for every row of ``_cube(s, D)``."""
    rows = _cube(s, denominator)
    num = np.empty(len(rows), dtype=np.int64)
    den = np.empty(len(rows), dtype=np.int64)
    for i, row in enumerate(rows):
        a = [int(v) for v in row]
        k = 0
        for v in a:
            k = gcd(k, v)
        q = k * _local_chi(s, edges, tuple(v // k for v in a))
        num[i], den[i] = q.numerator, q.denominator
    return num, den


class WeightGrid:
    """All integer vectors in ``{0..D}^n`` with 1..k nonzero entries, with
    chi_f precomputed for each, so any bound can be scanned in one pass."""

    def __init__(self, g: Graph, denominator: int = 8, support: int = 5, max_points: int | None = None):
        if denominator < 1 or support < 1:
            raise PreconditionError("denominator and support must be positive")
        self.graph = g
        self.denominator = denominator
        self.support = min(support, g.n)
        blocks, nums, dens = [], [], []
        total = 0
        self.truncated = False
        for s in range(1, self.support + 1):
            cube = _cube(s, denominator)
            for supp in itertools.combinations(range(g.n), s):
                if max_points is not None and total + len(cube) > max_points:
                    self.truncated = True
                    break
                sub = induced_subgraph(g, supp)
                num, den = _chi_table(s, tuple(sub.graph.sorted_edges()), denominator)
                block = np.zeros((len(cube), g.n), dtype=np.int64)
                block[:, list(supp)] = cube
                blocks.append(block)
                nums.append(num)
                dens.append(den)
                total += len(cube)
            if self.truncated:
                break
        self.points = np.concatenate(blocks) if blocks else np.zeros((0, g.n), dtype=np.int64)
        self.chi_num = np.concatenate(nums) if nums else np.zeros(0, dtype=np.int64)
        self.chi_den = np.concatenate(dens) if dens else np.zeros(0, dtype=np.int64)
        adj = np.zeros((g.n, g.n), dtype=np.int64)
        for u, v in g.edges:
            adj[u, v] = adj[v, u] = 1
        self._closed = self.points @ (adj + np.eye(g.n, dtype=np.int64))
        self._scaled = self.points * (adj.sum(axis=0) + 1)
        self._lightest = None

    def __len__(self) -> int:
        return len(self.points)

    def _lightest_neighbor(self) -> np.ndarray:
        if self._lightest is None:
            cols = []
            for v in self.graph.vertices:
                nbrs = sorted(self.graph.neighbors(v))
                cols.append(self.points[:, nbrs].min(axis=1) if nbrs else np.zeros(len(self.points), np.int64))
            self._lightest = np.stack(cols, axis=1) if cols else np.zeros((0, 0), np.int64)
        return self._lightest

    def bound_values(self, bound_id: str, v1: int = 0) -> np.ndarray:
        check_bound_applicable(self.graph, bound_id)
        if bound_id == "b1":
            return self._closed.max(axis=1)
        if bound_id == "b4":
            return self._scaled.max(axis=1)
        if bound_id == "b5":
            return np.minimum(self._closed, self._scaled).max(axis=1)
        reduced = self._closed - self._lightest_neighbor()
        if bound_id == "b3":
            return reduced.max(axis=1)
        others = np.delete(reduced, v1, axis=1)
        head = self._closed[:, v1]
        return np.maximum(head, others.max(axis=1)) if others.shape[1] else head

    def exceeding(self, bound_id: str, threshold: Fraction, v1: int = 0) -> int:
        """Number of grid points whose exact ratio is strictly above ``threshold``."""
        b = self.bound_values(bound_id, v1)
        t = Fraction(threshold)
        return int(np.count_nonzero(b * self.chi_den * t.denominator > t.numerator * self.chi_num))

    def best(self, bound_id: str, v1: int = 0) -> WeightWitness | None:
        if not len(self.points):
            return None
        b = self.bound_values(bound_id, v1)
        approx = b * self.chi_den / self.chi_num
        top = approx.max()
        best: WeightWitness | None = None
        for i in np.flatnonzero(approx >= top * (1 - 1e-9)):
            ratio = Fraction(int(b[i]) * int(self.chi_den[i]), int(self.chi_num[i]))
            x = tuple(Fraction(int(a), self.denominator) for a in self.points[i])
            best = _better(best, WeightWitness(x, bound_id, ratio, SEARCH))
        return best


def grid_search(g: Graph, bound_id: str, denominator: int = 8, support: int = 5,
                v1: int = 0, max_points: int | None = None) -> WeightWitness | None:
    return WeightGrid(g, denominator, support, max_points).best(bound_id, v1)


# -- floating-point refinement ------------------------------------------------------

class _FloatRatio:
    def __init__(self, g: Graph, bound_id: str, v1: int):
        from scipy.optimize import linprog

        self._linprog = linprog
        self.g = g
        self.bound_id = bound_id
        self.v1 = v1
        cols = maximal_independent_sets(g)
        self.inc = np.array([[1.0 if v in c else 0.0 for c in cols] for v in g.vertices])
        adj = np.zeros((g.n, g.n))
        for u, v in g.edges:
            adj[u, v] = adj[v, u] = 1.0
        self.closed_mat = adj + np.eye(g.n)
        self.deg1 = adj.sum(axis=0) + 1
        self.nbrs = [sorted(g.neighbors(v)) for v in g.vertices]
        self.calls = 0

    def bound(self, x: np.ndarray) -> float:
        closed = x @ self.closed_mat
        if self.bound_id == "b1":
            return closed.max()
        if self.bound_id == "b4":
            return (x * self.deg1).max()
        if self.bound_id == "b5":
            return np.minimum(closed, x * self.deg1).max()
        reduced = np.array([closed[v] - x[self.nbrs[v]].min() for v in self.g.vertices])
        if self.bound_id == "b3":
            return reduced.max()
        return max(closed[self.v1], max((reduced[v] for v in self.g.vertices if v != self.v1), default=0.0))

    def __call__(self, x: np.ndarray) -> float:
        self.calls += 1
        res = self._linprog(np.ones(self.inc.shape[1]), A_ub=-self.inc, b_ub=-x, bounds=(0, None), method="highs")
        if res.status != 0 or res.fun <= 0:
            return 0.0
        return self.bound(x) / res.fun


def _coordinate_ascent(f: _FloatRatio, start: np.ndarray, evals: int) -> np.ndarray:
    x = start / start.max()
    best = f(x)
    h = 0.25
    used = 1
    while used < evals and h > 1e-7:
        improved = False
        for i in range(len(x)):
            for step in (h, -h):
                y = x.copy()
                y[i] = max(0.0, y[i] + step)
                if not y.any():
                    continue
                r = f(y)
                used += 1
                if r > best + 1e-12:
                    x, best, improved = y / y.max(), r, True
                    break
            if used >= evals:
                break
        if not improved:
            h /= 2
    return x


def _rational_roundings(x: np.ndarray, max_den: int = 64) -> list[tuple[Fraction, ...]]:
    x = x / x.max()
    seen = []
    for q in range(1, max_den + 1):
        cand = tuple(Fraction(float(v)).limit_denominator(q) for v in x)
        if any(cand) and cand not in seen:
            seen.append(cand)
    return seen


def adversarial_search(g: Graph, bound_id: str, budget: int = 100_000, denominator: int = 8,
                       support: int = 5, seed: int = 0, v1: int = 0,
                       restarts: int = 3, refine_evals: int = 400) -> WeightWitness:
    """Best exact ratio found from constructions, the grid and local refinement.

    ``budget`` caps the number of candidate evaluations (grid points plus
    floating-point refinement steps); when it runs out the best witness so far
    is returned.
    """
    check_bound_applicable(g, bound_id)
    best: WeightWitness | None = None
    if bound_id != "b2":
        best = construct_witness(g, bound_id)
    grid = WeightGrid(g, denominator, support, max_points=budget)
    best = _better(best, grid.best(bound_id, v1))
    remaining = budget - len(grid)
    if grid.truncated:
        log.info("grid truncated at %d points by the evaluation budget", len(grid))
    if remaining > 0 and refine_evals > 0 and g.n >= 2:
        f = _FloatRatio(g, bound_id, v1)
        rng = random.Random(seed)
        starts = []
        if best is not None:
            starts.append(np.array([float(w) for w in best.weights]))
        for _ in range(restarts):
            k = rng.randint(1, min(support, g.n))
            x = np.zeros(g.n)
            for v in rng.sample(range(g.n), k):
                x[v] = rng.random() + 0.05
            starts.append(x)
        for start in starts:
            if remaining <= 0:
                break
            evals = min(refine_evals, remaining)
            end = _coordinate_ascent(f, start, evals)
            remaining -= evals
            for cand in _rational_roundings(end):
                w = WeightWitness(cand, bound_id, evaluate_ratio(g, cand, bound_id, v1), SEARCH)
                best = _better(best, w)
    assert best is not None
    return best


# -- theorem checks ----------------------------------------------------------------

THEOREM_BOUND = {"beta1": "b1", "beta3": "b3", "beta4": "b4", "beta5": "b5"}


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    closed_lo: Fraction
    closed_hi: Fraction
    witness: WeightWitness
    grid_best: WeightWitness | None
    grid_points: int
    exceeding_points: int

    @property
    def attained(self) -> bool:
        """The construction reaches the closed form (or the lower end of an interval)."""
        return self.witness.ratio == self.closed_lo

    @property
    def exceeded(self) -> bool:
        return self.exceeding_points > 0

    @property
    def ok(self) -> bool:
        return self.attained and not self.exceeded and self.witness.ratio <= self.closed_hi


def closed_form(g: Graph, theorem: str) -> tuple[Fraction, Fraction]:
    if theorem == "beta1":
        v = beta1(g)
        return v, v
    if theorem == "beta3":
        v = beta3(g)
        return v, v
    if theorem == "beta4":
        v = beta4(g)
        return v, v
    if theorem == "beta5":
        r = beta5(g)
        return r.lo, r.hi
    raise PreconditionError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREM_BOUND)}")


def check_theorem(g: Graph, theorem: str, denominator: int = 4, support: int = 4,
                  grid: WeightGrid | None = None) -> TheoremReport:
    """Compare a closed form with its construction and with an exhaustive grid."""
    lo, hi = closed_form(g, theorem)
    bound_id = THEOREM_BOUND[theorem]
    witness = construct_witness(g, bound_id)
    if grid is None:
        grid = WeightGrid(g, denominator, support)
    return TheoremReport(
        theorem, lo, hi, witness, grid.best(bound_id), len(grid), grid.exceeding(bound_id, hi)
    )
