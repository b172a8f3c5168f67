"""Closed forms for the worst-case ratios beta_i(G) = sup_x B_i(x) / chi_f(x)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .graph import (
    Graph,
    clique_components,
    connected_components,
    induced_star_number,
    induced_subgraph,
    is_complete,
    is_connected,
    is_disjoint_union_of_cliques,
    is_odd_cycle,
    max_degree,
    s_set,
)

SIGMA = "sigma"
BETA3_THEOREM = "beta3-theorem"
BETA4_LEMMA = "beta4-lemma"
BETA5_UNIVERSAL = "beta5-universal-vertex"
BETA5_LOCAL_CLIQUES = "beta5-locally-cliques"
BETA5_BOUNDS = "beta5-bounds"


@dataclass(frozen=True)
class BetaResult:
    lo: Fraction
    hi: Fraction
    method: str

    def __post_init__(self):
        assert self.lo <= self.hi

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction | None:
        return self.lo if self.exact else None

    def contains(self, q: Fraction) -> bool:
        return self.lo <= q <= self.hi


def _components(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, c).graph for c in connected_components(g)]


def beta1(g: Graph) -> Fraction:
    """Equals the induced star number sigma(G); edgeless graphs give 1."""
    if not is_connected(g):
        return max(beta1(c) for c in _components(g))
    return Fraction(max(induced_star_number(g), 1))


def beta3(g: Graph) -> Fraction:
    if not is_connected(g):
        raise PreconditionError("beta3 needs a connected graph")
    if is_complete(g) or is_odd_cycle(g):
        raise PreconditionError("beta3 is undefined on complete graphs and odd cycles")
    sigma = induced_star_number(g)
    assert sigma >= 2, "a connected non-complete graph has an induced P3"
    if all(g.degree(s) == sigma for s in s_set(g)):
        return Fraction(sigma - 1)
    return Fraction(sigma)


def beta4(g: Graph) -> Fraction:
    return Fraction(max_degree(g) + 1)


def _star_term(eta: int, d: int) -> Fraction:
    # eta (1 + d) / (eta + d); an isolated vertex contributes ratio 1
    if d == 0:
        return Fraction(1)
    return Fraction(eta * (1 + d), eta + d)


def universal_vertex(g: Graph) -> int | None:
    """Lowest-index u adjacent to all others with G - u a disjoint union of cliques."""
    for u in g.vertices:
        if g.degree(u) == g.n - 1 and is_disjoint_union_of_cliques(g, (v for v in g.vertices if v != u)):
            return u
    return None


def beta5_universal_vertex(g: Graph) -> Fraction | None:
    u = universal_vertex(g)
    if u is None:
        return None
    eta = len(connected_components(g, (v for v in g.vertices if v != u)))
    return _star_term(eta, g.n - 1)


def beta5_locally_cliques(g: Graph) -> Fraction | None:
    terms = []
    for v in g.vertices:
        cc = clique_components(g, v)
        if cc is None:
            return None
        terms.append(_star_term(cc.eta, g.degree(v)))
    return max(terms, default=Fraction(1))


def beta5_bounds(g: Graph) -> tuple[Fraction, Fraction]:
    sigma = max(induced_star_number(g), 1)
    return Fraction(sigma + 1, 2), Fraction(sigma)


def beta5(g: Graph) -> BetaResult:
    if not is_connected(g):
        parts = [beta5(c) for c in _components(g)]
        lo = max(p.lo for p in parts)
        hi = max(p.hi for p in parts)
        methods = {p.method for p in parts}
        return BetaResult(lo, hi, methods.pop() if len(methods) == 1 and lo == hi else BETA5_BOUNDS)
    value = beta5_locally_cliques(g)
    if value is not None:
        return BetaResult(value, value, BETA5_LOCAL_CLIQUES)
    value = beta5_universal_vertex(g)
    if value is not None:
        return BetaResult(value, value, BETA5_UNIVERSAL)
    lo, hi = beta5_bounds(g)
    return BetaResult(lo, hi, BETA5_BOUNDS)


def eta_profile(g: Graph) -> list[int | None]:
    """eta(v) per vertex, ``None`` where the neighbourhood is not a union of cliques."""
    out = []
    for v in g.vertices:
        cc = clique_components(g, v)
        out.append(None if cc is None else cc.eta)
    return out
