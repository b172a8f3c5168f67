"""Simple undirected graphs, weighted graphs and the structural queries the
bounds and invariants need (neighbourhoods, connectivity, independent sets,
induced star number)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError, PreconditionError, SizeLimitError

# exact independence / star-number queries are exponential; refuse beyond this
N_MAX = 24


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("vertex count must be nonnegative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge ({u},{v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, frozenset((int(u), int(v)) for u, v in edges))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(m)) for m in self.masks)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        return len(self._neighbor_sets[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        if len(w) != self.graph.n:
            raise DomainError(f"expected {self.graph.n} weights, got {len(w)}")
        for v, x in enumerate(w):
            if x < 0:
                raise DomainError(f"negative weight {x} at vertex {v}")
        object.__setattr__(self, "weights", w)

    @classmethod
    def unit(cls, g: Graph) -> WeightedGraph:
        return cls(g, (Fraction(1),) * g.n)

    @property
    def n(self) -> int:
        return self.graph.n

    def x(self, v: int) -> Fraction:
        return self.weights[v]

    def scaled(self, c: Fraction) -> WeightedGraph:
        return WeightedGraph(self.graph, tuple(c * x for x in self.weights))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in g.vertices), default=0)


def weight_of_set(gx: WeightedGraph, s: Iterable[int]) -> Fraction:
    return sum((gx.weights[v] for v in s), Fraction(0))


# -- structure ---------------------------------------------------------------

def _components_mask(g: Graph, allowed: int) -> list[int]:
    out = []
    rest = allowed
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.masks[v]
            nxt &= allowed & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by lowest vertex."""
    allowed = (1 << g.n) - 1 if within is None else _mask(within)
    return [sorted(_bits(c)) for c in _components_mask(g, allowed)]


def is_connected(g: Graph) -> bool:
    return len(_components_mask(g, (1 << g.n) - 1)) <= 1


def _connected_without(g: Graph, removed: int) -> bool:
    return len(_components_mask(g, ((1 << g.n) - 1) & ~removed)) <= 1


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(g.degree(v) == 2 for v in g.vertices) and is_connected(g)


def is_odd_cycle(g: Graph) -> bool:
    return is_cycle(g) and g.n % 2 == 1


def is_even_cycle(g: Graph) -> bool:
    return is_cycle(g) and g.n % 2 == 0


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in g.vertices:
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    vertices: tuple[int, ...]  # local index -> original vertex


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    verts = tuple(sorted(set(s)))
    local = {v: i for i, v in enumerate(verts)}
    edges = [(local[u], local[v]) for u, v in g.edges if u in local and v in local]
    return InducedSubgraph(Graph.from_edges(len(verts), edges), verts)


def remove_vertices(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    drop = set(s)
    return induced_subgraph(g, (v for v in g.vertices if v not in drop))


# -- connectivity classification ----------------------------------------------

@dataclass(frozen=True)
class Cut1:
    v1: int


@dataclass(frozen=True)
class Cut2:
    v1: int
    v2: int


@dataclass(frozen=True)
class AtLeast3:
    pass


ConnectivityClass = Cut1 | Cut2 | AtLeast3


def articulation_points(g: Graph) -> list[int]:
    return [v for v in g.vertices if not _connected_without(g, 1 << v)]


def separating_pairs(g: Graph) -> list[tuple[int, int]]:
    """Ordered pairs ``(v1, v2)`` such that v1 has neighbours in at least two
    components of ``G - {v1, v2}``, i.e. v1 is a cutvertex of ``G - v2``."""
    out = []
    full = (1 << g.n) - 1
    for v1 in g.vertices:
        for v2 in g.vertices:
            if v1 == v2:
                continue
            comps = _components_mask(g, full & ~(1 << v1) & ~(1 << v2))
            if len(comps) < 2:
                continue
            touched = sum(1 for c in comps if c & g.masks[v1])
            if touched >= 2:
                out.append((v1, v2))
    return out


def connectivity_class(g: Graph) -> ConnectivityClass:
    """Three-way split on vertex connectivity: 1, 2 or at least 3."""
    if g.n < 3:
        raise PreconditionError("connectivity classification needs n >= 3")
    if not is_connected(g):
        raise PreconditionError("connectivity classification needs a connected graph")
    cuts = articulation_points(g)
    if cuts:
        return Cut1(cuts[0])
    pairs = separating_pairs(g)
    if pairs:
        return Cut2(*pairs[0])
    return AtLeast3()


# -- independent sets -----------------------------------------------------------

def _check_size(g: Graph, n_max: int | None):
    limit = N_MAX if n_max is None else n_max
    if g.n > limit:
        raise SizeLimitError(f"graph has {g.n} vertices; exact search is capped at {limit}")


def _maximal_cliques_masks(adj: Sequence[int], universe: int) -> list[int]:
    # Bron-Kerbosch with Tomita pivoting over bitmask adjacency
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in list(_bits(p & ~adj[pivot])):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, universe, 0)
    return out


def _complement_masks(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~g.masks[v] & ~(1 << v) for v in g.vertices]


def maximal_independent_sets(g: Graph, n_max: int | None = None) -> list[frozenset[int]]:
    """Every maximal independent set once, sorted by their sorted vertex tuples."""
    _check_size(g, n_max)
    if g.n == 0:
        return [frozenset()]
    masks = _maximal_cliques_masks(_complement_masks(g), (1 << g.n) - 1)
    return sorted((frozenset(_bits(m)) for m in masks), key=lambda s: sorted(s))


def maximal_cliques(g: Graph, n_max: int | None = None) -> list[frozenset[int]]:
    _check_size(g, n_max)
    if g.n == 0:
        return [frozenset()]
    masks = _maximal_cliques_masks(list(g.masks), (1 << g.n) - 1)
    return sorted((frozenset(_bits(m)) for m in masks), key=lambda s: sorted(s))


def _max_independent_within(g: Graph, allowed: int) -> int:
    """Lexicographically first maximum independent subset of ``allowed``."""
    if not allowed:
        return 0
    comp = _complement_masks(g)
    adj = [m & allowed for m in comp]
    best = 0
    for m in _maximal_cliques_masks(adj, allowed):
        if m.bit_count() > best.bit_count() or (
            m.bit_count() == best.bit_count() and sorted(_bits(m)) < sorted(_bits(best))
        ):
            best = m
    return best


def independence_number(g: Graph, n_max: int | None = None) -> int:
    _check_size(g, n_max)
    return _max_independent_within(g, (1 << g.n) - 1).bit_count()


def neighborhood_independence(g: Graph, v: int) -> int:
    return _max_independent_within(g, g.masks[v]).bit_count()


@dataclass(frozen=True)
class StarWitness:
    center: int
    leaves: tuple[int, ...]


def star_witness(g: Graph, n_max: int | None = None) -> StarWitness | None:
    """Lowest-index centre of a largest induced star, with independent leaves."""
    _check_size(g, n_max)
    best: StarWitness | None = None
    for v in g.vertices:
        leaves = _max_independent_within(g, g.masks[v])
        if best is None or leaves.bit_count() > len(best.leaves):
            best = StarWitness(v, tuple(_bits(leaves)))
    return best


def induced_star_number(g: Graph, n_max: int | None = None) -> int:
    w = star_witness(g, n_max)
    return len(w.leaves) if w else 0


def independent_leaves(g: Graph, v: int) -> tuple[int, ...]:
    return tuple(_bits(_max_independent_within(g, g.masks[v])))


def s_set(g: Graph, n_max: int | None = None) -> frozenset[int]:
    """Vertices whose neighbourhood contains an independent set of size sigma(G)."""
    _check_size(g, n_max)
    alphas = [neighborhood_independence(g, v) for v in g.vertices]
    sigma = max(alphas, default=0)
    return frozenset(v for v, a in enumerate(alphas) if a == sigma)


@dataclass(frozen=True)
class CliqueComponents:
    eta: int
    components: tuple[frozenset[int], ...]


def clique_components(g: Graph, v: int) -> CliqueComponents | None:
    """Components of G[N(v)] if each one is complete, otherwise ``None``."""
    comps = connected_components(g, g.neighbors(v))
    for comp in comps:
        for a, b in combinations(comp, 2):
            if not g.adjacent(a, b):
                return None
    return CliqueComponents(len(comps), tuple(frozenset(c) for c in comps))


def is_disjoint_union_of_cliques(g: Graph, within: Iterable[int] | None = None) -> bool:
    for comp in connected_components(g, within):
        for a, b in combinations(comp, 2):
            if not g.adjacent(a, b):
                return False
    return True


def bfs_order(g: Graph, start: int, allowed: Iterable[int] | None = None) -> list[int]:
    """Breadth-first order from ``start``, lowest-index neighbours first."""
    allow = set(g.vertices) if allowed is None else set(allowed)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in sorted(g.neighbors(u)):
            if w in allow and w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order
