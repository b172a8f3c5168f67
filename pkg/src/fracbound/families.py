"""Named graph families used by the CLI ``--family`` option and the tests."""

from __future__ import annotations

from itertools import combinations

from .errors import DomainError
from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(r: int) -> Graph:
    """K_{1,r} with the centre at vertex 0."""
    return Graph.from_edges(r + 1, ((0, i) for i in range(1, r + 1)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge (n-2, n-1) removed; for n=4 the degree-3 vertices are 0, 1."""
    if n < 2:
        raise DomainError("complete-minus-edge needs n >= 2")
    return Graph.from_edges(n, (e for e in combinations(range(n), 2) if e != (n - 2, n - 1)))


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph.from_edges(n, ((v, v ^ (1 << k)) for v in range(n) for k in range(d) if v < v ^ (1 << k)))


def universal_over_cliques(sizes: list[int]) -> Graph:
    """A universal vertex 0 joined to disjoint cliques of the given sizes."""
    edges = []
    nxt = 1
    for size in sizes:
        block = list(range(nxt, nxt + size))
        edges += [(0, v) for v in block]
        edges += list(combinations(block, 2))
        nxt += size
    return Graph.from_edges(nxt, edges)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete-minus-edge": complete_minus_edge,
    "hypercube": hypercube,
}


def from_spec(text: str) -> Graph:
    """Parse ``name:arg`` such as ``cycle:6`` or ``star:3``."""
    name, _, arg = text.partition(":")
    if name not in FAMILIES:
        raise DomainError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    try:
        k = int(arg)
    except ValueError:
        raise DomainError(f"family {name!r} needs an integer size, e.g. {name}:4") from None
    return FAMILIES[name](k)
