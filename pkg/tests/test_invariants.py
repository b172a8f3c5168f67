from fractions import Fraction as F

import networkx as nx
import pytest

from corpus import small_connected_graphs, to_nx
from fracbound import families as fam
from fracbound.errors import PreconditionError
from fracbound.graph import Graph, induced_star_number
from fracbound.invariants import (
    BETA5_BOUNDS,
    BETA5_LOCAL_CLIQUES,
    beta1,
    beta3,
    beta4,
    beta5,
    beta5_bounds,
    beta5_locally_cliques,
    beta5_universal_vertex,
    eta_profile,
    universal_vertex,
)


def test_beta1_is_sigma():
    assert beta1(fam.star(4)) == 4
    assert beta1(fam.complete(5)) == 1
    assert beta1(Graph(3)) == 1


@pytest.mark.parametrize("g,want", [
    (fam.star(3), 2),
    (fam.cycle(6), 1),
    (fam.complete_minus_edge(4), 2),
    (fam.path(4), 1),
])
def test_beta3(g, want):
    assert beta3(g) == want


@pytest.mark.parametrize("g", [fam.cycle(5), fam.complete(4), Graph(2)])
def test_beta3_undefined(g):
    with pytest.raises(PreconditionError):
        beta3(g)


def test_beta4():
    assert beta4(fam.star(5)) == 6
    assert beta4(fam.hypercube(3)) == 4


@pytest.mark.parametrize("n", range(4, 11))
def test_beta5_cycles(n):
    r = beta5(fam.cycle(n))
    assert r.exact and r.value == F(3, 2) and r.method == BETA5_LOCAL_CLIQUES


@pytest.mark.parametrize("r", range(1, 9))
def test_beta5_stars(r):
    assert beta5(fam.star(r)).value == F(1 + r, 2)
    assert beta5_universal_vertex(fam.star(r)) == F(1 + r, 2)


def test_triangle_is_one():
    assert beta5(fam.complete(3)).value == 1


def test_universal_over_cliques():
    g = fam.universal_over_cliques([2, 3])
    assert universal_vertex(g) == 0
    assert beta5_universal_vertex(g) == F(2 * 6, 2 + 5)
    assert beta5_locally_cliques(g) == F(12, 7)


def test_k4_minus_e_is_an_interval():
    r = beta5(fam.complete_minus_edge(4))
    assert not r.exact and r.method == BETA5_BOUNDS
    assert (r.lo, r.hi) == (F(3, 2), F(2)) and r.contains(F(8, 5))


def test_eta_profile():
    assert eta_profile(fam.star(3)) == [3, 1, 1, 1]
    assert eta_profile(fam.complete_minus_edge(4))[:2] == [None, None]


def test_against_networkx_on_catalog():
    for g in small_connected_graphs(6):
        G = to_nx(g)
        sigma = max(
            (max((len(c) for c in nx.find_cliques(nx.complement(G.subgraph(G[v])))), default=0) for v in G),
            default=0,
        )
        assert induced_star_number(g) == sigma
        lo, hi = beta5_bounds(g)
        r = beta5(g)
        assert lo <= r.lo <= r.hi <= hi
        triangle_free = sum(nx.triangles(G).values()) == 0
        if triangle_free:
            delta = max(d for _, d in G.degree())
            assert r.value == F(1 + delta, 2)
