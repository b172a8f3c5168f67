import random
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.optimize import linprog

from corpus import exhaustive_independent_sets, random_connected_graph, random_weights
from fracbound import families as fam
from fracbound.graph import Graph, WeightedGraph
from fracbound.lp import (
    FractionalColoring,
    IncidenceMatrix,
    chi_f,
    chi_f_lower_bounds,
    coloring_from_lp,
    verify_coloring,
)
from fracbound.numeric import IntervalSet


def unit(g):
    return WeightedGraph.unit(g)


def scipy_chi(gx):
    """Float oracle over *all* nonempty independent sets."""
    cols = [s for s in exhaustive_independent_sets(gx.graph) if s]
    A = np.array([[1.0 if v in s else 0.0 for s in cols] for v in range(gx.n)])
    res = linprog(np.ones(len(cols)), A_ub=-A, b_ub=-np.array([float(w) for w in gx.weights]),
                  bounds=(0, None), method="highs")
    return res.fun


def test_c5():
    value, sol = chi_f(unit(fam.cycle(5)))
    assert value == F(5, 2)
    assert sol.certificate_errors(unit(fam.cycle(5))) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_complete(n):
    assert chi_f(unit(fam.complete(n)))[0] == n


def test_edgeless():
    gx = WeightedGraph(Graph(3), (F(1), F(2), F(1, 2)))
    assert chi_f(gx)[0] == 2


def test_even_cycle_weighted():
    gx = WeightedGraph(fam.cycle(4), (F(1), F(2), F(3), F(4)))
    # bipartite: heaviest edge
    assert chi_f(gx)[0] == 7


def test_incidence_matrix_uses_maximal_sets():
    inc = IncidenceMatrix.of(fam.path(3))
    assert sorted(map(sorted, inc.columns)) == [[0, 2], [1]]
    rows = inc.rows()
    assert rows[0] == rows[2] and [a + b for a, b in zip(rows[0], rows[1])] == [1, 1]


def test_disconnected_is_max_over_components():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    gx = WeightedGraph(g, (F(1),) * 3 + (F(2), F(3)))
    value, sol = chi_f(gx)
    assert value == 5
    assert sol.certificate_errors(gx) == []
    assert verify_coloring(gx, coloring_from_lp(gx, sol)).ok


def test_against_float_oracle():
    rng = random.Random(3)
    for _ in range(120):
        n = rng.randint(1, 8)
        g = random_connected_graph(rng, n, rng.uniform(0.2, 0.8))
        gx = WeightedGraph(g, random_weights(rng, n))
        value, sol = chi_f(gx)
        assert sol.certificate_errors(gx) == []
        assert float(value) == pytest.approx(scipy_chi(gx), abs=1e-7)
        assert chi_f_lower_bounds(gx) <= value
        c = coloring_from_lp(gx, sol)
        assert c.span == value and verify_coloring(gx, c).ok


def test_homogeneity():
    rng = random.Random(9)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 7), 0.5)
        x = random_weights(rng, g.n)
        c = F(rng.randint(1, 9), rng.randint(1, 9))
        assert chi_f(WeightedGraph(g, tuple(c * w for w in x)))[0] == c * chi_f(WeightedGraph(g, x))[0]


def test_lower_bound_c5():
    assert chi_f_lower_bounds(unit(fam.cycle(5))) == F(5, 2)


class TestVerify:
    def setup_method(self):
        self.gx = WeightedGraph(fam.path(2), (F(1), F(1)))

    def test_accepts(self):
        c = FractionalColoring(F(2), (IntervalSet([(0, 1)]), IntervalSet([(1, 2)])))
        assert verify_coloring(self.gx, c).ok

    def test_overlap(self):
        c = FractionalColoring(F(2), (IntervalSet([(0, 1)]), IntervalSet([(F(1, 2), F(3, 2))])))
        v = verify_coloring(self.gx, c)
        assert not v.ok and any("overlap" in p for p in v.violations)

    def test_wrong_measure(self):
        c = FractionalColoring(F(2), (IntervalSet([(0, 1)]), IntervalSet([(1, F(3, 2))])))
        assert not verify_coloring(self.gx, c).ok

    def test_outside_span(self):
        c = FractionalColoring(F(1), (IntervalSet([(0, 1)]), IntervalSet([(1, 2)])))
        assert not verify_coloring(self.gx, c).ok

    def test_wrong_length(self):
        assert not verify_coloring(self.gx, FractionalColoring(F(1), (IntervalSet([(0, 1)]),))).ok
