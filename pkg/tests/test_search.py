from fractions import Fraction as F

import pytest

from fracbound import families as fam
from fracbound.errors import PreconditionError
from fracbound.graph import Graph
from fracbound.search import (
    CONSTRUCTION,
    WeightGrid,
    adversarial_search,
    check_theorem,
    construct_witness,
    evaluate_ratio,
    grid_search,
)


def test_ratio_is_scale_invariant():
    g = fam.cycle(6)
    x = (1, 2, 0, 3, 1, 1)
    assert evaluate_ratio(g, x, "b5") == evaluate_ratio(g, [F(7, 3) * v for v in x], "b5")


def test_triangle_b1_ratio_one():
    assert evaluate_ratio(fam.complete(3), (1, 1, 1), "b1") == 1
    assert construct_witness(fam.complete(3), "b1").ratio == 1


def test_ratio_rejects_bad_vectors():
    with pytest.raises(PreconditionError):
        evaluate_ratio(fam.path(3), (0, 0, 0), "b1")
    with pytest.raises(PreconditionError):
        evaluate_ratio(fam.path(3), (1, 1), "b1")
    with pytest.raises(PreconditionError):
        evaluate_ratio(fam.cycle(5), (1,) * 5, "b3")


def test_b2_has_no_construction():
    with pytest.raises(PreconditionError):
        construct_witness(fam.path(3), "b2")
    w = adversarial_search(fam.star(3), "b2", denominator=3, support=3, refine_evals=0)
    assert w.rechecked(fam.star(3)) and w.ratio >= 1


def test_witnesses():
    w = construct_witness(fam.star(5), "b1")
    assert w.provenance == CONSTRUCTION and w.ratio == 5 and w.rechecked(fam.star(5))
    assert construct_witness(fam.hypercube(3), "b4").ratio == 4
    assert construct_witness(fam.star(3), "b3").ratio == 2


def test_grid_size_and_truncation():
    grid = WeightGrid(fam.path(3), denominator=2, support=2)
    assert len(grid) == 3 * 2 + 3 * 4
    small = WeightGrid(fam.path(3), denominator=2, support=2, max_points=7)
    assert small.truncated and len(small) <= 7


def test_grid_best_is_exact():
    w = grid_search(fam.star(3), "b1", denominator=2, support=4)
    assert w.ratio == 3 and w.rechecked(fam.star(3))


def test_search_is_deterministic():
    a = adversarial_search(fam.cycle(5), "b5", denominator=3, support=3, seed=4)
    b = adversarial_search(fam.cycle(5), "b5", denominator=3, support=3, seed=4)
    assert a == b


def test_search_never_below_construction():
    g = fam.universal_over_cliques([1, 2, 2])
    w = adversarial_search(g, "b5", denominator=3, support=3, refine_evals=50)
    assert w.ratio >= construct_witness(g, "b5").ratio


def test_theorem_report():
    rep = check_theorem(fam.cycle(6), "beta5")
    assert rep.ok and rep.attained and not rep.exceeded
    with pytest.raises(PreconditionError):
        check_theorem(fam.cycle(6), "beta9")


def test_single_vertex():
    assert construct_witness(Graph(1), "b5").ratio == 1


def test_triangle_grid_at_denominator_8():
    assert grid_search(fam.complete(3), "b1", denominator=8, support=3).ratio == 1


def test_c6_beta3_grid():
    rep = check_theorem(fam.cycle(6), "beta3", denominator=6, support=4)
    assert rep.closed_lo == 1 and rep.attained and rep.exceeding_points == 0
