from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracbound.errors import DomainError
from fracbound.numeric import (
    IntervalSet,
    MeasureMap,
    apply_map,
    build_nesting_map,
    format_rational,
    parse_rational,
)

def iv(*pairs):
    return IntervalSet(pairs)


class TestMeasure:
    def test_unit_pieces(self):
        assert iv((0, 1), (2, 3)).measure() == 2

    def test_empty(self):
        assert IntervalSet().measure() == 0

    def test_single(self):
        assert iv((0, F(5, 2))).measure() == F(5, 2)


class TestSetAlgebra:
    def test_touching_intervals_do_not_intersect(self):
        assert iv((0, 1)) & iv((1, 2)) == IntervalSet()

    def test_complement(self):
        assert iv((1, 2)).complement_within(3) == iv((0, 1), (2, 3))

    def test_union_merges_at_touch_point(self):
        assert (iv((0, 1)) | iv((1, 2))).intervals == ((0, 2),)

    def test_subtract(self):
        assert iv((0, 5)) - iv((1, 2), (3, 4)) == iv((0, 1), (2, 3), (4, 5))

    def test_complement_rejects_outside(self):
        with pytest.raises(DomainError):
            iv((2, 4)).complement_within(3)

    def test_canonical_form_is_unique(self):
        assert iv((2, 3), (0, 1), (1, 2), (5, 5)) == iv((0, 3))
        assert iv((0, 2), (1, 3)).intervals == ((0, 3),)


class TestTakePrefix:
    def test_greedy_left(self):
        assert iv((0, 1), (2, 4)).take_prefix(2) == iv((0, 1), (2, 3))

    def test_zero(self):
        assert iv((0, 3)).take_prefix(0) == IntervalSet()

    def test_split_last_piece(self):
        # 1 from [0,1) then 3/2 of [2,4)
        assert iv((0, 1), (2, 4)).take_prefix(F(5, 2)) == iv((0, 1), (2, F(7, 2)))

    def test_insufficient(self):
        with pytest.raises(DomainError):
            iv((0, 1)).take_prefix(2)


class TestNestingMap:
    def test_identity(self):
        m = build_nesting_map(iv((0, 1)), iv((0, 1)), 2)
        assert m == MeasureMap.identity(2)

    def test_swap(self):
        m = build_nesting_map(iv((0, 1)), iv((1, 2)), 2)
        assert apply_map(m, iv((0, 1))) == iv((1, 2))
        assert apply_map(m, iv((1, 2))) == iv((0, 1))

    def test_partial_overlap_postconditions(self):
        a, b = iv((0, 1)), iv((F(1, 2), 2))
        m = build_nesting_map(a, b, 3)
        assert m.is_bijection()
        assert apply_map(m, a).issubset(b)

    def test_rejects_larger_source(self):
        with pytest.raises(DomainError):
            build_nesting_map(iv((0, 2)), iv((0, 1)), 2)

    def test_apply_outside_domain(self):
        with pytest.raises(DomainError):
            MeasureMap.identity(1).apply(iv((0, 2)))


class TestFormatting:
    @pytest.mark.parametrize("q,text", [(F(5, 2), "5/2"), (F(3), "3"), (F(-1, 3), "-1/3"), (F(0), "0")])
    def test_round_trip(self, q, text):
        assert format_rational(q) == text
        assert parse_rational(text) == q

    @pytest.mark.parametrize("bad", ["0.5", "1/0", "x", ""])
    def test_rejects(self, bad):
        with pytest.raises(DomainError):
            parse_rational(bad)

    def test_interval_list_round_trip(self):
        s = iv((0, F(1, 3)), (F(1, 2), 2))
        assert s.format() == "[0,1/3),[1/2,2)"
        assert IntervalSet.parse(s.format()) == s
        assert IntervalSet.parse("") == IntervalSet()

    def test_interval_parse_rejects_garbage(self):
        with pytest.raises(DomainError):
            IntervalSet.parse("[0,1) junk")


# -- properties -----------------------------------------------------------------

SPAN = 12
coords = st.fractions(min_value=0, max_value=SPAN, max_denominator=6)


@st.composite
def interval_sets(draw):
    pts = draw(st.lists(coords, max_size=8))
    pairs = [(min(a, b), max(a, b)) for a, b in zip(pts[::2], pts[1::2])]
    return IntervalSet(pairs)


PROPS = settings(max_examples=300, deadline=None)


@PROPS
@given(interval_sets())
def test_canonicalisation_idempotent(s):
    assert IntervalSet(s.intervals) == s
    ivs = s.intervals
    assert all(lo < hi for lo, hi in ivs)
    assert all(ivs[k][1] < ivs[k + 1][0] for k in range(len(ivs) - 1))


@PROPS
@given(interval_sets(), interval_sets())
def test_inclusion_exclusion(a, b):
    assert (a | b).measure() + (a & b).measure() == a.measure() + b.measure()


@PROPS
@given(interval_sets(), interval_sets())
def test_subtract_complements_intersection(a, b):
    assert (a - b).measure() + (a & b).measure() == a.measure()
    assert (a - b).isdisjoint(b)


@PROPS
@given(interval_sets(), st.data())
def test_prefix(s, data):
    m = data.draw(st.fractions(min_value=0, max_value=1, max_denominator=12)) * s.measure()
    p = s.take_prefix(m)
    assert p.measure() == m
    assert p.issubset(s)


@PROPS
@given(interval_sets(), interval_sets(), interval_sets())
def test_nesting_map(a, b, probe):
    if a.measure() > b.measure():
        a, b = b, a
    m = build_nesting_map(a, b, SPAN)
    assert m.is_bijection()
    assert m.apply(a).issubset(b)
    assert m.apply(probe).measure() == probe.measure()
    # disjoint inputs stay disjoint
    assert m.apply(probe - a).isdisjoint(m.apply(a))
