from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jugglebraid.braid import reduce_word, word_from_crossings
from jugglebraid.errors import InadmissibleParams, WindowMisaligned
from jugglebraid.ladder import (
    CARRY,
    FLIGHT,
    GeometryParams,
    build_ladder,
    crossing_signature,
    default_window,
    find_crossings,
    resolve_geometry,
    resolve_ladder,
)
from jugglebraid.siteswap import validate

from _support import valid_sequences

W = (F(-1, 2), F(3, 2))


def test_default_params():
    p = GeometryParams.default(5)
    assert (p.w, p.c, p.d) == (1, F(1, 48), F(1, 4))
    p.check(5)


@pytest.mark.parametrize(
    "w, c, d", [(1, F(1, 100), F(1, 2)), (1, F(1, 4), F(1, 8)), (1, F(1, 100), 0), (0, F(1, 100), F(1, 8))]
)
def test_inadmissible_params(w, c, d):
    with pytest.raises(InadmissibleParams):
        GeometryParams(w, c, d).check(3)


def test_archimedean_margin():
    with pytest.raises(InadmissibleParams):
        GeometryParams(1, F(1, 5), F(1, 4)).check(9)


@pytest.mark.parametrize("window", [(0, 2), (F(-1, 2), F(1, 2)), (F(1, 2), F(1, 2))])
def test_window_alignment(window):
    with pytest.raises(WindowMisaligned):
        build_ladder([3], window)


def test_cascade_segments():
    diagram = build_ladder([3], W, GeometryParams(1, F(1, 32), F(1, 4)))
    carries = sorted(s.beat for s in diagram.segments if s.kind == CARRY)
    flights = sorted(s.beat for s in diagram.segments if s.kind == FLIGHT)
    assert carries == [0, 1]
    full = [s for s in diagram.segments if s.kind == CARRY]
    assert all(s.t_end - s.t_start == F(1, 4) for s in full)
    assert {-2, -1, 0, 1} <= set(flights)
    assert all(s.t_start < s.t_end for s in diagram.segments)
    assert diagram.n_strands == 3


def test_zero_pattern_is_empty():
    diagram = build_ladder([0], W)
    assert diagram.segments == []
    assert find_crossings(diagram) == []
    params, crossings = resolve_geometry([0], W)
    assert crossings == []


def test_four_has_four_strands():
    diagram = build_ladder([4], W)
    for t in (F(-1, 3), F(0), F(1, 7), F(1, 2), F(4, 3)):
        assert diagram.strands_through(t) == 4


def test_segment_geometry():
    p = GeometryParams(1, F(1, 40), F(1, 4))
    diagram = build_ladder([5, 1], (F(-1, 2), F(19, 2)), p)
    for seg in diagram.segments:
        full = seg.t_start == seg.launch and seg.t_end == seg.land
        if seg.kind == FLIGHT and full:
            assert seg.land - seg.launch == seg.value - p.d
            travel = seg.lateral_end - seg.lateral_start
            if seg.value % 2:
                assert abs(travel) == p.w
            else:
                assert travel == -2 * p.c if seg.from_hand == 0 else travel == 2 * p.c
        if seg.kind == CARRY and full:
            assert seg.land - seg.launch == p.d
            assert seg.height(seg.t_start) == 0


def test_earlier_three_is_over():
    p = GeometryParams(1, F(1, 32), F(1, 4))
    crossings = find_crossings(build_ladder([3], (F(-1, 2), F(7, 2)), p))
    pair = [c for c in crossings if {c.over.beat, c.under.beat} == {0, 1} and c.under.kind == FLIGHT]
    assert len(pair) == 1
    assert pair[0].over.beat == 0


def test_five_over_one():
    _, crossings = resolve_geometry([5, 1], (F(-1, 2), F(7, 2)))
    mixed = [c for c in crossings if c.over.kind == FLIGHT and c.under.kind == FLIGHT]
    assert mixed
    for c in mixed:
        if {c.over.value, c.under.value} == {5, 1}:
            assert c.over.value == 5


def test_four_carry_under_flight():
    _, crossings = resolve_geometry([4], (F(-1, 2), F(7, 2)))
    carry = [c for c in crossings if CARRY in (c.over.kind, c.under.kind)]
    assert carry
    for c in carry:
        assert c.under.kind == CARRY and c.over.kind == FLIGHT and c.over.value == 4


def test_resolve_cascade_first_try():
    res = resolve_ladder([3], W)
    assert res.rounds == 0
    params, crossings = res
    assert params == GeometryParams.default(3)


def test_five_one_stable_under_halving():
    res = resolve_ladder([5, 1], W)
    again = resolve_ladder([5, 1], W, res.params.halved(), confirm=False)
    assert len(res.crossings) == len(again.crossings)
    assert crossing_signature(res.diagram, res.crossings) == crossing_signature(again.diagram, again.crossings)


def test_reidemeister_two_pair():
    # In 4 4 1 the 1 thrown at beat 5 lands under the 4 thrown at beat 4:
    # its flight and then its carry pass under that 4, in opposite directions.
    res = resolve_ladder([4, 4, 1], (F(7, 2), F(19, 2)))
    n = res.diagram.n_strands
    word = word_from_crossings(res.crossings, range(n), n).letters
    idx = [
        i
        for i, c in enumerate(res.crossings)
        if c.over.kind == FLIGHT and c.over.beat == 4 and c.under.beat in (5, 6)
    ]
    assert len(idx) == 2
    a, b = (res.crossings[i] for i in idx)
    assert (a.under.kind, a.under.beat) == (FLIGHT, 5)
    assert (b.under.kind, b.under.beat) == (CARRY, 6)
    assert word[idx[0]] == -word[idx[1]]
    assert idx[1] == idx[0] + 1


def test_even_even_same_hand_never_cross():
    _, crossings = resolve_geometry([4], (F(-1, 2), F(15, 2)))
    assert not [c for c in crossings if c.over.kind == c.under.kind == FLIGHT]
    _, crossings = resolve_geometry([6, 2], (F(-1, 2), F(15, 2)))
    for c in crossings:
        if c.over.kind == c.under.kind == FLIGHT and c.over.value % 2 == 0 and c.under.value % 2 == 0:
            assert c.over.from_hand != c.under.from_hand


def _window(seq, copies=1):
    return default_window(seq, copies)


@settings(max_examples=60, deadline=None)
@given(valid_sequences(max_period=5, max_value=9), st.integers(1, 40))
def test_strand_count_is_ball_count(seq, k):
    res = resolve_ladder(seq, _window(seq))
    d = res.diagram
    t = d.t0 + (d.t1 - d.t0) * F(k, 41)
    if t.denominator == 1:
        t += F(1, 3)
    assert d.strands_through(t) == validate(seq).ball_count


@settings(max_examples=60, deadline=None)
@given(valid_sequences(max_period=5, max_value=9))
def test_periodic_lateral_profile(seq):
    d = resolve_ladder(seq, _window(seq, 2)).diagram
    L = validate(seq).chamber_length
    start = sorted(d.positions_at(d.t0).values())
    later = sorted(d.positions_at(d.t0 + L).values())
    assert start == later


@settings(max_examples=60, deadline=None)
@given(valid_sequences(max_period=5, max_value=9))
def test_crossing_rules(seq):
    res = resolve_ladder(seq, _window(seq))
    for c in res.crossings:
        assert c.over.height(c.time) > c.under.height(c.time)
        o, u = c.over, c.under
        if u.kind == CARRY:
            assert o.kind == FLIGHT
        if o.kind == u.kind == FLIGHT and o.value % 2 and u.value % 2:
            if o.value != u.value:
                assert o.value > u.value
            else:
                assert o.launch < u.launch


@settings(max_examples=40, deadline=None)
@given(valid_sequences(max_period=5, max_value=9))
def test_halving_keeps_reduced_word(seq):
    res = resolve_ladder(seq, _window(seq))
    n = res.diagram.n_strands
    w1 = reduce_word(word_from_crossings(res.crossings, range(n), n))
    for q in (res.params.halved(), res.params.halved().halved()):
        other = resolve_ladder(seq, _window(seq), q, confirm=False)
        assert reduce_word(word_from_crossings(other.crossings, range(n), n)) == w1


def test_closed_form_crossing_time():
    # Two 3-throws in opposite directions, the second thrown s = 2 beats
    # before the first is caught.
    p = GeometryParams(1, F(1, 64), F(1, 8))
    k, s = 3, 2
    _, crossings = resolve_geometry([3], (F(-1, 2), F(7, 2)), p)
    (cr,) = [c for c in crossings if {c.over.beat, c.under.beat} == {0, 1} and c.under.kind == FLIGHT]
    second_throw = (k - s) + p.d / 2
    c_star = 2 * p.c / p.w * (k - p.d)
    assert cr.time - second_throw == F(1, 2) * (s - c_star - p.d)
