from collections import Counter

import pytest
from hypothesis import given, strategies as st

from starfactors.core import (
    AmbiguousTailError,
    DegenerateEdgeError,
    Star,
    edge_difference,
    half_period_matching,
    tail_of,
)


@pytest.mark.parametrize("u, w, g, diff, orientation", [
    (0, 35, 42, 7, "wrap-around"),
    (36, 37, 42, 1, "forward"),
    (0, 21, 42, 21, "forward"),
])
def test_edge_difference_examples(u, w, g, diff, orientation):
    e = edge_difference(u, w, g)
    assert (e.diff, e.orientation) == (diff, orientation)


def test_loop_is_rejected():
    with pytest.raises(DegenerateEdgeError):
        edge_difference(3, 3, 10)


@given(st.integers(2, 400).flatmap(
    lambda g: st.tuples(st.just(g), st.integers(0, g - 1), st.integers(0, g - 1))))
def test_difference_symmetric_and_bounded(args):
    g, u, w = args
    if u == w:
        return
    a, b = edge_difference(u, w, g), edge_difference(w, u, g)
    assert a.diff == b.diff
    assert 1 <= a.diff <= g // 2
    gap = abs(w - u)
    # forward and wrap-around readings of one pair add up to g
    assert gap + (g - gap) == g
    assert a.diff == min(gap, g - gap)


@pytest.mark.parametrize("u, w, v, tail", [
    (0, 35, 42, 35),
    (36, 37, 42, 36),
    (1, 29, 42, 29),
])
def test_tail_examples(u, w, v, tail):
    assert tail_of(u, w, v) == tail
    assert tail_of(w, u, v) == tail


def test_half_period_tail_is_ambiguous():
    with pytest.raises(AmbiguousTailError):
        tail_of(0, 21, 42)


@pytest.mark.parametrize("v", [12, 42, 72, 102, 132, 162, 192])
def test_tails_split_each_difference_evenly(v):
    # every difference below v/2 has v edges; tails spread them 6 ways
    for d in range(1, v // 2):
        classes = Counter(tail_of(x, (x + d) % v, v) % 6 for x in range(v))
        assert classes == {i: v // 6 for i in range(6)}


def test_half_period_matching():
    assert half_period_matching(12) == ((0, 6), (1, 7), (2, 8), (3, 9), (4, 10), (5, 11))


def test_star_translate_and_edges():
    s = Star(40, (41, 0, 1, 2, 3))
    assert s.translate(6, 42) == Star(4, (5, 6, 7, 8, 9))
    assert list(s.edges()) == [(40, 41), (40, 0), (40, 1), (40, 2), (40, 3)]
