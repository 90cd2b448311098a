import pytest
from hypothesis import given, settings

from critical_popular_matching.exceptions import InvalidMatchingError
from critical_popular_matching.gale_shapley import propose_man_optimal, propose_woman_optimal
from critical_popular_matching.models import Matching
from critical_popular_matching.voting import (
    EdgeLabel,
    VoteTally,
    label_edge,
    prefers,
    symmetric_difference,
    tally,
)

from .strategies import uncritical_instances


def test_prefers(i2):
    assert prefers(i2, "b1", "a1", "a2") == 1
    assert prefers(i2, "b1", "a2", "a1") == -1
    assert prefers(i2, "b1", None, "a2") == -1
    assert prefers(i2, "b2", "a1", None) == 1
    assert prefers(i2, "b2", None, None) == 0


def test_label_edge(i2):
    matching = Matching([("a1", "b1")])
    assert label_edge(i2, matching, ("a2", "b1")) == EdgeLabel(1, -1)
    assert label_edge(i2, matching, ("a1", "b2")) == EdgeLabel(-1, 1)
    assert label_edge(i2, Matching([("a1", "b2")]), ("a1", "b1")).is_plus_plus
    with pytest.raises(InvalidMatchingError):
        label_edge(i2, matching, ("a1", "b1"))


def test_tally(i2):
    smaller = Matching([("a1", "b1")])
    larger = Matching([("a1", "b2"), ("a2", "b1")])
    assert tally(i2, smaller, larger) == VoteTally(2, 2)
    assert tally(i2, Matching([("a1", "b2")]), smaller) == VoteTally(1, 2)
    assert tally(i2, smaller, Matching([("a1", "b2")])).reversed() == VoteTally(1, 2)


def test_symmetric_difference_of_i4(i4, i4_middle):
    smallest = Matching([("a1", "b1"), ("a3", "b3")])
    (component,) = symmetric_difference(i4, i4_middle, smallest)
    assert component.is_path
    assert component.vertices == ("a4", "b3", "a3", "b4")
    assert component.edges == (("a4", "b3"), ("a3", "b3"), ("a3", "b4"))
    assert (component.plus_plus, component.minus_minus) == (1, 0)
    assert component.oriented_from("b4").vertices == ("b4", "a3", "b3", "a4")
    assert Matching(i4_middle.edges ^ set(component.edges)) == smallest


def test_symmetric_difference_finds_cycles(crossed):
    (component,) = symmetric_difference(crossed, propose_man_optimal(crossed), propose_woman_optimal(crossed))
    assert component.kind == "cycle"
    assert component.vertices == ("m1", "w1", "m2", "w2")
    assert component.endpoints == ()


def test_oriented_from_rejects_inner_vertices(i4, i4_middle):
    (component,) = symmetric_difference(i4, i4_middle, Matching([("a1", "b1"), ("a3", "b3")]))
    with pytest.raises(ValueError):
        component.oriented_from("b3")


@settings(max_examples=40, deadline=None)
@given(uncritical_instances(max_men=4, max_women=4))
def test_stable_matchings_lose_no_vote_to_each_other(inst):
    man_optimal = propose_man_optimal(inst)
    woman_optimal = propose_woman_optimal(inst)
    votes = tally(inst, man_optimal, woman_optimal)
    assert votes.for_first == votes.for_second
    for component in symmetric_difference(inst, man_optimal, woman_optimal):
        assert component.plus_plus == 0
