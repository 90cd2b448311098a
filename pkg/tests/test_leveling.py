import pytest
from hypothesis import given, settings

from critical_popular_matching import oracle
from critical_popular_matching.exceptions import LevelBoundError, UnmatchedPromotionError
from critical_popular_matching.gale_shapley import is_stable
from critical_popular_matching.leveling import (
    assign_levels_dom,
    assign_levels_min,
    check_dom_conditions,
    check_min_conditions,
    level_gaps,
)
from critical_popular_matching.models import Matching
from critical_popular_matching.reductions import build_gdoubleprime, build_gprime, preimage
from critical_popular_matching.solver import min_size_pfm

from .strategies import instances


# --------------------------------------------------------------------------------
# > Leveling
# --------------------------------------------------------------------------------
def test_levels_of_i3(i3):
    matching = Matching([("m2", "w1")])
    levels = assign_levels_min(i3, matching)
    assert levels == {"m1": 0, "m2": 1, "w1": 1}
    assert check_min_conditions(i3, matching, levels)
    levels = assign_levels_dom(i3, matching)
    assert levels == {"m1": 1, "m2": 2, "w1": 2}
    assert check_dom_conditions(i3, matching, levels)


def test_levels_of_i2(i2):
    smallest = Matching([("a1", "b1")])
    assert assign_levels_min(i2, smallest) == {"a1": 0, "a2": 0, "b1": 0, "b2": 0}
    dominant = Matching([("a1", "b2"), ("a2", "b1")])
    levels = assign_levels_dom(i2, dominant)
    assert levels == {"a1": 0, "a2": 1, "b1": 1, "b2": 0}
    assert check_dom_conditions(i2, dominant, levels)


def test_min_leveling_rejects_larger_matchings(i2, aligned):
    with pytest.raises(LevelBoundError) as error:
        assign_levels_min(i2, Matching([("a1", "b2"), ("a2", "b1")]))
    assert error.value.edge == ("a1", "b1")
    with pytest.raises(LevelBoundError):
        assign_levels_min(aligned, Matching([("m0", "x0"), ("n0", "w0")]))


def test_relaxed_leveling_lets_plain_men_reach_level_one(i2):
    levels = assign_levels_min(i2, Matching([("a1", "b2"), ("a2", "b1")]), relaxed=True)
    assert levels == {"a1": 0, "a2": 1, "b1": 1, "b2": 0}


def test_unpopular_matching_promotes_an_unmatched_woman(i2):
    with pytest.raises(UnmatchedPromotionError) as error:
        assign_levels_min(i2, Matching([("a1", "b2")]))
    assert error.value.edge == ("a1", "b1")


# --------------------------------------------------------------------------------
# > Checkers
# --------------------------------------------------------------------------------
def test_condition_zero(i3):
    report = check_min_conditions(i3, Matching([("m1", "w1")]), {"m1": 0, "m2": 0, "w1": 0})
    assert (report.passed, report.condition, report.vertex) == (False, 0, "m2")
    report = check_min_conditions(i3, Matching([("m2", "w1")]), {"m1": 0, "w1": 1})
    assert report.condition == 0


def test_condition_one(i3):
    report = check_min_conditions(i3, Matching([("m2", "w1")]), {"m1": 0, "m2": 0, "w1": 0})
    assert not report
    assert (report.condition, report.edge) == (1, ("m1", "w1"))
    assert report.as_dict()["edge"] == ["m1", "w1"]


def test_condition_two(i2):
    report = check_dom_conditions(i2, Matching([("a1", "b1")]), {"a1": 0, "a2": 1, "b1": 0, "b2": 0})
    assert (report.condition, report.edge) == (2, ("a2", "b1"))


def test_condition_three(i2):
    report = check_dom_conditions(
        i2, Matching([("a1", "b2"), ("a2", "b1")]), {"a1": 0, "a2": 1, "b1": 1, "b2": 1}
    )
    assert (report.condition, report.edge) == (3, ("a1", "b2"))


def test_condition_four(i3):
    report = check_dom_conditions(i3, Matching([("m2", "w1")]), {"m1": 0, "m2": 2, "w1": 2})
    assert (report.condition, report.vertex) == (4, "m1")


def test_level_gaps(i3):
    assert level_gaps(i3, Matching([("m2", "w1")]), {"m1": 2, "m2": 0, "w1": 0}) == [("m1", "w1")]


# --------------------------------------------------------------------------------
# > Round trips
# --------------------------------------------------------------------------------
@settings(max_examples=40, deadline=None)
@given(instances(max_men=3, max_women=3, max_critical=1))
def test_dominant_matchings_are_certified(inst):
    red = build_gdoubleprime(inst)
    for matching in oracle.dominant_fms(inst):
        levels = assign_levels_dom(inst, matching)
        assert check_dom_conditions(inst, matching, levels)
        assert is_stable(red.inst, preimage(red, matching, levels))


@settings(max_examples=40, deadline=None)
@given(instances(max_men=3, max_women=3, max_critical=1))
def test_levels_of_the_smallest_image_are_certified(inst):
    red = build_gprime(inst)
    matching = min_size_pfm(inst)
    levels = assign_levels_min(inst, matching)
    assert check_min_conditions(inst, matching, levels)
    assert is_stable(red.inst, preimage(red, matching, levels))
