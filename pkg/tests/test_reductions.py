import pytest
from hypothesis import given, settings

from critical_popular_matching import oracle
from critical_popular_matching.exceptions import (
    CriticalSideError,
    InfeasibleInstanceError,
    LevelMismatchError,
    LevelRangeError,
    NotStableError,
)
from critical_popular_matching.gale_shapley import is_stable, propose_man_optimal
from critical_popular_matching.models import MarriageInstance, Matching, swap_sides
from critical_popular_matching.reductions import (
    LevelAssignment,
    ReductionKind,
    build_gdoubleprime,
    build_gprime,
    image,
    image_levels,
    image_with_levels,
    lift_edge,
    preimage,
)

from .strategies import instances


# --------------------------------------------------------------------------------
# > Construction
# --------------------------------------------------------------------------------
def test_gprime_of_i3(i3):
    red = build_gprime(i3)
    assert red.kind is ReductionKind.GPRIME
    assert red.inst.men == ("m1#0", "m2#0", "m2#1")
    assert red.inst.women == ("w1", "d(m2)#1")
    assert red.inst.pref("w1") == ("m2#1", "m1#0", "m2#0")
    assert red.inst.pref("m2#0") == ("w1", "d(m2)#1")
    assert red.inst.pref("m2#1") == ("d(m2)#1", "w1")
    assert red.inst.pref("d(m2)#1") == ("m2#0", "m2#1")
    assert red.copy_of["m2#1"] == ("m2", 1)
    assert red.is_dummy("d(m2)#1")


def test_gdoubleprime_gives_every_man_two_levels(i2):
    red = build_gdoubleprime(i2)
    assert red.levels_per_man == {"a1": 1, "a2": 1}
    assert red.inst.pref("a1#0") == ("b1", "b2", "d(a1)#1")
    assert red.inst.pref("a1#1") == ("d(a1)#1", "b1", "b2")
    assert red.inst.pref("b1") == ("a1#1", "a2#1", "a1#0", "a2#0")


def test_gprime_without_critical_men_is_a_copy(i2):
    red = build_gprime(i2)
    assert red.inst.men == ("a1#0", "a2#0")
    assert red.inst.women == ("b1", "b2")


def test_rejects_critical_women(i3):
    with pytest.raises(CriticalSideError):
        build_gprime(swap_sides(i3))


def test_rejects_infeasible_instances():
    inst = MarriageInstance(
        ["m1", "m2"], ["w1"], {"m1": ["w1"], "m2": ["w1"], "w1": ["m1", "m2"]}, critical=["m1", "m2"]
    )
    with pytest.raises(InfeasibleInstanceError):
        build_gdoubleprime(inst)


def test_copy_checks_its_range(i3):
    red = build_gprime(i3)
    assert red.copy("m2", 1) == "m2#1"
    with pytest.raises(LevelRangeError):
        red.copy("m1", 1)
    with pytest.raises(LevelRangeError):
        red.copy("w1", 0)


# --------------------------------------------------------------------------------
# > Maps
# --------------------------------------------------------------------------------
def test_image_of_i3(i3):
    red = build_gprime(i3)
    reduced = propose_man_optimal(red.inst)
    assert reduced == Matching([("m2#0", "d(m2)#1"), ("m2#1", "w1")])
    matching, levels = image_with_levels(red, reduced)
    assert matching == Matching([("m2", "w1")])
    assert levels == {"m1": 0, "m2": 1, "w1": 1}


def test_image_of_i2_in_gdoubleprime(i2):
    red = build_gdoubleprime(i2)
    reduced = propose_man_optimal(red.inst)
    assert image(red, reduced) == Matching([("a1", "b2"), ("a2", "b1")])
    assert image_levels(red, reduced) == {"a1": 0, "a2": 1, "b1": 1, "b2": 0}


def test_image_rejects_unstable_matchings(i3):
    red = build_gprime(i3)
    with pytest.raises(NotStableError) as error:
        image(red, Matching([("m1#0", "w1")]))
    assert error.value.pairs


def test_lift_edge(i3):
    red = build_gprime(i3)
    assert lift_edge(red, ("m2", "w1")) == [("m2#0", "w1"), ("m2#1", "w1")]
    assert lift_edge(red, ("m1", "w1")) == [("m1#0", "w1")]


def test_preimage_inverts_image(i3):
    red = build_gprime(i3)
    reduced = preimage(red, Matching([("m2", "w1")]), {"m1": 0, "m2": 1, "w1": 1})
    assert reduced == propose_man_optimal(red.inst)


@pytest.mark.parametrize(
    "levels, error",
    [
        ({"m1": 0, "m2": 1, "w1": 0}, LevelMismatchError),
        ({"m1": 0, "m2": 2, "w1": 2}, LevelRangeError),
        ({"m2": 1, "w1": 1}, LevelRangeError),
    ],
)
def test_preimage_errors(i3, levels, error):
    with pytest.raises(error):
        preimage(build_gprime(i3), Matching([("m2", "w1")]), levels)


def test_level_assignment():
    levels = LevelAssignment({"b": 1, "a": 0})
    assert levels == {"a": 0, "b": 1}
    assert list(levels.as_dict()) == ["a", "b"]
    with pytest.raises(LevelRangeError):
        LevelAssignment({"a": -1})


# --------------------------------------------------------------------------------
# > Against the oracle
# --------------------------------------------------------------------------------
@settings(max_examples=40, deadline=None)
@given(instances(max_men=3, max_women=3, max_critical=1))
def test_stable_matchings_map_to_the_right_matchings(inst):
    red = build_gprime(inst)
    smallest, levels = image_with_levels(red, propose_man_optimal(red.inst))
    assert smallest in oracle.min_size_pfms(inst)
    assert is_stable(red.inst, preimage(red, smallest, levels))
    red = build_gdoubleprime(inst)
    assert image(red, propose_man_optimal(red.inst)) in oracle.dominant_fms(inst)
