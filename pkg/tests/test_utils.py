from critical_popular_matching.models import Matching
from critical_popular_matching.reductions import LevelAssignment
from critical_popular_matching.utils import (
    dump_json,
    edge_as_list,
    instance_as_dict,
    levels_as_dict,
    matching_as_list,
)


def test_dump_json_is_canonical():
    assert dump_json({"b": 1, "a": ["é"]}) == '{\n  "a": [\n    "é"\n  ],\n  "b": 1\n}\n'


def test_edge_and_matching_as_lists():
    assert edge_as_list(("m", "w")) == ["m", "w"]
    assert matching_as_list(Matching([("a2", "b1"), ("a1", "b2")])) == [["a1", "b2"], ["a2", "b1"]]


def test_instance_as_dict(i3):
    assert instance_as_dict(i3) == {
        "men": ["m1", "m2"],
        "women": ["w1"],
        "critical": ["m2"],
        "pref": {"m1": ["w1"], "m2": ["w1"], "w1": ["m1", "m2"]},
    }


def test_levels_as_dict():
    assert list(levels_as_dict(LevelAssignment({"w1": 1, "m2": 1, "m1": 0}))) == ["m1", "m2", "w1"]
