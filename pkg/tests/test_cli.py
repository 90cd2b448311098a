import json
import logging

import pytest

from critical_popular_matching import cli
from critical_popular_matching.config import Config
from critical_popular_matching.verification import PropertyResult

from .conftest import I2_TEXT, I3_TEXT, I4_TEXT


# Same as I3, with the critical vertex on the women's side
SWAPPED_TEXT = """\
men x1
women y1 y2
critical y2
pref x1: y1 y2
pref y1: x1
pref y2: x1
"""


@pytest.fixture(autouse=True)
def reset_package_logger():
    yield
    logger = logging.getLogger(cli.PACKAGE_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)


def _run(capsys, *argv):
    code = cli.run(list(argv), config=Config())
    return code, json.loads(capsys.readouterr().out)


# --------------------------------------------------------------------------------
# > solve / edge
# --------------------------------------------------------------------------------
def test_solve(capsys, instance_file):
    path = instance_file(I2_TEXT)
    code, output = _run(capsys, "solve", path)
    assert code == cli.EXIT_YES
    assert output == {"objective": "min", "size": 1, "matching": [["a1", "b1"]]}
    _, output = _run(capsys, "solve", path, "--objective", "dominant")
    assert output["matching"] == [["a1", "b2"], ["a2", "b1"]]


def test_edge_yes(capsys, instance_file):
    code, output = _run(capsys, "edge", instance_file(I3_TEXT), "m2", "w1", "--witness")
    assert code == cli.EXIT_YES
    assert output == {
        "decision": "yes",
        "via": "min",
        "lifted_edge": ["m2#1", "w1"],
        "edge": ["m2", "w1"],
        "witness": [["m2", "w1"]],
    }


def test_edge_no(capsys, instance_file):
    code, output = _run(capsys, "edge", instance_file(I3_TEXT), "m1", "w1", "--witness")
    assert code == cli.EXIT_NO
    assert (output["decision"], output["witness"]) == ("no", None)


def test_edge_with_the_oracle(capsys, instance_file):
    code, output = _run(capsys, "edge", instance_file(I2_TEXT), "a2", "b1", "--oracle")
    assert code == cli.EXIT_YES
    assert output["via"] == "dominant"


def test_swapped_instances_answer_in_the_file_orientation(capsys, instance_file):
    path = instance_file(SWAPPED_TEXT)
    code, output = _run(capsys, "edge", path, "x1", "y2", "--witness")
    assert code == cli.EXIT_YES
    assert output["witness"] == [["x1", "y2"]]
    assert output["lifted_edge"] == ["x1", "y2#1"]
    code, _ = _run(capsys, "edge", path, "x1", "y1")
    assert code == cli.EXIT_NO
    _, output = _run(capsys, "solve", path)
    assert output["matching"] == [["x1", "y2"]]


# --------------------------------------------------------------------------------
# > Errors
# --------------------------------------------------------------------------------
def test_unknown_edge(capsys, instance_file):
    code, output = _run(capsys, "edge", instance_file(I2_TEXT), "a2", "b2")
    assert code == cli.EXIT_ERROR
    assert output["error"]["type"] == "UnknownEdgeError"


def test_bad_environment_values_are_reported(capsys, instance_file, monkeypatch):
    monkeypatch.setenv("CPM_ORACLE_EDGE_CAP", "many")
    code = cli.run(["solve", instance_file(I2_TEXT)])
    output = json.loads(capsys.readouterr().out)
    assert code == cli.EXIT_ERROR
    assert output["error"]["type"] == "ConfigError"
    assert "CPM_ORACLE_EDGE_CAP" in output["error"]["message"]


def test_parse_error(capsys, instance_file):
    code, output = _run(capsys, "solve", instance_file("men a\nwomen w\npref a w\n"))
    assert code == cli.EXIT_ERROR
    assert output["error"]["type"] == "ParseError"
    assert output["error"]["message"].startswith("line 3: ")


def test_missing_file(capsys, tmp_path):
    code, output = _run(capsys, "solve", str(tmp_path / "missing.txt"))
    assert code == cli.EXIT_ERROR
    assert output["error"]["type"] == "FileNotFoundError"


def test_bad_arguments_exit_with_usage_errors(capsys):
    with pytest.raises(SystemExit) as error:
        cli.run(["solve"])
    assert error.value.code == 2


def test_main_exits_with_the_code(capsys, instance_file):
    with pytest.raises(SystemExit) as error:
        cli.main(["edge", instance_file(I3_TEXT), "m1", "w1"])
    assert error.value.code == cli.EXIT_NO


# --------------------------------------------------------------------------------
# > reduce / levels / partition
# --------------------------------------------------------------------------------
def test_reduce(capsys, instance_file):
    _, output = _run(capsys, "reduce", instance_file(I3_TEXT))
    assert output["swapped"] is False
    assert "pref w1: m2#1 m1#0 m2#0" in output["text"]
    assert output["instance"]["men"] == ["m1#0", "m2#0", "m2#1"]
    _, output = _run(capsys, "reduce", instance_file(I3_TEXT), "--target", "gpp")
    assert output["target"] == "gpp"
    assert "m2#2" in output["instance"]["men"]


def test_levels(capsys, instance_file):
    path = instance_file(I3_TEXT)
    matching = instance_file("m2 w1\n", name="matching.txt")
    _, output = _run(capsys, "levels", path, "--matching", matching, "--mode", "dom")
    assert output["levels"] == {"m1": 1, "m2": 2, "w1": 2}
    assert output["report"]["passed"] is True
    _, output = _run(capsys, "levels", path, "--matching", matching)
    assert output["levels"] == {"m1": 0, "m2": 1, "w1": 1}


def test_levels_report_failures(capsys, instance_file):
    matching = instance_file("a1 b2\na2 b1\n", name="matching.txt")
    code, output = _run(capsys, "levels", instance_file(I2_TEXT), "--matching", matching)
    assert code == cli.EXIT_ERROR
    assert output["error"]["type"] == "LevelBoundError"


def test_partition(capsys, instance_file):
    matching = instance_file("a1 b1\na3 b4\na4 b3\n", name="matching.txt")
    _, output = _run(capsys, "partition", instance_file(I4_TEXT), "--matching", matching, "--edge", "a1", "b1")
    assert output["parts"] == {"d": ["a3", "a4", "b3", "b4"], "m": ["a1", "a2", "b1", "b2"], "r": []}
    assert output["matchings"]["d"] == [["a3", "b4"], ["a4", "b3"]]
    assert output["levels"]["a4"] == 1
    assert [path["vertices"] for path in output["sraps"]] == [["b4", "a3", "b3", "a4"]]
    assert [path["vertices"] for path in output["siaps"]] == [["a2", "b1", "a1", "b2"]]
    assert output["transformed"] == [["a1", "b1"], ["a3", "b3"]]


# --------------------------------------------------------------------------------
# > gen / verify
# --------------------------------------------------------------------------------
def test_gen_is_deterministic(capsys, tmp_path):
    target = tmp_path / "generated.txt"
    argv = ["gen", "--men", "3", "--women", "3", "--critical", "1", "--seed", "7"]
    _, first = _run(capsys, *argv)
    _, second = _run(capsys, *argv, "--output", str(target))
    assert first == second
    assert first["seed"] == 7
    assert first["instance"]["critical"] == ["m1"]
    assert target.read_text(encoding="utf-8") == first["text"]


def test_verify_a_file(capsys, instance_file):
    code, output = _run(capsys, "verify", instance_file(I2_TEXT))
    assert code == cli.EXIT_YES
    assert output["passed"] is True
    assert output["instances"][0]["seed"] is None


def test_verify_generated_instances(capsys):
    code, output = _run(capsys, "verify", "--men", "2", "--women", "2", "--count", "3", "--seed", "4")
    assert code == cli.EXIT_YES
    assert [run["seed"] for run in output["instances"]] == [4, 5, 6]


def test_verify_refuses_instances_above_the_cap(capsys, instance_file):
    code, output = _run(capsys, "verify", instance_file(I2_TEXT), "--max-edges", "1")
    assert code == cli.EXIT_ERROR
    assert output["error"]["type"] == "OracleCapError"


def test_verify_reports_failures(capsys, instance_file, monkeypatch):
    failing = [PropertyResult("witness", False, message="no witness")]
    monkeypatch.setattr(cli, "run_suite", lambda inst, config: failing)
    code, output = _run(capsys, "verify", instance_file(I2_TEXT))
    assert code == cli.EXIT_INTERNAL
    assert output["passed"] is False
    assert output["instances"][0]["properties"][0]["message"] == "no witness"


def test_verbose_logs_go_to_stderr(capsys, instance_file):
    cli.run(["-v", "solve", instance_file(I3_TEXT)], config=Config())
    captured = capsys.readouterr()
    assert json.loads(captured.out)["size"] == 1
    assert "INFO" in captured.err
