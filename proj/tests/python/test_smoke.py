import json

import pytest

import badred


def test_arithmetic():
    assert badred.kronecker(-20, 13) == -1
    assert badred.sum_of_two_squares(53) == (7, 2)
    with pytest.raises(ValueError):
        badred.sum_of_two_squares(7)


def test_point_counts():
    assert badred.count_points([0, 1, 0, 4, 4], 3) == 6
    assert badred.count_points([0, -1, 1, 0, 0], 2) == 5


def test_registry_and_hypotheses():
    assert "X1_13" in badred.registry_labels()
    assert badred.weaker_holds("X1_15", 7)
    assert badred.stronger_holds("X0_20", 3)
    assert badred.split_check(-11, 3)
    assert badred.cor32_classify(17) == "stronger"


def test_reports():
    s = badred.selmer(13)
    assert s["result"]["dimension"] == 2
    assert [b["name"] for b in s["result"]["basis"]] == ["g1g3g6", "g5g6"]
    assert badred.x113()["result"]["matches_expected"]
    assert badred.intro_demo()["exit_status"] == 0


def test_cli_exit_codes():
    status, out, _ = badred.run_cli(["--format", "json", "selmer", "--q", "19"])
    assert status == 0
    assert json.loads(out)["result"]["basis"][1]["pair"] == "(1, 19)"
    status, _, err = badred.run_cli(["selmer", "--q", "7"])
    assert status == 2
    assert "error" in err
