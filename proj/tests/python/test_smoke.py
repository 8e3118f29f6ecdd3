import json
import os
import pathlib
import subprocess

import pytest

import edbound

DATA = pathlib.Path(__file__).resolve().parents[2] / "data" / "instances"
D4 = (DATA / "d4.inst").read_text()


def test_pgl_values():
    assert edbound.pgl_bound(2, 2) == 5
    assert edbound.pgl_bound(3, 2) == 10
    assert edbound.pgl_bound(2, 3) == 25


def test_pgl_rejects_non_prime():
    with pytest.raises(edbound.EdboundError) as info:
        edbound.pgl_bound(4, 2)
    assert info.value.exit_code == 2


def test_compose_right_to_left():
    assert edbound.compose("(1 2 3)", "(1 2)", 3) == "(1 3)"
    assert edbound.parse_cycles("(1,2)", 3) == "(1 2)"


def test_group_queries():
    s4 = edbound.Group.named("symmetric 4")
    assert s4.order == 24
    assert s4.min_generators() == 2
    assert len(s4.subgroup_orders()) == 30
    c6 = edbound.Group.from_generators(5, ["(1 2)(3 4 5)"])
    assert c6.is_cyclic()


def test_d4_bounds():
    assert edbound.thm_h_bound(D4, ["(1 2 3 4)"])["bound"] == 5
    assert edbound.optimal_thm_h_bound(D4, 2)["bound"] == 5
    assert edbound.csa_bound(D4) == 5
    report = edbound.section5_bound(D4)
    assert report["bound"] == 5
    assert report["section5"]["csa_bound"] == 5
    assert report["valid"] is True
    assert report["note"] == edbound.RANK_NOTE


def test_instance_dict_accepted():
    doc = {"degree": 3, "group": ["(1 2 3)", "(1 2)"], "subgroup_H": ["(1 2)"]}
    assert edbound.thm_h_bound(doc, ["(1 2 3)"])["bound"] == 4
    assert edbound.stabilizer_index(doc, "(1 2 3)") == (6, 4, True)


def test_condition_ii_error():
    doc = {"degree": 3, "group": ["(1 2 3)"], "subgroup_H": []}
    with pytest.raises(edbound.EdboundError) as info:
        edbound.thm_h_bound(doc)
    assert info.value.code == "condition_ii"


def test_report_round_trip():
    report = edbound.section5_bound(D4)
    assert edbound.normalize_report(report) == report


def test_cli_json_reloads():
    cli = os.environ.get("EDBOUND_CLI")
    if not cli:
        pytest.skip("EDBOUND_CLI not set")
    out = subprocess.run([cli, "bound", "section5", "--instance", str(DATA / "d4.inst"), "--format", "json"],
                         check=True, capture_output=True, text=True).stdout
    assert edbound.normalize_report(out) == json.loads(out)


def test_compare_row():
    row = edbound.compare_bounds(3, 3)
    assert row["n"] == 27
    assert row["new_bound"] == 136


def test_small_suite():
    result = edbound.run_suite("remark42", 12)
    assert result["passed"]
    assert result["instances"] > 0
