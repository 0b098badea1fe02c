import json
from pathlib import Path

import pytest

from cli import main, parse_element, parse_element_list
from errors import InputError


def _report(capsys):
    return json.loads(capsys.readouterr().out)


def test_check_bases_pass(instance_path, capsys):
    assert main(["check-bases", instance_path("example_n4_bases.json")]) == 0
    assert capsys.readouterr().out.strip() == "symplectic: true, rank 3"


def test_check_bases_fail_renders_chain(instance_path, capsys):
    assert main(["check-bases", instance_path("nonexample_n3.json")]) == 1
    out = capsys.readouterr().out
    assert "symplectic: false" in out
    assert "ordering: 1 < 3 < 2* < 2 < 3* < 1*" in out
    assert "incomparable: {1, 2} and {2*, 3}" in out


def test_check_bases_json_report(instance_path, capsys):
    assert main(["check-bases", instance_path("nonexample_n3.json"), "--format", "json"]) == 1
    report = _report(capsys)
    assert report["status"] == "fail"
    assert report["axiom"] == "MAX"
    assert report["witness"]["lower_half"] == [1, 3, -2]
    assert report["witness"]["chain"] == "1 < 3 < 2* < 2 < 3* < 1*"
    assert report["witness"]["first"] == [1, 2]
    assert report["witness"]["second"] == [-2, 3]


def test_format_falls_back_to_environment(instance_path, capsys, monkeypatch):
    monkeypatch.setenv("SYMPLECTIC_FORMAT", "json")
    assert main(["check-bases", instance_path("example_n4_bases.json")]) == 0
    report = _report(capsys)
    assert report["status"] == "pass"
    assert report["rank"] == 3


def test_replay_reproduces_failure(instance_path, tmp_path, capsys):
    main(["check-bases", instance_path("nonexample_n3.json"), "--format", "json"])
    report = tmp_path / "report.json"
    report.write_text(capsys.readouterr().out)

    assert main(["check-bases", instance_path("nonexample_n3.json"), "--replay", str(report)]) == 0
    assert capsys.readouterr().out.strip() == "replay: failure reproduced"

    other = tmp_path / "other.json"
    other.write_text(json.dumps({"n": 3, "kind": "bases", "sets": [[1, 2], [1, 3]]}))
    assert main(["check-bases", str(other), "--replay", str(report)]) == 1


def test_replay_of_circuit_failure(tmp_path, capsys):
    instance = tmp_path / "sc4.json"
    instance.write_text(json.dumps({"n": 2, "kind": "circuits", "sets": [[1, 2], [1, -2]]}))
    assert main(["check-circuits", str(instance), "--format", "json"]) == 1
    report = _report(capsys)
    assert report["axiom"] == "SC4"
    assert report["axioms"]["SC3"]["status"] == "pass"
    saved = tmp_path / "report.json"
    saved.write_text(json.dumps(report))
    assert main(["check-circuits", str(instance), "--replay", str(saved)]) == 0


def test_replay_needs_a_failing_report(instance_path, tmp_path, capsys):
    report = tmp_path / "pass.json"
    report.write_text(json.dumps({"status": "pass"}))
    assert main(["check-bases", instance_path("example_n4_bases.json"), "--replay", str(report)]) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_check_circuits_pass(instance_path, capsys):
    assert main(["check-circuits", instance_path("example_n4_circuits.json")]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "SC1: pass"
    assert lines[-1] == "circuit axioms: true, rank 3"


def test_check_circuits_rejects_bases_file(instance_path, capsys):
    assert main(["check-circuits", instance_path("example_n4_bases.json")]) == 2
    assert "expected a circuits instance" in capsys.readouterr().err


def test_convert_to_circuits(instance_path, capsys):
    assert main(["convert", "--to", "circuits", instance_path("example_n4_bases.json")]) == 0
    instance = _report(capsys)
    assert instance["kind"] == "circuits"
    assert instance["sets"] == [[1, -2], [-1, 2], [-1, 4], [2, 4], [-3], [-4]]


def test_convert_round_trip(instance_path, tmp_path, capsys):
    main(["convert", "--to", "circuits", instance_path("example_n4_bases.json")])
    circuits = tmp_path / "circuits.json"
    circuits.write_text(capsys.readouterr().out)
    assert main(["convert", "--to", "bases", str(circuits)]) == 0
    original = json.loads(Path(instance_path("example_n4_bases.json")).read_text())
    assert _report(capsys)["sets"] == original["sets"]


@pytest.mark.parametrize(
    "emit, expected",
    [
        ("circuits", [[1, 2], [-1, -2]]),
        ("bases", [[1, -2], [-1, 2]]),
    ],
)
def test_from_graph(instance_path, capsys, emit, expected):
    assert main(["from-graph", instance_path("digon.json"), "--emit", emit]) == 0
    assert _report(capsys)["sets"] == expected


def test_fundamental_circuit(instance_path, capsys):
    path = instance_path("example_n4_bases.json")
    assert main(["fundamental-circuit", path, "--basis", "1,2,3", "--element", "4"]) == 0
    assert capsys.readouterr().out.strip() == "{2, 4}"
    assert main(["fundamental-circuit", path, "--basis", "1,2,3", "--element", "4*"]) == 0
    assert capsys.readouterr().out.strip() == "{4*}"


def test_fundamental_circuit_rejects_non_basis(instance_path, capsys):
    path = instance_path("example_n4_bases.json")
    assert main(["fundamental-circuit", path, "--basis", "1,2,4", "--element", "3"]) == 2
    assert "not a member" in capsys.readouterr().err


def test_dual_text(instance_path, capsys):
    assert main(["dual", instance_path("example_n4_bases.json"), "--format", "text"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "bases over E±4: 4"
    assert "{1*, 2*, 3*}" in lines


def test_enumerate_symplectic_only(capsys):
    assert main(["enumerate", "--n", "2", "--k", "1", "--symplectic-only"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "collections: 15"


def test_enumerate_summary_json(capsys):
    assert main(["enumerate", "--n", "2", "--k", "2", "--summary", "--format", "json"]) == 0
    summary = _report(capsys)
    assert summary["collections"] == 15
    assert summary["symplectic"] == 15


def test_enumerate_guard(capsys):
    assert main(["enumerate", "--n", "4", "--k", "1"]) == 2
    assert "random_collection" in capsys.readouterr().err


def test_random_is_seeded(capsys):
    assert main(["random", "--n", "4", "--k", "3", "--count", "4", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    main(["random", "--n", "4", "--k", "3", "--count", "4", "--seed", "5"])
    assert capsys.readouterr().out == first
    assert len(json.loads(first)["sets"]) == 4


def test_random_count_too_large(capsys):
    assert main(["random", "--n", "2", "--k", "2", "--count", "5", "--seed", "1"]) == 2


def test_missing_file(tmp_path, capsys):
    assert main(["check-bases", str(tmp_path / "missing.json")]) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_inadmissible_set_names_the_set(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "kind": "bases", "sets": [[1, -1]]}))
    assert main(["check-bases", str(path)]) == 2
    err = capsys.readouterr().err
    assert err.count("\n") == 1
    assert "sets[0]" in err


def test_max_n_guard(instance_path, monkeypatch, capsys):
    assert main(["check-bases", instance_path("nonexample_n3.json"), "--max-n", "2"]) == 2
    monkeypatch.setenv("SYMPLECTIC_MAX_N", "zero")
    assert main(["check-bases", instance_path("nonexample_n3.json")]) == 2


def test_unknown_command_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


@pytest.mark.parametrize("raw, expected", [("3", 3), ("-3", -3), ("3*", -3), (" 2* ", -2)])
def test_parse_element(raw, expected):
    assert parse_element(raw) == expected


@pytest.mark.parametrize("raw", ["0", "x", "-3*", "*"])
def test_parse_element_rejects(raw):
    with pytest.raises(InputError):
        parse_element(raw)


def test_parse_element_list():
    assert parse_element_list("1, 2*,3") == [1, -2, 3]
    assert parse_element_list("") == []


def test_random_without_seed_is_reproducible(capsys):
    assert main(["random", "--n", "4", "--k", "3", "--count", "4"]) == 0
    unseeded = capsys.readouterr().out
    main(["random", "--n", "4", "--k", "3", "--count", "4", "--seed", "0"])
    assert capsys.readouterr().out == unseeded
