import json

import pytest

from rdomsim import CSV_HEADER, read_graph
from rdomsim.cli import EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_generate_writes_graph_and_sidecar(tmp_path, capsys):
    out = tmp_path / "c11.graph"
    code, stdout = run_cli(capsys, "generate", "--family", "cycle",
                           "--n", "11", "-o", str(out))
    assert code == EXIT_OK
    g = read_graph(out)
    assert g.vertex_count == 11 and g.edge_count == 11
    sidecar = json.loads((tmp_path / "c11.graph.json").read_text())
    assert sidecar["family"] == "cycle"
    assert sidecar["girth"] == 11
    assert sidecar["expansion_bound"] == 1
    assert json.loads(stdout)["n"] == 11


def test_generate_tree_sidecar_reports_infinite_girth(tmp_path, capsys):
    out = tmp_path / "t.graph"
    code, _ = run_cli(capsys, "generate", "--family", "tree", "--n", "30",
                      "--seed", "2", "-o", str(out))
    assert code == EXIT_OK
    sidecar = json.loads((tmp_path / "t.graph.json").read_text())
    assert sidecar["girth"] == "inf"


def test_generate_rejects_bad_spec(tmp_path, capsys):
    code, stdout = run_cli(capsys, "generate", "--family", "cycle",
                           "--n", "2", "-o", str(tmp_path / "x"))
    assert code == EXIT_ERROR
    assert json.loads(stdout)["error"] == "bad_spec"


def test_run_rmds_cycle_passes(tmp_path, capsys):
    json_out = tmp_path / "r.json"
    code, stdout = run_cli(capsys, "run", "--family", "cycle", "--n", "23",
                           "--r", "2", "--algo", "rmds",
                           "--json", str(json_out))
    assert code == EXIT_OK
    payload = json.loads(stdout)
    assert payload["passed"] is True
    assert payload["report"]["rounds_executed"] == 5
    assert json.loads(json_out.read_text())["passed"] is True


def test_run_refuses_low_girth_without_override(capsys):
    code, stdout = run_cli(capsys, "run", "--family", "cycle", "--n", "5",
                           "--r", "2", "--algo", "rmds")
    assert code == EXIT_ERROR
    assert json.loads(stdout)["error"] == "girth_premise"


def test_run_low_girth_override_executes(capsys):
    code, stdout = run_cli(capsys, "run", "--family", "cycle", "--n", "4",
                           "--r", "1", "--algo", "rmds", "--m", "0",
                           "--allow-low-girth")
    payload = json.loads(stdout)
    assert code in (EXIT_OK, EXIT_CHECK_FAILED)
    assert payload["report"]["checks"]["dominating"] is True


def test_run_cycle_is_with_trivial_d(capsys):
    code, stdout = run_cli(capsys, "run", "--family", "cycle", "--n", "25",
                           "--r", "1", "--algo", "cycle_is",
                           "--d-source", "trivial")
    assert code == EXIT_OK
    assert json.loads(stdout)["passed"] is True


def test_run_writes_single_row_csv(tmp_path, capsys):
    csv_out = tmp_path / "row.csv"
    code, _ = run_cli(capsys, "run", "--family", "cycle", "--n", "11",
                      "--r", "1", "--csv", str(csv_out))
    assert code == EXIT_OK
    lines = csv_out.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 2 and lines[1].startswith("cycle,11,1,")


def test_verify_dominating_and_independent(tmp_path, capsys):
    out = tmp_path / "c9.graph"
    run_cli(capsys, "generate", "--family", "cycle", "--n", "9",
            "-o", str(out))
    good = tmp_path / "good.txt"
    good.write_text("0 3 6\n")
    code, stdout = run_cli(capsys, "verify", "--graph", str(out),
                           "--set", str(good), "--r", "1",
                           "--check", "dominating")
    assert code == EXIT_OK and json.loads(stdout)["dominating"] is True

    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n")
    code, stdout = run_cli(capsys, "verify", "--graph", str(out),
                           "--set", str(bad), "--r", "1", "--check", "both")
    payload = json.loads(stdout)
    assert code == EXIT_CHECK_FAILED
    assert payload["independent"] is False and payload["pass"] is False


def test_verify_requires_r_for_domination(tmp_path, capsys):
    out = tmp_path / "c9.graph"
    run_cli(capsys, "generate", "--family", "cycle", "--n", "9",
            "-o", str(out))
    s = tmp_path / "s.txt"
    s.write_text("0\n")
    code, stdout = run_cli(capsys, "verify", "--graph", str(out),
                           "--set", str(s), "--check", "dominating")
    assert code == EXIT_ERROR
    assert json.loads(stdout)["error"] == "bad_spec"


def test_suite_custom_config(tmp_path, capsys):
    config = tmp_path / "suite.json"
    config.write_text(json.dumps({"experiments": [
        {"family": "cycle", "n": 11, "r": 1, "algo": "rmds"},
        {"family": "cycle", "n": 15, "r": 1, "algo": "count"},
    ]}))
    csv_out = tmp_path / "suite.csv"
    code, stdout = run_cli(capsys, "suite", str(config), "--csv", str(csv_out))
    assert code == EXIT_OK
    summary = json.loads(stdout)
    assert summary == {"experiments": 2, "failed": 0, "failures": []}
    lines = csv_out.read_text().splitlines()
    assert lines[0] == CSV_HEADER and len(lines) == 3


def test_suite_empty_config_yields_header_only_csv(tmp_path, capsys):
    config = tmp_path / "empty.json"
    config.write_text("[]")
    code, stdout = run_cli(capsys, "suite", str(config))
    assert code == EXIT_OK
    assert stdout.splitlines()[0] == CSV_HEADER


def test_suite_without_source_is_an_error(capsys):
    code, stdout = run_cli(capsys, "suite")
    assert code == EXIT_ERROR
    assert json.loads(stdout)["error"] == "bad_spec"


def test_run_on_graph_file(tmp_path, capsys):
    out = tmp_path / "c11.graph"
    run_cli(capsys, "generate", "--family", "cycle", "--n", "11",
            "-o", str(out))
    code, stdout = run_cli(capsys, "run", "--graph", str(out), "--r", "1",
                           "--f-r", "1")
    assert code == EXIT_OK
    assert json.loads(stdout)["passed"] is True
