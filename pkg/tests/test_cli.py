import json

import pytest

from uniembed.cli import main

from .conftest import FEASIBLE_ROWS, INFEASIBLE_ROWS


def _write_matrix(path, rows, k):
    lines = [f"{len(rows)} {k}"]
    lines.extend(" ".join(str(x) for x in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")
    return str(path)


@pytest.fixture
def feasible_file(tmp_path):
    return _write_matrix(tmp_path / "feasible.txt", FEASIBLE_ROWS, 2)


@pytest.fixture
def infeasible_file(tmp_path):
    return _write_matrix(tmp_path / "infeasible.txt", INFEASIBLE_ROWS, 2)


def test_validate_exit_codes(tmp_path, feasible_file, capsys):
    assert main(["validate", feasible_file]) == 0
    capsys.readouterr()

    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n2 0 2\n0 2 2\n2 2 2\n")
    assert main(["validate", str(bad), "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["witness"] == [1, 2, 3]

    corrupt = tmp_path / "corrupt.txt"
    corrupt.write_text("not a matrix\n")
    assert main(["validate", str(corrupt)]) == 2

    assert main(["validate", str(tmp_path / "missing.txt")]) == 2


def test_solve_exit_codes_and_json(feasible_file, infeasible_file, capsys):
    assert main(["solve", feasible_file, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "feasible"
    assert out["d"] == ["1", "2/3"]
    assert len(out["pi"]) == 5

    assert main(["solve", infeasible_file, "--json"]) == 3
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "infeasible"
    assert [0, 0] in out["certificate"]["bounds"]


def test_solve_human_report_mentions_levels(infeasible_file, capsys):
    assert main(["solve", infeasible_file]) == 3
    out = capsys.readouterr().out
    assert "NO SOLUTION" in out
    assert "level" in out


def test_solve_method_flags(feasible_file, capsys):
    assert main(["solve", feasible_file, "--k2"]) == 0
    assert main(["solve", feasible_file, "--general"]) == 0
    capsys.readouterr()


def test_solve_single_vertex(tmp_path, capsys):
    path = _write_matrix(tmp_path / "one.txt", [[1]], 1)
    assert main(["solve", path, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["pi"] == ["0"]


def test_embed_check_round_trip(tmp_path, feasible_file, capsys):
    assert main(["embed", feasible_file, "--d", "8,6", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["d"] == ["8", "6"]
    emb_file = tmp_path / "embedding.json"
    emb_file.write_text(json.dumps(data))
    assert main(["embed", feasible_file, "--check", str(emb_file)]) == 0
    capsys.readouterr()

    data["pi"][1] = "6"  # boundary gap, rejected by strictness
    emb_file.write_text(json.dumps(data))
    assert main(["embed", feasible_file, "--check", str(emb_file), "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "violation"
    assert (out["u"], out["v"]) == (1, 2)


def test_embed_infeasible_thresholds(feasible_file, capsys):
    assert main(["embed", feasible_file, "--d", "4,1"]) == 3
    capsys.readouterr()


def test_embed_usage_errors(feasible_file, capsys):
    assert main(["embed", feasible_file]) == 2
    assert main(["embed", feasible_file, "--d", "8,6,4"]) == 2
    capsys.readouterr()


def test_bounds_dump_schema(infeasible_file, capsys):
    assert main(["bounds", infeasible_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {"bound": [0, 1], "path": [1, 2]} in out["pairs"]["1,2"]
    assert {"vertices": [1, 2, 6, 4, 1], "bound": [0, 0]} in out["cycles"]


def test_certify_round_trip(tmp_path, infeasible_file, capsys):
    assert main(["solve", infeasible_file, "--json"]) == 3
    cert_file = tmp_path / "cert.json"
    cert_file.write_text(capsys.readouterr().out)
    assert main(["certify", infeasible_file, str(cert_file)]) == 0
    capsys.readouterr()

    data = json.loads(cert_file.read_text())
    data["certificate"]["bounds"][0] = [1, 0]
    cert_file.write_text(json.dumps(data))
    assert main(["certify", infeasible_file, str(cert_file), "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "invalid"


def test_gen_is_deterministic_and_valid(tmp_path, capsys):
    assert main(["gen", "5", "2", "--seed", "1"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "5", "2", "--seed", "1"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.startswith("# status: feasible")
    gen_file = tmp_path / "gen.txt"
    gen_file.write_text(first)
    assert main(["validate", str(gen_file)]) == 0
    assert main(["solve", str(gen_file)]) == 0
    capsys.readouterr()


def test_gen_single_vertex(capsys):
    assert main(["gen", "1", "3", "--seed", "0"]) == 0
    out = capsys.readouterr().out
    assert "1 3" in out
    assert out.strip().endswith("3")


def test_gen_rejects_bad_parameters(capsys):
    assert main(["gen", "0", "2"]) == 2
    capsys.readouterr()


def test_gen_infeasible_hunt_labels_instances(tmp_path, capsys):
    assert main(["gen", "7", "2", "--seed", "9",
                 "--infeasible-attempts", "100"]) == 0
    out = capsys.readouterr().out
    status = out.splitlines()[0]
    assert status in ("# status: feasible", "# status: infeasible")
    gen_file = tmp_path / "gen.txt"
    gen_file.write_text(out)
    expected = 3 if status.endswith("infeasible") else 0
    assert main(["solve", str(gen_file)]) == expected
    capsys.readouterr()


def test_oracle_subcommands(feasible_file, capsys):
    assert main(["oracle", "paths", feasible_file, "1", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {tuple(e["bound"]) for e in out["entries"]} == {(1, 1), (0, 4)}

    assert main(["oracle", "feasible", feasible_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "feasible"

    assert main(["oracle", "buffer", "3,1,1,5", "4,2,3,2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["buffer"] == [4, 2, 2, 2]


def test_oracle_feasible_infeasible_exit(infeasible_file, capsys):
    assert main(["oracle", "feasible", infeasible_file]) == 3
    capsys.readouterr()
