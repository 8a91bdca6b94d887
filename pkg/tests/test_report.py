import csv

from uniembed.report import render_report
from uniembed.solver import solve


def test_report_for_feasible_matrix(matrix_a, tmp_path):
    result = solve(matrix_a)
    written = render_report(matrix_a, result, tmp_path / "out")
    names = {p.name for p in written}
    assert names == {"levels.png", "embedding.png", "embedding.csv"}
    for path in written:
        assert path.exists() and path.stat().st_size > 0
    with open(tmp_path / "out" / "embedding.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["vertex", "position", "position_float"]
    assert rows[1] == ["1", "0", "0.0"]
    assert ["d1", "1", "1.0"] in rows


def test_report_for_infeasible_matrix(matrix_b, tmp_path):
    result = solve(matrix_b)
    written = render_report(matrix_b, result, tmp_path / "out")
    names = {p.name for p in written}
    assert names == {"levels.png", "certificate.png", "certificate.csv"}
    for path in written:
        assert path.exists() and path.stat().st_size > 0
    with open(tmp_path / "out" / "certificate.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["cycle", "step", "from", "to", "level", "constraint"]
    assert len(rows) >= 4


def test_report_cli_writes_files(matrix_a, tmp_path, capsys):
    from uniembed.cli import main

    matrix_file = tmp_path / "m.txt"
    matrix_file.write_text(matrix_a.serialize())
    outdir = tmp_path / "report"
    assert main(["report", str(matrix_file), "--outdir", str(outdir)]) == 0
    capsys.readouterr()
    assert (outdir / "levels.png").exists()
    assert (outdir / "embedding.csv").exists()
