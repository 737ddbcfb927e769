import json

import pytest

from ruincapital.cli import main
from ruincapital.table import CurveTable

UNIT_CONFIG = {
    "model": {
        "t_law": {"family": "exponential", "rate": 1.0},
        "y_law": {"family": "exponential", "rate": 1.0},
    }
}


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps(UNIT_CONFIG))
    return str(path)


def test_constants_command(config_path, tmp_path, capsys):
    out = tmp_path / "k.csv"
    rc = main(["constants", "--config", config_path, "--out", str(out)])
    assert rc == 0
    table = CurveTable.read_csv(out)
    row = table.rows[0]
    got = dict(zip(table.columns, row))
    assert got["c_star"] == pytest.approx(1.0)
    assert got["d2_big"] == pytest.approx(2.0)


def test_capital_command_exact_and_clt(config_path, tmp_path):
    out = tmp_path / "cap.csv"
    rc = main(
        [
            "capital",
            "--config",
            config_path,
            "--kind",
            "var",
            "--alpha",
            "0.05",
            "--t",
            "200",
            "--c-start",
            "1.0",
            "--c-stop",
            "1.0",
            "--c-step",
            "0.5",
            "--method",
            "exact,clt",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    table = CurveTable.read_csv(out)
    got = dict(zip(table.columns, table.rows[0]))
    # exact and CLT Value-at-Risk capitals agree closely at c = 1, t = 200
    assert abs(got["var_exact"] - got["var_clt"]) < 1.5
    assert table.metadata["config"] == UNIT_CONFIG


def test_ruinprob_command_na_at_equilibrium(config_path, tmp_path):
    out = tmp_path / "rp.csv"
    rc = main(
        [
            "ruinprob",
            "--config",
            config_path,
            "--u",
            "40",
            "--t",
            "200",
            "--c-start",
            "0.9",
            "--c-stop",
            "1.1",
            "--c-step",
            "0.1",
            "--method",
            "exact,cramer",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    table = CurveTable.read_csv(out)
    rows = {row[0]: dict(zip(table.columns, row)) for row in table.rows}
    # the normal approximation is undefined exactly at c* = 1
    assert rows[1.0]["ruin_cramer"] is None
    assert rows[0.9]["ruin_cramer"] is not None
    assert 0.0 < rows[1.0]["ruin_exact"] < 1.0
    assert table.metadata["warnings"]


def test_reproduce_writes_csv_and_sidecar(config_path, tmp_path):
    out = tmp_path / "repro"
    rc = main(["reproduce", "table1", "--out", str(out)])
    assert rc == 0
    files = sorted(p.name for p in out.iterdir())
    assert "table1_sidecar.json" in files
    assert any(name.endswith(".csv") for name in files)
    sidecar = json.loads((out / "table1_sidecar.json").read_text())
    assert sidecar


def test_usage_errors_exit_2(config_path, tmp_path):
    assert main(["capital", "--config", config_path]) == 2  # no grid
    assert (
        main(
            [
                "capital",
                "--config",
                config_path,
                "--c-start",
                "1",
                "--c-stop",
                "1",
                "--c-step",
                "1",
                "--method",
                "bogus",
            ]
        )
        == 2
    )
    assert main(["ruinprob", "--config", config_path, "--c-start", "1", "--c-stop", "1", "--c-step", "1"]) == 2  # no --u
    missing = str(tmp_path / "nope.json")
    assert main(["constants", "--config", missing]) == 2


def test_incompatible_model_cells_are_na_not_fatal(tmp_path):
    cfg = {
        "model": {
            "t_law": {"family": "mixture2", "rate1": 1.0, "rate2": 2.0, "weight": 0.6666666666666666},
            "y_law": {"family": "pareto", "shape": 4.0, "scale": 0.35},
        }
    }
    path = tmp_path / "heavy.json"
    path.write_text(json.dumps(cfg))
    out = tmp_path / "cap.csv"
    rc = main(
        [
            "capital",
            "--config",
            str(path),
            "--kind",
            "nonruin",
            "--t",
            "200",
            "--c-start",
            "1.0",
            "--c-stop",
            "1.0",
            "--c-step",
            "1.0",
            "--method",
            "exact,ig",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    table = CurveTable.read_csv(out)
    got = dict(zip(table.columns, table.rows[0]))
    assert got["nonruin_exact"] is None
    assert got["nonruin_ig"] is not None


def test_stdout_output(config_path, capsys):
    rc = main(["constants", "--config", config_path, "--out", "-"])
    assert rc == 0
    text = capsys.readouterr().out
    assert "c_star" in text
