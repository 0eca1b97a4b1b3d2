"""End-to-end CLI behavior: formats, determinism, exit codes."""

import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from mspotty import cli
from mspotty.errors import IntegrityError

DATA = Path(__file__).parent / "data"
EXAMPLE = str(DATA / "worked_example.txt")

SMALL = """\
m=2 b=2 t=1
1 u
"""


@pytest.fixture
def small_file(tmp_path):
    path = tmp_path / "small.txt"
    path.write_text(SMALL)
    return str(path)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_text(capsys):
    code, out, err = run_cli(capsys, "enumerate", EXAMPLE)
    assert code == 0 and err == ""
    assert "m=4 b=3 t=2 n=2 N=6" in out
    assert "|C| = 512" in out
    assert "(0, 0, 1, 1) : 156" in out
    assert "W(z) = 1 + 10z + 183z^2 + 214z^3 + 104z^4" in out
    assert "104z^6" in out  # the misprint notice


def test_enumerate_json(capsys):
    code, out, _ = run_cli(capsys, "enumerate", EXAMPLE, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["code_size"] == "512"
    assert {"alpha": [0, 0, 1, 1], "count": "156"} in obj["distribution"]
    assert {"exp": 4, "coeff": "104"} in obj["enumerator"]["terms"]


def test_enumerate_csv(capsys):
    code, out, _ = run_cli(capsys, "enumerate", EXAMPLE, "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["section", "key", "value"]
    assert ["meta", "code_size", "512"] in rows
    assert ["distribution", "0 0 1 1", "156"] in rows
    assert ["enumerator", "z^4", "104"] in rows


def test_tables_text(capsys):
    code, out, _ = run_cli(capsys, "tables", "4", "3", "2")
    assert code == 0
    assert "F_0(z) = 1 + 720z + 3375z^2" in out
    assert "F_1(z) = 1 + 224z - 225z^2" in out
    assert "F_2(z) = 1 - 16z + 15z^2" in out
    assert "F_3(z) = 1 - z^2" in out


def test_tables_json(capsys):
    code, out, _ = run_cli(capsys, "tables", "1", "1", "1", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj["kernels"][0]["terms"] == [
        {"exp": 0, "coeff": "1"},
        {"exp": 1, "coeff": "1"},
    ]
    assert obj["kernels"][1]["terms"] == [
        {"exp": 0, "coeff": "1"},
        {"exp": 1, "coeff": "-1"},
    ]


def test_tables_bad_range_exits_2(capsys):
    code, _, err = run_cli(capsys, "tables", "4", "3", "9")
    assert code == 2
    assert "error:" in err


def test_transform_text(capsys):
    code, out, _ = run_cli(capsys, "transform", EXAMPLE)
    assert code == 0
    assert "|C-dual| = 32768" in out
    assert "W-dual(z) = 1 + 85z + 3153z^2 + 9707z^3 + 19822z^4" in out


def test_dual_small(capsys, small_file):
    code, out, _ = run_cli(capsys, "dual", small_file)
    assert code == 0
    assert "|C-dual| = 4" in out


def test_dual_codewords_listing(capsys, small_file):
    code, out, _ = run_cli(capsys, "dual", small_file, "--codewords")
    assert code == 0
    assert "codewords:" in out
    assert out.count("\n  0") >= 1  # zero word listed first


def test_dual_consistent_with_transform(capsys, small_file):
    _, out_dual, _ = run_cli(capsys, "dual", small_file, "--format", "json")
    _, out_tf, _ = run_cli(capsys, "transform", small_file, "--format", "json")
    dual_terms = json.loads(out_dual)["enumerator"]["terms"]
    tf_terms = json.loads(out_tf)["dual_enumerator"]["terms"]
    assert dual_terms == tf_terms


def test_workers_do_not_change_output(capsys, small_file):
    _, out1, _ = run_cli(capsys, "dual", small_file, "--workers", "1")
    _, out2, _ = run_cli(capsys, "dual", small_file, "--workers", "4")
    assert out1 == out2


def test_repeat_runs_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "verify", "--grid-m", "1,2", "--grid-b", "1",
                         "--samples", "3", "--seed", "9")
    _, out2, _ = run_cli(capsys, "verify", "--grid-m", "1,2", "--grid-b", "1",
                         "--samples", "3", "--seed", "9")
    assert out1 == out2


def test_verify_json_report_shape(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--grid-m", "1", "--grid-b", "1",
        "--samples", "2", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["pass"] is True
    assert obj["reports"]
    for r in obj["reports"]:
        assert set(r) == {"lemma", "params", "expected", "actual", "pass"}
    assert any("truncating" in n for n in obj["notes"])


def test_verify_inject_fault_exits_5(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--grid-m", "1", "--grid-b", "1",
        "--samples", "2", "--inject-fault",
    )
    assert code == 5
    assert "FAIL" in out


def test_verify_csv(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--grid-m", "1", "--grid-b", "1",
        "--samples", "2", "--format", "csv",
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["lemma", "params", "expected", "actual", "pass"]
    assert all(row[4] == "true" for row in rows[1:])


def test_verify_bad_grid_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--grid-m", "1,x")
    assert code == 2 and "grid" in err


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("m=2 b=1 t=1\nbogus\n")
    code, out, err = run_cli(capsys, "enumerate", str(bad))
    assert code == 2
    assert out == ""  # no partial tables
    assert "line 2" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run_cli(capsys, "enumerate", "/no/such/file")
    assert code == 2 and "error:" in err


def test_budget_exit_3(capsys):
    code, _, err = run_cli(capsys, "dual", EXAMPLE, "--max-space", "1024")
    assert code == 3
    assert "16777216" in err


def test_integrity_exit_4(capsys, monkeypatch):
    def boom(cfg, args):
        raise IntegrityError("forced")

    monkeypatch.setitem(cli._DISPATCH, "info", boom)
    code, _, err = run_cli(capsys, "info")
    assert code == 4 and "forced" in err


def test_bad_flag_values_exit_2(capsys):
    assert run_cli(capsys, "info", "--workers", "0")[0] == 2
    assert run_cli(capsys, "info", "--max-space", "0")[0] == 2
    assert run_cli(capsys, "info", "--seed", "-1")[0] == 2


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "tables", "4", "3", "2", "--format", "json", "--out", str(target)
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["m"] == 4


def test_info(capsys):
    code, out, _ = run_cli(capsys, "info")
    assert code == 0
    assert "mspotty" in out and "exit_codes" in out


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mspotty.cli", "info"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "mspotty" in proc.stdout
