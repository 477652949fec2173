import csv
import io
import json
import subprocess
import sys

import pytest

from pentasigma.cli import main, render_json, render_table


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def parse_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_sigma_seq_csv(capsys):
    status, out, _ = run(capsys, "sigma-seq", "--n", "5", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "n,sigma"
    assert lines[-1] == "5,-2"


def test_sigma_seq_zero(capsys):
    _, out, _ = run(capsys, "sigma-seq", "--n", "0", "--format", "csv")
    assert out.splitlines()[1:] == ["0,1"]
    _, out, _ = run(capsys, "sigma-seq", "--n", "0")
    assert out.split() == ["0", "1"]


def test_sigma_seq_json(capsys):
    _, out, _ = run(capsys, "sigma-seq", "--n", "26", "--format", "json")
    values = json.loads(out)
    assert len(values) == 27 and values[22] == -5


def test_rho(capsys):
    _, out, _ = run(capsys, "rho", "--n", "12", "--format", "csv")
    assert out.splitlines()[-1] == "12,6"


@pytest.mark.parametrize("fmt", ["txt", "csv", "json"])
def test_rho_paths_byte_identical(capsys, fmt):
    _, a, _ = run(capsys, "rho", "--n", "300", "--format", fmt, "--via", "recurrence")
    _, b, _ = run(capsys, "rho", "--n", "300", "--format", fmt, "--via", "inverse-matrix")
    assert a == b


def test_primes(capsys):
    _, out, _ = run(capsys, "primes", "--n", "30")
    assert out.split() == ["2", "3", "5", "7", "11", "13", "17", "19", "23", "29"]
    assert len(out.splitlines()) == 10


def test_partition(capsys):
    _, out, _ = run(capsys, "partition", "--n", "17", "--format", "csv")
    assert out.splitlines()[-1] == "17,297"


def test_matrix_txt(capsys):
    _, out, _ = run(capsys, "matrix", "--rows", "8", "--cols", "8", "--format", "txt")
    column0 = [int(line.split()[0]) for line in out.splitlines()]
    assert column0 == [1, -1, -1, 0, 0, 1, 0, 1, 0]


def test_matrix_single_row(capsys):
    _, out, _ = run(capsys, "matrix", "--rows", "0", "--cols", "5", "--format", "csv")
    rows = parse_csv(out)
    assert rows[0] == ["i", "0", "1", "2", "3", "4", "5"]
    assert rows[1:] == [["0", "1", "1", "1", "1", "1", "1"]]


def test_matrix_json_schema(capsys):
    _, out, _ = run(capsys, "matrix", "--rows", "6", "--cols", "3", "--format", "json", "--annotate")
    doc = json.loads(out)
    assert doc["rows"] == 6 and doc["cols"] == 3
    assert len(doc["entries"]) == 7 and all(len(r) == 4 for r in doc["entries"])
    assert doc["regions"][0][3] == "U"
    assert doc["regions"][6][3] == "L1" and doc["border"][6][3] is True
    assert doc["regions"][6][1] == "L2"


def test_matrix_annotated_csv(capsys):
    _, out, _ = run(capsys, "matrix", "--rows", "2", "--cols", "1", "--format", "csv", "--annotate")
    assert parse_csv(out)[3] == ["2", "-1:L2", "-1:L1*"]


def test_matrix_full_window(capsys):
    _, out, _ = run(capsys, "matrix", "--rows", "101", "--cols", "101", "--format", "json")
    doc = json.loads(out)
    entries = doc["entries"]
    assert len(entries) == 102 and all(len(r) == 102 for r in entries)
    assert entries[0] == [1] * 102


def test_matrix_cap_exit_1(capsys):
    status, out, err = run(capsys, "matrix", "--rows", "100", "--cols", "100", "--cap", "1000")
    assert status == 1 and out == "" and "exceeds cap" in err


def test_usage_errors_exit_2(capsys):
    for argv in (["rho", "--n", "-1"], ["rho"], ["primes", "--n", "1"], ["verify", "--n", "5", "--suites", "bogus"], ["nope"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        _, err = capsys.readouterr()
        assert "usage" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "sigma.csv"
    status, out, _ = run(capsys, "sigma-seq", "--n", "4", "--format", "csv", "--out", str(target))
    assert status == 0 and out == ""
    assert target.read_text() == "n,sigma\n0,1\n1,0\n2,0\n3,-1\n4,-1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["sigma-seq", "--n", "40"],
        ["rho", "--n", "40"],
        ["partition", "--n", "500"],
        ["primes", "--n", "200"],
    ],
)
def test_documents_round_trip(capsys, argv):
    _, out, _ = run(capsys, *argv, "--format", "csv")
    rows = parse_csv(out)
    assert render_table(rows[0], rows[1:], "csv") == out
    _, out, _ = run(capsys, *argv, "--format", "json")
    assert render_json(json.loads(out)) == out


def test_matrix_round_trip(capsys):
    _, out, _ = run(capsys, "matrix", "--rows", "20", "--cols", "20", "--format", "json")
    assert render_json(json.loads(out)) == out
    _, out, _ = run(capsys, "matrix", "--rows", "20", "--cols", "20", "--format", "csv")
    rows = parse_csv(out)
    assert render_table(rows[0], rows[1:], "csv") == out


def test_verify_report(capsys):
    status, out, _ = run(capsys, "verify", "--n", "200", "--suites", "identity14,lacing21,splits,roundtrip,primes")
    report = json.loads(out)
    assert status == 0 and report["pass"] is True
    assert [s["suite"] for s in report["suites"]] == ["identity14", "lacing21", "splits", "roundtrip", "primes"]
    for s in report["suites"]:
        assert set(s) >= {"suite", "bound", "pass", "violations"}
    assert {f["suite"] for f in report["report_only"]} == {"splits"}


def test_verify_properties_separates_report_only(capsys):
    status, out, _ = run(capsys, "verify", "--n", "64", "--suites", "properties")
    report = json.loads(out)
    assert status == (0 if report["pass"] else 1)
    findings = {f["finding"] for f in report["report_only"]}
    assert findings == {"P2_4_LITERAL", "P2_7_SMALL_ROWS", "P2_9_LITERAL"}
    # report-only findings never flip the verdict
    assert report["pass"] == all(s["pass"] for s in report["suites"])


def test_verify_cap(capsys):
    status, _, err = run(capsys, "verify", "--n", "5000", "--suites", "lacing21")
    assert status == 1 and "capped" in err


def test_bench_schema(capsys):
    _, out, _ = run(capsys, "bench", "--n", "10", "--format", "csv")
    rows = parse_csv(out)
    assert rows[0] == ["task", "n", "seconds"]
    assert [r[0] for r in rows[1:]] == [
        "partition_recurrence",
        "rho_given_sigma",
        "sigma",
        "rho_including_sigma",
        "eratosthenes_sieve",
    ]
    assert all(float(r[2]) >= 0 for r in rows[1:])
    _, out, _ = run(capsys, "bench", "--n", "10", "--format", "json")
    assert len(json.loads(out)) == 5


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pentasigma", "sigma-seq", "--n", "3", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "3,-1"
