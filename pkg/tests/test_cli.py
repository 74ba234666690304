import json

import pytest

from jacobsthal_octonions.cli import main
from jacobsthal_octonions.octonion import basis_product


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- seq --------------------------------------------------------------------


def test_seq_csv(capsys):
    code, out, err = run(capsys, "seq", "--kind", "j3", "--from", "0", "--to", "4",
                         "--format", "csv")
    assert code == 0
    assert out == "0,0\n1,1\n2,1\n3,2\n4,5\n"
    assert err == ""


def test_seq_plain_defaults(capsys):
    code, out, _ = run(capsys, "seq", "--kind", "jl3", "--from", "0", "--to", "2")
    assert code == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == ["2", "1", "5"]


def test_seq_json(capsys):
    code, out, _ = run(capsys, "seq", "--kind", "jacobsthal", "--to", "3",
                       "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"n": 0, "value": "0"}, {"n": 1, "value": "1"},
        {"n": 2, "value": "1"}, {"n": 3, "value": "3"},
    ]


def test_seq_inverted_range(capsys):
    code, _, err = run(capsys, "seq", "--kind", "j3", "--from", "3", "--to", "2")
    assert code == 2
    assert "error" in err


def test_seq_unknown_kind_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["seq", "--kind", "fibonacci", "--to", "3"])
    assert excinfo.value.code == 2


# --- oct --------------------------------------------------------------------


def test_oct_plain(capsys):
    code, out, _ = run(capsys, "oct", "--kind", "JO", "--n", "0")
    assert code == 0
    assert out == '["0","1","1","2","5","9","18","37"]\n'


def test_oct_closed_agreement(capsys):
    code, out, _ = run(capsys, "oct", "--kind", "jO", "--n", "0", "--closed")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == '["2","1","5","10","17","37","74","145"]'
    assert lines[1] == "closed=recurrence: true"


def test_oct_json_closed(capsys):
    code, out, _ = run(capsys, "oct", "--kind", "JO", "--n", "2", "--closed",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "JO"
    assert payload["n"] == 2
    assert payload["coefficients"] == ["1", "2", "5", "9", "18", "37", "73", "146"]
    assert payload["closed_equals_recurrence"] is True


def test_oct_negative_index(capsys):
    code, _, err = run(capsys, "oct", "--kind", "JO", "--n", "-1")
    assert code == 2
    assert "error" in err


# --- mul-table ----------------------------------------------------------------


def test_mul_table_plain_row_e1(capsys):
    code, out, _ = run(capsys, "mul-table")
    assert code == 0
    rows = out.splitlines()
    e1 = rows[2].split()
    assert e1 == ["e1", "e1", "-1", "e3", "-e2", "e5", "-e4", "-e7", "e6"]


def test_mul_table_json_consistent_with_basis_product(capsys):
    code, out, _ = run(capsys, "mul-table", "--format", "json")
    assert code == 0
    table = json.loads(out)
    assert len(table) == 8 and all(len(row) == 8 for row in table)
    for i in range(8):
        for j in range(8):
            sign, index = basis_product(i, j)
            assert table[i][j] == {"sign": sign, "e": index}


# --- verify -------------------------------------------------------------------


def test_verify_single_identity_passes(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "E4", "--to", "100")
    assert code == 0
    assert "checked=101" in out


def test_verify_residue_filtered_identity(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "T4_PROD_JOJ", "--to", "9",
                       "--format", "json")
    assert code == 0
    (report,) = json.loads(out)
    assert report["checked"] == 4
    assert report["skipped"] == [1, 2, 4, 5, 7, 8]
    assert report["failures"] == []


def test_verify_all_printed(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--to", "30",
                       "--variant", "printed", "--format", "json")
    assert code == 1
    failing = [r["id"] for r in json.loads(out) if r["failures"]]
    assert failing == ["T5_QUAD", "T6_QUAD"]


def test_verify_all_both(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--to", "30",
                       "--variant", "both", "--format", "json")
    assert code == 1
    reports = json.loads(out)
    corrected = [r for r in reports if r["variant"] == "corrected"]
    assert [r["id"] for r in corrected] == ["T5_QUAD", "T6_QUAD"]
    assert all(r["failures"] == [] for r in corrected)


def test_verify_corrected_single(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "T5_QUAD", "--to", "20",
                       "--variant", "corrected", "--format", "json")
    assert code == 0
    (report,) = json.loads(out)
    assert report["variant"] == "corrected"
    assert report["checked"] == 21


def test_verify_corrected_unavailable(capsys):
    code, _, err = run(capsys, "verify", "--identity", "E4", "--to", "5",
                       "--variant", "corrected")
    assert code == 2
    assert "no corrected variant" in err


def test_verify_corrected_with_all_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--all", "--to", "5",
                       "--variant", "corrected")
    assert code == 2
    assert "error" in err


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "--identity", "E99", "--to", "5")
    assert code == 2
    assert "unknown identity" in err


def test_verify_plain_failure_lines(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "T6_QUAD", "--to", "2")
    assert code == 1
    assert "failures=2 FAIL" in out
    assert 'n=1 lhs=' in out and "delta=" in out


# --- determinism and --out ------------------------------------------------------


def test_outputs_are_byte_deterministic(capsys):
    runs = [run(capsys, "seq", "--kind", "j3", "--to", "40", "--format", "json"),
            run(capsys, "seq", "--kind", "j3", "--to", "40", "--format", "json")]
    assert runs[0] == runs[1]
    runs = [run(capsys, "oct", "--kind", "jO", "--n", "17", "--closed"),
            run(capsys, "oct", "--kind", "jO", "--n", "17", "--closed")]
    assert runs[0] == runs[1]
    runs = [run(capsys, "verify", "--all", "--to", "9", "--format", "json"),
            run(capsys, "verify", "--all", "--to", "9", "--format", "json")]
    assert runs[0] == runs[1]


def test_out_writes_same_bytes_as_stdout(capsys, tmp_path):
    _, stdout_text, _ = run(capsys, "verify", "--identity", "T5_QUAD", "--to", "3",
                            "--format", "json")
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--identity", "T5_QUAD", "--to", "3",
                       "--format", "json", "--out", str(target))
    assert code == 1
    assert out == ""
    assert target.read_text(encoding="utf-8") == stdout_text
