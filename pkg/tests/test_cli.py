"""Command-line behaviour: determinism, formats, aliases, exit codes."""

import json

import pytest

from flophelix.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_tables_numerics_text(capsys):
    code, out = run(capsys, "tables", "numerics")
    assert code == 0
    assert out.splitlines()[1].split() == ["1", "1", "1", "2"]
    assert "1 6 5 4 3 5 2 5 3 4 5 6" in out


def test_tables_deterministic(capsys):
    outs = set()
    for _ in range(2):
        code, out = run(capsys, "tables", "defalg", "--format", "json")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
    rows = json.loads(out)
    assert rows[0] == {"ell": 1, "i": 0, "loops": 0, "dim_sliced": 1,
                       "dim_ab_sliced": 1, "commutative": True,
                       "presentation": None}


def test_tables_gv_csv_blanks(capsys):
    code, out = run(capsys, "tables", "gv", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ell,n1,n2,n3,n4,n5,n6,acon"
    assert lines[2] == "2,4,1,,,,,8"
    assert lines[6] == "6,6,6,4,3,2,1,200"


def test_tables_helix_requires_ell(capsys):
    code = main(["tables", "helix"])
    capsys.readouterr()
    assert code == 2


def test_tables_helix(capsys):
    code, out = run(capsys, "tables", "helix", "--ell", "5")
    assert code == 0
    assert out.splitlines()[1].startswith("0  O_C(-1)")
    assert len(out.splitlines()) == 11  # header + S_0..S_9


def test_knit_aliases_and_grid(capsys):
    code, out = run(capsys, "knit", "--type", "E6", "--affine",
                    "--start", "branch", "--read", "branch",
                    "--kill", "extending")
    assert code == 0
    assert "read_values: 1 2 3 3 2 1" in out
    assert "total: 12" in out


def test_knit_json(capsys):
    code, out = run(capsys, "knit", "--type", "D4", "--affine",
                    "--start", "centre", "--kill", "extending",
                    "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["start"] == "v2" and payload["total"] == 4


def test_knit_domain_error(capsys):
    code = main(["knit", "--type", "E6", "--start", "extending"])
    capsys.readouterr()
    assert code == 1  # extending alias needs --affine


def test_monodromy_identity(capsys):
    code, out = run(capsys, "monodromy", "--ell", "1",
                    "--word", "inv(q0).qplus.qminus")
    assert code == 0
    payload = json.loads(out)
    assert payload["reduced"] == "identity"
    assert payload["k_matrix"] == [[1, 0], [0, 1]]


def test_monodromy_k_matrix(capsys):
    code, out = run(capsys, "monodromy", "--ell", "2", "--word", "qminus")
    assert code == 0
    assert json.loads(out)["k_matrix"] == [[3, -1], [4, -1]]


def test_monodromy_syntax_error(capsys):
    code = main(["monodromy", "--ell", "2", "--word", "bogus"])
    capsys.readouterr()
    assert code == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["tables", "nosuch"])
    capsys.readouterr()
    assert exc.value.code == 2


def test_verify_exit_and_report(capsys):
    code, out = run(capsys, "verify", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["summary"] == {"pass": 9, "fail": 0}
    assert all(c["status"] == "pass" for c in report["checks"])


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "numerics.json"
    code, out = run(capsys, "tables", "numerics", "--format", "json",
                    "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())[0]["ell"] == 1
