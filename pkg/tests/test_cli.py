import json
import subprocess
import sys

import pytest

from orbisectors import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_genus_three(capsys):
    code, out, _ = run(capsys, "enumerate", "--genus", "3", "--format", "json")
    assert code == 0
    recs = json.loads(out)
    assert len(recs) == 47
    assert sum(r["g_prime"] == 0 for r in recs) == 43


def test_enumerate_genus_two_tsv(capsys):
    code, out, _ = run(capsys, "enumerate", "--genus", "2", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t")[:4] == ["g", "g_prime", "N", "d"]
    assert "2\t0\t2\t6\t1\t3\ttrue\torder_k" in lines


def test_enumerate_genus_one_is_usage_error(capsys):
    code, _, err = run(capsys, "enumerate", "--genus", "1")
    assert code == 2
    assert "genus" in err


def test_unknown_flag_is_usage_error(capsys):
    assert run(capsys, "enumerate", "--bogus")[0] == 2


def test_cr_poly_other_genus(capsys):
    code, _, err = run(capsys, "cr-poly", "--genus", "4")
    assert code == 2
    assert "g′>0 sector cohomology unavailable" in err


def test_cr_poly_json(capsys):
    code, out, _ = run(capsys, "cr-poly", "--genus", "3")
    rep = json.loads(out)
    assert code == 0
    assert rep["total_dim"] == 62 and rep["compactified"] is False


def test_cr_poly_compactified_latex(capsys):
    code, out, _ = run(capsys, "cr-poly", "--compactified", "--format", "latex")
    assert code == 0
    assert out.startswith("1+t+4 t^2+4 t^3+t^{\\frac{10}{3}}")
    assert out.endswith("t^{11}+t^{12}\n")


def test_cr_poly_bigraded(capsys):
    code, out, _ = run(capsys, "cr-poly", "--bigraded", "--format", "tsv")
    assert code == 0
    assert "1/2\t1\t1" in out.splitlines()


def test_audit_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.catalog, "duality_audit", lambda poly, top=12: False)
    assert run(capsys, "cr-poly", "--compactified")[0] == 3


def test_missing_record_is_audit_failure(capsys, monkeypatch):
    full = cli.catalog.sector_records(3)
    monkeypatch.setattr(cli.catalog, "sector_records", lambda g=3: full[1:])
    assert run(capsys, "cr-poly")[0] == 3


def test_ages(capsys):
    code, out, _ = run(capsys, "ages", "--format", "json")
    ages = {r["datum"]: r["age"] for r in json.loads(out)}
    assert code == 0
    assert ages["(0,2;8)"] == "1/2"
    assert ages["(2,2;0)"] == "3/2"


def test_sector_record(capsys):
    code, out, _ = run(capsys, "sector", "(4;2,3,0)")
    rec = json.loads(out)
    assert code == 0
    assert rec["chi_open"] == ["0", "-1", "1"]
    assert rec["provenance"] == "computed"


def test_sector_latex_row(capsys):
    code, out, _ = run(capsys, "sector", "(2;8)", "--format", "latex")
    assert code == 0
    assert out == "$(2;8)$&$L^5$&$L^5+3L^4+6L^3+6L^2+3L+1$&$\\frac{1}{2}$\\\\[1pt]\n"


def test_sector_positive_genus_stub_outside_genus_three(capsys):
    code, out, _ = run(capsys, "sector", "(1,2;2)", "--genus", "2")
    assert code == 0
    assert json.loads(out)["provenance"] == "unavailable"


def test_sector_rejects_non_sector(capsys):
    assert run(capsys, "sector", "(4;0,6,0)")[0] == 2
    assert run(capsys, "sector", "garbage")[0] == 2


def test_tables_genus_three(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    assert out.count("\\begin{tabular}") == 2


def test_tables_other_genus_flags_stubs(capsys):
    code, out, _ = run(capsys, "tables", "--genus", "4", "--format", "json")
    recs = json.loads(out)
    assert code == 0
    assert any(r["provenance"] == "unavailable" for r in recs)
    assert any(r["provenance"] == "computed" for r in recs)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "ages.tsv"
    assert run(capsys, "ages", "--format", "tsv", "--out", str(target))[0] == 0
    assert target.read_bytes().startswith(b"datum\tage\n")


def test_cache_written_and_reused(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("SECTOR_CACHE_DIR", raising=False)
    first = run(capsys, "cr-poly", "--cache", str(tmp_path))[1]
    assert (tmp_path / "trace_table.json").exists()
    second = run(capsys, "cr-poly", "--cache", str(tmp_path))[1]
    assert first == second


def test_selftest_list(capsys):
    code, out, _ = run(capsys, "selftest", "--list")
    assert code == 0
    assert "age-duality" in out.split()


def test_selftest_only(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "table-ages")
    assert code == 0
    assert out.splitlines() == ["PASS table-ages", "1 checks, 0 failures"]
    assert run(capsys, "selftest", "--only", "nope")[0] == 2


@pytest.mark.parametrize("argv", [["cr-poly", "--format", "latex"], ["tables", "--format", "json"]])
def test_subprocess_output_is_deterministic_utf8_lf(argv):
    cmd = [sys.executable, "-m", "orbisectors", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert b"\r" not in a
    a.decode("utf-8")


def test_subprocess_error_message_is_utf8():
    proc = subprocess.run([sys.executable, "-m", "orbisectors", "cr-poly", "--genus", "4"], capture_output=True)
    assert proc.returncode == 2
    assert "g′>0 sector cohomology unavailable" in proc.stderr.decode("utf-8")
