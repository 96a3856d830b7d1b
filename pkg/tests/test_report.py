import re

from orbisectors import catalog, report


def squash(text: str) -> str:
    return re.sub(r"\s+", "", text)


def golden_rows(path):
    return {squash(line) for line in path.read_text(encoding="utf-8").splitlines() if line.strip()}


def test_table1_rows_match_golden(records3, data_dir):
    ours = {squash(r) for r in report.table1_rows(records3)}
    assert ours == golden_rows(data_dir / "table1_rows.tex")


def test_table2_cells_match_golden(records3, data_dir):
    cells = set()
    for row in golden_rows(data_dir / "table2_rows.tex"):
        body = re.sub(r"\\\\\[\d+pt\]$", "", row)
        fields = body.split("&")
        cells.add(fields[0] + "&" + fields[1])
        cells.add(fields[2] + "&" + fields[3])
    assert {squash(c) for c in report.table2_cells(records3)} == cells


def _theorem_text(path):
    text = squash(path.read_text(encoding="utf-8"))
    return text.replace("&", "").replace("\\\\", "").rstrip(".")


def test_open_theorem_latex(records3, data_dir):
    poly = catalog.cr_poincare(3, records=records3)
    assert squash(report.poly_latex(poly)) == _theorem_text(data_dir / "cr_open.tex")


def test_compact_theorem_latex(records3, data_dir):
    poly = catalog.cr_poincare(3, compactified=True, records=records3)
    assert squash(report.poly_latex(poly)) == _theorem_text(data_dir / "cr_compact.tex")


def test_full_tables_have_all_rows(records3):
    t1 = report.table1_latex(records3)
    t2 = report.table2_latex(records3)
    assert t1.count("\\\\[1pt]") == 11
    assert t2.count("\\\\[1pt]") == 16
    assert t1.endswith("\\end{tabular}\n")


def test_poly_report_shape(records3):
    poly = catalog.cr_poincare(3, records=records3)
    rep = report.poly_report(poly, 3, False)
    assert rep["total_dim"] == 62
    assert rep["polynomial"][0] == {"deg": "0", "mult": 1}
    assert {"deg": "10/3", "mult": 1} in rep["polynomial"]
