"""Text renderings: LaTeX tables and polynomials, JSON and TSV records."""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import QGraded, format_rational

ROW_END = "\\\\[1pt]"


def latex_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"\\frac{{{x.numerator}}}{{{x.denominator}}}"


def table1_rows(records) -> list[str]:
    rows = []
    for r in records:
        if r.datum.g_prime != 0 or r.dim == 0:
            continue
        rows.append(
            f"${r.datum.table_label()}$&${r.chi.format('L')}$&${r.chi_bar.format('L')}$"
            f"&${latex_rational(r.age)}${ROW_END}"
        )
    return rows


def table1_latex(records) -> str:
    head = [
        "\\begin{tabular}{|c|c|c|c|} \\hline",
        "$A$ & $\\chi^{HS}_c(\\mathcal M_A)$ & $\\chi^{HS}(\\overline{\\mathcal M}_A)$&$a(\\mathcal M_A)$\\\\",
        "\\hline \\hline",
    ]
    return "\n".join(head + table1_rows(records) + ["\\hline", "\\end{tabular}"]) + "\n"


def table2_cells(records) -> list[str]:
    return [
        f"${r.datum.table_label()}$ &${latex_rational(r.age)}$"
        for r in records
        if r.datum.g_prime == 0 and r.dim == 0
    ]


def table2_latex(records, genus: int = 3) -> str:
    cells = table2_cells(records)
    half = (len(cells) + 1) // 2
    left, right = cells[:half], cells[half:]
    rows = []
    for i, cell in enumerate(left):
        other = right[i] if i < len(right) else "&"
        rows.append(f"{cell} & {other}{ROW_END}")
    head = [
        "\\begin{tabular}{|c|c||c|c|} \\hline",
        f"${genus}$-admissible with $g'=0$ &Age&${genus}$-admissible with $g'=0$ &Age\\\\",
        "\\hline \\hline",
    ]
    return "\n".join(head + rows + ["\\hline", "\\end{tabular}"]) + "\n"


def poly_latex(poly: QGraded) -> str:
    return poly.format("t", latex=True).replace(" + ", "+")


def poly_report(poly: QGraded, genus: int, compactified: bool) -> dict:
    return {
        "genus": genus,
        "compactified": compactified,
        "polynomial": poly.to_json(),
        "total_dim": poly.total(),
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def compact(obj) -> str:
    """Single-line JSON, for TSV cells."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=True, ensure_ascii=False)


def tsv(rows: list[list]) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


def enumerate_tsv(shapes) -> str:
    rows = [["g", "g_prime", "N", "d", "k", "dim", "connected", "components"]]
    for s in shapes:
        A = s.datum
        rows.append(
            [A.g, A.g_prime, A.N, ",".join(map(str, A.d)), s.k, s.dimension,
             str(s.connected).lower(), ",".join(s.components)]
        )
    return tsv(rows)


def ages_rows(table) -> list[list]:
    return [[A.label(), format_rational(a)] for A, a in sorted(table.items(), key=lambda kv: kv[0].sort_key)]
