"""Command-line interface: ``orbisectors VERB [options]``.

Exit codes: 0 success, 1 self-test failure, 2 usage error, 3 failed audit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import admissible, catalog, report, selftest
from .admissible import InvalidDatum, InvalidGenus
from .age import checked_age
from .algebra import format_rational
from .genus0 import cache, characters, trees

EXIT_OK, EXIT_SELFTEST, EXIT_USAGE, EXIT_AUDIT = 0, 1, 2, 3
UNAVAILABLE_MSG = "g′>0 sector cohomology unavailable"

AUDIT_ERRORS = (
    characters.NonIntegralBurnside,
    characters.NonPalindromic,
    characters.SignViolation,
    characters.NegativeCoefficient,
    catalog.OracleMismatch,
    catalog.MissingRecord,
)


class UsageError(Exception):
    pass


class AuditError(Exception):
    pass


def _common(p: argparse.ArgumentParser, fmt: str = "json") -> None:
    p.add_argument("--genus", type=int, default=3)
    p.add_argument("--format", choices=("json", "tsv", "latex"), default=fmt)
    p.add_argument("--out", type=Path, help="write to this file instead of stdout")
    p.add_argument("--cache", help=f"trace-table cache directory (default ${cache.ENV_VAR})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbisectors",
        description="Twisted sectors, ages and orbifold Poincare polynomials of moduli of curves.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate", help="list the twisted-sector data of genus g")
    _common(p)
    p = sub.add_parser("ages", help="age of every twisted sector")
    _common(p)
    p = sub.add_parser("sector", help="full record of one sector")
    _common(p)
    p.add_argument("datum", help="(g',N;d_1,...,d_{N-1}) or the shorthand (N;d_1...)")
    p = sub.add_parser("cr-poly", help="assembled orbifold Poincare polynomial")
    _common(p)
    p.add_argument("--compactified", action="store_true")
    p.add_argument("--bigraded", action="store_true", help="keep the Hodge weight (open case only)")
    p = sub.add_parser("tables", help="per-sector characters and ages")
    _common(p, fmt="latex")
    p = sub.add_parser("selftest", help="run the invariant suite")
    p.add_argument("--only", action="append", help="run just this check (repeatable)")
    p.add_argument("--list", action="store_true", help="list the check names and exit")
    return parser


def _check_genus(g: int) -> None:
    if g < 2:
        raise UsageError(f"genus must be at least 2, got {g}")


def _need_genus3(g: int) -> None:
    _check_genus(g)
    if g != 3:
        raise UsageError(UNAVAILABLE_MSG)


def cmd_enumerate(args) -> str:
    _check_genus(args.genus)
    shapes = [admissible.sector_shape(A) for A in admissible.twisted_sectors(args.genus)]
    if args.format == "json":
        return report.dumps([s.to_json() for s in shapes])
    if args.format == "tsv":
        return report.enumerate_tsv(shapes)
    return "".join(f"${s.datum.label()}$&${s.dimension}$&${s.k}${report.ROW_END}\n" for s in shapes)


def cmd_ages(args) -> str:
    _check_genus(args.genus)
    rows = [[A.label(), format_rational(checked_age(A))] for A in admissible.twisted_sectors(args.genus)]
    if args.format == "json":
        return report.dumps([{"datum": label, "age": a} for label, a in rows])
    if args.format == "tsv":
        return report.tsv([["datum", "age"]] + rows)
    return "".join(
        f"${label}$&${report.latex_rational(checked_age(A))}${report.ROW_END}\n"
        for A, (label, _) in zip(admissible.twisted_sectors(args.genus), rows)
    )


def _record_json(A) -> dict:
    if A.g_prime == 0:
        try:
            return catalog.genus0_record(A).to_json()
        except trees.CapExceeded as exc:
            return catalog.stub_record(A, f"stable-tree cap exceeded: {exc}")
    if A.g == 3:
        return next(r for r in catalog.sector_records(3) if r.datum == A).to_json()
    return catalog.stub_record(A, UNAVAILABLE_MSG)


def cmd_sector(args) -> str:
    _check_genus(args.genus)
    A = admissible.parse_datum(args.datum, args.genus)
    if not admissible.is_twisted_sector(A):
        raise UsageError(f"{A.label()} is not a twisted sector of genus {args.genus}")
    rec = _record_json(A)
    if args.format == "json":
        return report.dumps(rec)
    if args.format == "tsv":
        return report.tsv([[k, report.compact(v) if isinstance(v, (list, dict, bool)) else v]
                           for k, v in rec.items()])
    if rec["provenance"] == catalog.UNAVAILABLE or rec["chi_open"] is None:
        raise UsageError(f"no characters available for {A.label()}")
    r = catalog.SectorRecord.from_json(rec)
    rows = report.table1_rows([r]) if r.dim else [report.table2_cells([r])[0] + report.ROW_END]
    return rows[0] + "\n"


def cmd_cr_poly(args) -> str:
    _need_genus3(args.genus)
    if args.bigraded:
        if args.compactified:
            raise UsageError("--bigraded is only available for the open moduli space")
        poly = catalog.cr_bigraded(3)
        if args.format == "json":
            return report.dumps({"genus": 3, "compactified": False, "bigraded": poly.to_json()})
        if args.format == "tsv":
            return report.tsv([["L", "deg", "mult"]] + [[t["L"], t["deg"], t["mult"]] for t in poly.to_json()])
        return poly.format(latex=True) + "\n"
    poly = catalog.cr_poincare(3, compactified=args.compactified)
    if args.compactified and not catalog.duality_audit(poly, 12):
        raise AuditError("compactified polynomial is not palindromic about degree 6")
    if args.format == "json":
        return report.dumps(report.poly_report(poly, 3, args.compactified))
    if args.format == "tsv":
        return report.tsv([["deg", "mult"]] + [[t["deg"], t["mult"]] for t in poly.to_json()])
    return report.poly_latex(poly) + "\n"


def cmd_tables(args) -> str:
    _check_genus(args.genus)
    if args.genus == 3:
        records = catalog.sector_records(3)
        stubs = []
    else:
        records, stubs = [], []
        for A in admissible.twisted_sectors(args.genus):
            rec = _record_json(A)
            if rec["provenance"] == catalog.UNAVAILABLE:
                stubs.append(rec)
            else:
                records.append(catalog.SectorRecord.from_json(rec))
    if args.format == "json":
        return report.dumps([r.to_json() for r in records] + stubs)
    if args.format == "tsv":
        rows = [["datum", "dim", "age", "chi_open", "chi_closed", "provenance"]]
        for r in records:
            rows.append([r.datum.label(), r.dim, format_rational(r.age), r.chi.format("L"),
                         r.chi_bar.format("L"), r.provenance])
        for s in stubs:
            A = admissible.AdmissibleDatum.from_json(s)
            rows.append([A.label(), s["dim"], s["age"], "", "", s["provenance"]])
        return report.tsv(rows)
    genus0 = [r for r in records if r.datum.g_prime == 0]
    out = report.table1_latex(genus0) + "\n" + report.table2_latex(genus0, args.genus)
    for s in stubs:
        out += f"% incomplete: {admissible.AdmissibleDatum.from_json(s).label()}: {s['incomplete']}\n"
    return out


def cmd_selftest(args) -> tuple[str, int]:
    names = [name for name, _ in selftest.CHECKS]
    if args.list:
        return "".join(n + "\n" for n in names), EXIT_OK
    unknown = set(args.only or ()) - set(names)
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(sorted(unknown))}")
    results = selftest.run(args.only)
    failures = [r for r in results if not r.ok]
    lines = [r.line() for r in results]
    lines.append(f"{len(results)} checks, {len(failures)} failures")
    return "\n".join(lines) + "\n", EXIT_SELFTEST if failures else EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "ages": cmd_ages,
    "sector": cmd_sector,
    "cr-poly": cmd_cr_poly,
    "tables": cmd_tables,
}


def _emit(text: str, out: Path | None) -> None:
    data = text.encode("utf-8")
    if out is None:
        sys.stdout.flush()
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        out.write_bytes(data)


def _error(text: str) -> None:
    stream = getattr(sys.stderr, "buffer", None)
    if stream is None:
        print(text, file=sys.stderr)
        return
    sys.stderr.flush()
    stream.write((text + "\n").encode("utf-8"))
    stream.flush()


def _load_cache(directory):
    path = cache.cache_path(directory)
    if path is not None and path.exists():
        cache.load(path)
    return path


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        if args.verb == "selftest":
            text, code = cmd_selftest(args)
            _emit(text, None)
            return code
        path = _load_cache(args.cache)
        text = COMMANDS[args.verb](args)
        if path is not None and not path.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(cache.dumps(cache.snapshot()), encoding="utf-8", newline="\n")
    except (UsageError, InvalidGenus, InvalidDatum, catalog.UnsupportedGenus, trees.CapExceeded) as exc:
        msg = UNAVAILABLE_MSG if isinstance(exc, catalog.UnsupportedGenus) else str(exc)
        _error(f"orbisectors: error: {msg}")
        return EXIT_USAGE
    except (AuditError,) + AUDIT_ERRORS as exc:
        _error(f"orbisectors: audit failed: {type(exc).__name__}: {exc}")
        return EXIT_AUDIT
    _emit(text, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
