"""Command-line front end.

Exit codes: 0 success, 1 verification failure or discrepancy, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bseq, charpoly, kernels
from .exactcore import IntPoly
from .matrixops import Matrix, build_unit_primitive, identity_minus_xb, verify_lemma1
from .reports import IdentityReport, all_passed

FORMATS = ("plain", "csv", "json", "bfile")
SUITES = ("identity2", "identity3", "identity4", "ogf", "lemma1", "trig", "all")
TRIG_POINTS = (0.1, -0.1, 0.3, -0.3, 0.49)
LEMMA1_RANDOM = 100
LEMMA1_SEED = 20240501


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _table_plain(table: bseq.BTable) -> str:
    header = ["n\\m", *map(str, range(table.m_max + 1))]
    body = [[str(n), *map(str, r)] for n, r in enumerate(table.values)]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    return "\n".join(" ".join(c.rjust(w) for c, w in zip(row, widths)) for row in [header, *body])


def _table_bfile(table: bseq.BTable) -> str:
    positions = bseq.antidiagonals(table.n_max, table.m_max)
    return "\n".join(f"{i + 1} {table[n, m]}" for i, (n, m, _) in enumerate(positions))


def render_table(table: bseq.BTable, fmt: str) -> str:
    if fmt == "csv":
        return table.to_csv()
    if fmt == "json":
        return _dump(
            {"method": table.method, "n_max": table.n_max, "m_max": table.m_max, "values": [list(r) for r in table.values]}
        )
    if fmt == "bfile":
        return _table_bfile(table)
    return _table_plain(table)


def cmd_table(args) -> int:
    if args.method == "all":
        golden = bseq.load_table1(args.golden)
        table, report = bseq.cross_check(args.n, args.m, golden=golden)
        if not report.agree:
            sys.stderr.write("cross-check failed: " + json.dumps(report.discrepancy) + "\n")
            return 1
        table = bseq.BTable(table.values, "all")
    else:
        table = bseq.build_table(args.n, args.m, args.method)
    _emit(render_table(table, args.format))
    return 0


def cmd_entry(args) -> int:
    n, m = args.n, args.m
    value = bseq.b_by_dp(n, m)[n, m]
    checks = {"series": bseq.b_by_series(n, m)[n]}
    if n <= bseq.MATRIX_CAP and m <= bseq.MATRIX_CAP:
        checks["matrix"] = bseq.b_by_matrix(n, m)
    bad = {k: v for k, v in checks.items() if v != value}
    if args.format == "json":
        _emit(_dump({"n": n, "m": m, "value": value, "checked_by": sorted(checks), "agree": not bad}))
    else:
        _emit(str(value))
    if bad:
        sys.stderr.write(f"methods disagree at ({n},{m}): dp={value} {bad}\n")
        return 1
    return 0


def _poly_listing(polys: Sequence[IntPoly], var: str, label: str, fmt: str) -> str:
    if fmt == "json":
        return _dump([{"index": i, label: list(p.coeffs), "text": p.render(var)} for i, p in enumerate(polys)])
    if fmt == "csv":
        return "\n".join(f"{i}," + ",".join(map(str, p.coeffs)) for i, p in enumerate(polys))
    return "\n".join(p.render(var) for p in polys)


def cmd_qpoly(args) -> int:
    q = charpoly.q_by_recurrence(args.m_max)
    _emit(_poly_listing(q.polys, "x", "coeffs", args.format))
    return 0


def cmd_fpoly(args) -> int:
    f = charpoly.f_contfrac(args.m) if args.method == "contfrac" else charpoly.f_rational(args.m)
    if args.format == "json":
        _emit(
            _dump(
                {
                    "m": f.m,
                    "method": f.method,
                    "num": list(f.rat.num.coeffs),
                    "den": list(f.rat.den.coeffs),
                    "text": f.rat.render(),
                }
            )
        )
    elif args.format == "csv":
        _emit("num," + ",".join(map(str, f.rat.num.coeffs)) + "\nden," + ",".join(map(str, f.rat.den.coeffs)))
    else:
        _emit(f.rat.render())
    return 0


def cmd_hpoly(args) -> int:
    rows = [bseq.h_numerator(n, args.guard) for n in range(args.n_max + 1)]
    _emit(_poly_listing([r.numerator for r in rows], "y", "coeffs", args.format))
    return 0


def cmd_bfile(args) -> int:
    _emit("\n".join(f"{i} {v}" for i, v in bseq.bfile_values(args.count)))
    return 0


def lemma1_matrices(m_max: int) -> list[Matrix]:
    """B(k) and I - xB(k) for small k, then seeded random 5x5 integer matrices."""
    mats = [build_unit_primitive(k) for k in range(1, max(1, min(m_max, 12)) + 1)]
    mats += [identity_minus_xb(k) for k in range(1, max(1, min(m_max, 6)) + 1)]
    rng = random.Random(LEMMA1_SEED)
    for _ in range(LEMMA1_RANDOM):
        mats.append(Matrix.from_rows([[rng.randint(-5, 5) for _ in range(5)] for _ in range(5)]))
    return mats


def run_suite(suite: str, m_max: int, tol: float) -> list[IdentityReport]:
    if suite == "identity2":
        q = charpoly.q_by_recurrence(m_max + 1)
        return [charpoly.verify_identity_2(m, q) for m in range(m_max + 1)]
    if suite == "identity3":
        q = charpoly.q_by_recurrence(m_max + 2)
        return [charpoly.verify_identity_3(m, q) for m in range(m_max + 1)]
    if suite == "identity4":
        top = max(m_max, 1)
        q = charpoly.q_by_recurrence(top)
        r = charpoly.r_family(top, "bordered")
        return [charpoly.verify_identity_4(m, q, r) for m in range(1, top + 1)]
    if suite == "ogf":
        return charpoly.verify_q_ogf(m_max, charpoly.q_by_recurrence(m_max))
    if suite == "lemma1":
        return [verify_lemma1(M) for M in lemma1_matrices(m_max)]
    if suite == "trig":
        return [charpoly.trig_check(m, x, tol) for m in range(m_max + 1) for x in TRIG_POINTS]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    suites = [s for s in SUITES if s != "all"] if args.suite == "all" else [args.suite]
    results = {s: run_suite(s, args.m, args.tol) for s in suites}
    passed = all(all_passed(r) for r in results.values())
    if args.format == "json":
        _emit(
            _dump(
                {
                    "m_max": args.m,
                    "passed": passed,
                    "suites": {
                        s: {"passed": all_passed(r), "results": [x.to_dict() for x in r]} for s, r in results.items()
                    },
                }
            )
        )
    else:
        for s, reps in results.items():
            fails = [r for r in reps if not r.passed]
            _emit(f"{s}: {'PASS' if not fails else 'FAIL'} ({len(reps) - len(fails)}/{len(reps)})")
            for r in fails:
                res = r.residual.render() if isinstance(r.residual, IntPoly) else r.residual
                _emit(f"  index {r.index}: residual {res}")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unitprim", description=__doc__.splitlines()[0])
    p.add_argument("--backend", choices=("python", "cython"), help="force a kernel backend")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print the b(n,m) table")
    t.add_argument("--n", type=_nonneg, required=True, help="largest n")
    t.add_argument("--m", type=_nonneg, required=True, help="largest m")
    t.add_argument("--method", choices=(*bseq.METHODS, "all"), default="dp")
    t.add_argument("--format", choices=FORMATS, default="plain")
    t.add_argument("--golden", type=Path, default=None, help="reference table CSV for --method all")
    t.set_defaults(func=cmd_table)

    e = sub.add_parser("entry", help="print a single b(n,m)")
    e.add_argument("--n", type=_nonneg, required=True)
    e.add_argument("--m", type=_nonneg, required=True)
    e.add_argument("--format", choices=FORMATS, default="plain")
    e.set_defaults(func=cmd_entry)

    q = sub.add_parser("qpoly", help="print Q_0 .. Q_m")
    q.add_argument("m_max", type=_nonneg)
    q.add_argument("--format", choices=FORMATS, default="plain")
    q.set_defaults(func=cmd_qpoly)

    f = sub.add_parser("fpoly", help="print F_m as numerator/denominator")
    f.add_argument("m", type=_nonneg)
    f.add_argument("--method", choices=("theorem5", "contfrac"), default="theorem5")
    f.add_argument("--format", choices=FORMATS, default="plain")
    f.set_defaults(func=cmd_fpoly)

    h = sub.add_parser("hpoly", help="print row numerators H_0 .. H_n")
    h.add_argument("n_max", type=_nonneg)
    h.add_argument("--guard", type=_positive, default=10)
    h.add_argument("--format", choices=FORMATS, default="plain")
    h.set_defaults(func=cmd_hpoly)

    b = sub.add_parser("bfile", help="b-file of the table read by antidiagonals")
    b.add_argument("count", type=_positive)
    b.set_defaults(func=cmd_bfile)

    v = sub.add_parser("verify", help="run an identity sweep")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--m", type=_nonneg, default=30)
    v.add_argument("--tol", type=float, default=1e-8)
    v.add_argument("--format", choices=("json", "plain"), default="json")
    v.set_defaults(func=cmd_verify)
    return p


_BFILE_OK = {"table"}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "format", None) == "bfile" and args.command not in _BFILE_OK:
        sys.stderr.write(f"{args.command}: bfile format applies only to table output\n")
        return 2
    if args.backend:
        try:
            kernels.set_backend(args.backend)
        except ValueError as exc:
            sys.stderr.write(f"{exc}\n")
            return 2
    try:
        return args.func(args)
    except (UsageError, ValueError, FileNotFoundError) as exc:
        sys.stderr.write(f"{args.command}: {exc}\n")
        return 2
    except bseq.GuardFailure as exc:
        sys.stderr.write(f"{args.command}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
