"""The table b(n, m) computed four ways, plus its row and column generating data.

b(n, m) = 1 on the axes and s(B(m+1)^(n-1)) otherwise. The methods:

``matrix``    entry sums of unit-primitive matrix powers (slow, capped),
``dp``        the convolution recurrence
              c(n,m) = c(n,m-1) + sum_k c(2k,m-1) c(n-1-2k,m),
``series``    coefficients of Q_m(-x)/Q_{m+1}(x),
``contfrac``  coefficients of the continued-fraction form of F_m.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from importlib import resources
from math import comb
from pathlib import Path
from typing import Iterator, Optional, Sequence

from . import kernels
from .charpoly import f_contfrac, f_rational, q_by_recurrence
from .exactcore import IntPoly, poly_mul
from .matrixops import build_unit_primitive, entry_sum, mat_pow

METHODS = ("matrix", "dp", "series", "contfrac")
MATRIX_CAP = 12


class GuardFailure(ArithmeticError):
    """Truncated numerator has a nonzero coefficient past the degree bound."""


@dataclass(frozen=True)
class BTable:
    values: tuple[tuple[int, ...], ...]  # values[n][m]
    method: str

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    @property
    def m_max(self) -> int:
        return len(self.values[0]) - 1

    def __getitem__(self, nm: tuple[int, int]) -> int:
        n, m = nm
        return self.values[n][m]

    def row(self, n: int) -> tuple[int, ...]:
        return self.values[n]

    def column(self, m: int) -> list[int]:
        return [r[m] for r in self.values]

    def sub(self, n_max: int, m_max: int) -> "BTable":
        return BTable(tuple(r[: m_max + 1] for r in self.values[: n_max + 1]), self.method)

    def same_values(self, other: "BTable") -> bool:
        return self.values == other.values

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n\\m", *range(self.m_max + 1)])
        for n, r in enumerate(self.values):
            w.writerow([n, *r])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, method: str = "csv") -> "BTable":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        width = len(header) - 1
        rows = []
        for n, rec in enumerate(reader):
            if not rec:
                continue
            if int(rec[0]) != n or len(rec) != width + 1:
                raise ValueError(f"malformed table row {n}: {rec}")
            rows.append(tuple(int(v) for v in rec[1:]))
        if not rows:
            raise ValueError("empty table")
        return cls(tuple(rows), method)


def _from_columns(cols: Sequence[Sequence[int]], method: str) -> BTable:
    return BTable(tuple(zip(*cols)), method)


def load_table1(path: Optional[Path] = None) -> BTable:
    """The 6x10 reference table (n <= 5, m <= 9) shipped with the package."""
    if path is None:
        text = resources.files("unitprim.data").joinpath("table1.csv").read_text()
    else:
        text = Path(path).read_text()
    return BTable.from_csv(text, "golden")


def b_by_matrix(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0 or m == 0:
        return 1
    return entry_sum(mat_pow(build_unit_primitive(m + 1), n - 1))


def table_by_matrix(n_max: int, m_max: int) -> BTable:
    rows = []
    for n in range(n_max + 1):
        rows.append(tuple(b_by_matrix(n, m) for m in range(m_max + 1)))
    return BTable(tuple(rows), "matrix")


def dp_columns(n_max: int, m_max: int) -> Iterator[list[int]]:
    col = [1] * (n_max + 1)
    yield col
    for _ in range(m_max):
        col = kernels.dp_next_column(col, n_max)
        yield col


def b_by_dp(n_max: int, m_max: int) -> BTable:
    if n_max < 0 or m_max < 0:
        raise ValueError("bounds must be nonnegative")
    return _from_columns(list(dp_columns(n_max, m_max)), "dp")


def b_by_series(n_max: int, m: int) -> list[int]:
    return f_rational(m).series(n_max + 1)


def b_by_contfrac(n_max: int, m: int) -> list[int]:
    return f_contfrac(m).series(n_max + 1)


def table_by_series(n_max: int, m_max: int) -> BTable:
    q = q_by_recurrence(m_max + 1)
    return _from_columns([f_rational(m, q).series(n_max + 1) for m in range(m_max + 1)], "series")


def table_by_contfrac(n_max: int, m_max: int) -> BTable:
    return _from_columns([b_by_contfrac(n_max, m) for m in range(m_max + 1)], "contfrac")


def build_table(n_max: int, m_max: int, method: str) -> BTable:
    builders = {
        "matrix": table_by_matrix,
        "dp": b_by_dp,
        "series": table_by_series,
        "contfrac": table_by_contfrac,
    }
    if method not in builders:
        raise ValueError(f"unknown method {method!r}")
    return builders[method](n_max, m_max)


@dataclass
class CrossCheckReport:
    n_max: int
    m_max: int
    methods: list[str]
    agree: bool = True
    discrepancy: Optional[dict] = None
    checked: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "m_max": self.m_max,
            "methods": self.methods,
            "agree": self.agree,
            "checked": self.checked,
            "discrepancy": self.discrepancy,
        }


def _first_difference(a: BTable, b: BTable) -> Optional[tuple[int, int]]:
    for n in range(min(a.n_max, b.n_max) + 1):
        for m in range(min(a.m_max, b.m_max) + 1):
            if a[n, m] != b[n, m]:
                return n, m
    return None


def cross_check(
    n_max: int,
    m_max: int,
    methods: Sequence[str] = METHODS,
    matrix_cap: int = MATRIX_CAP,
    golden: Optional[BTable] = None,
) -> tuple[BTable, CrossCheckReport]:
    """Build the table by every requested method and compare against dp.

    The matrix method is restricted to n, m <= ``matrix_cap``. When ``golden``
    is given, the overlapping region is compared too. Returns the dp table
    and the report; the report records the first discrepancy found.
    """
    reference = b_by_dp(n_max, m_max)
    report = CrossCheckReport(n_max, m_max, list(methods))
    others: list[BTable] = []
    for method in methods:
        if method == "dp":
            continue
        if method == "matrix":
            others.append(table_by_matrix(min(n_max, matrix_cap), min(m_max, matrix_cap)))
        else:
            others.append(build_table(n_max, m_max, method))
    if golden is not None:
        others.append(golden)
    for table in others:
        report.checked.append(f"dp vs {table.method} (n<={min(n_max, table.n_max)}, m<={min(m_max, table.m_max)})")
        diff = _first_difference(reference, table)
        if diff is not None:
            n, m = diff
            report.agree = False
            report.discrepancy = {
                "method": table.method,
                "n": n,
                "m": m,
                "dp": reference[n, m],
                table.method: table[n, m],
            }
            break
    return reference, report


@dataclass(frozen=True)
class EhrhartRow:
    """Row n written as H_n(y) / (1 - y)^(n+1)."""

    n: int
    numerator: IntPoly

    @property
    def pole_order(self) -> int:
        return self.n + 1

    def series(self, order: int) -> list[int]:
        """Coefficients of H_n(y)/(1-y)^(n+1) from binomial expansion."""
        expansion = [comb(self.n + k, k) for k in range(order)]
        full = poly_mul(self.numerator, IntPoly(expansion)).coeffs
        return [full[k] if k < len(full) else 0 for k in range(order)]


def h_numerator(n: int, guard: int = 10) -> EhrhartRow:
    """Numerator of the row generating function for row n.

    Multiplies b(n, 0..n+guard) by (1-y)^(n+1); coefficients n+1 .. n+guard
    of the truncated product must vanish.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if guard < 1:
        raise ValueError("guard must be >= 1")
    length = n + 1 + guard
    row = [c[n] for c in dp_columns(n, length - 1)]
    prod = poly_mul(IntPoly(row), IntPoly((1, -1)) ** (n + 1)).coeffs
    tail = [prod[k] if k < len(prod) else 0 for k in range(n + 1, n + 1 + guard)]
    if any(tail):
        raise GuardFailure(f"row {n}: coefficients past degree {n} do not vanish: {tail}")
    return EhrhartRow(n, IntPoly(prod[: n + 1]))


@dataclass(frozen=True)
class KGrid:
    """Coefficients of x^n y^m in K(x, y), with the outcome of the two-reading check."""

    table: BTable
    rows_agree: bool
    columns_agree: bool

    @property
    def consistent(self) -> bool:
        return self.rows_agree and self.columns_agree


def k_grid(n_max: int, m_max: int, guard: int = 10) -> KGrid:
    """dp table read as a K(x, y) coefficient grid.

    Columns are re-derived from F_m series and rows from H_n / (1-y)^(n+1);
    both must reproduce the grid.
    """
    table = b_by_dp(n_max, m_max)
    q = q_by_recurrence(m_max + 1)
    columns_agree = all(f_rational(m, q).series(n_max + 1) == table.column(m) for m in range(m_max + 1))
    rows_agree = all(
        h_numerator(n, guard).series(m_max + 1) == list(table.row(n)) for n in range(n_max + 1)
    )
    return KGrid(BTable(table.values, "kgrid"), rows_agree, columns_agree)


def antidiagonals(n_max: int, m_max: int, count: Optional[int] = None) -> list[tuple[int, int, int]]:
    """(n, m, d) positions read by antidiagonals d = n + m ascending, m ascending within each.

    With ``count`` the first ``count`` positions are returned regardless of
    the rectangle; otherwise diagonals fully inside n<=n_max, m<=m_max.
    """
    out = []
    d = 0
    limit = min(n_max, m_max) if count is None else None
    while True:
        if limit is not None and d > limit:
            break
        for m in range(d + 1):
            out.append((d - m, m, d))
            if count is not None and len(out) >= count:
                return out
        d += 1
    return out


def bfile_values(count: int) -> list[tuple[int, int]]:
    """(index, value) pairs of the first ``count`` terms, 1-based."""
    if count < 1:
        raise ValueError("count must be >= 1")
    positions = antidiagonals(0, 0, count=count)
    d_max = positions[-1][2]
    table = b_by_dp(d_max, d_max)
    return [(i + 1, table[n, m]) for i, (n, m, _) in enumerate(positions)]
