"""Exact dense matrices over Z or Z[x].

Matrix entries are either Python ints or ``IntPoly``; the determinant uses
fraction-free (Bareiss) elimination so every division is exact in the entry
ring. Docstrings use the 1-indexed (i, j) convention; storage is 0-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from . import kernels
from .exactcore import ExactDivisionError, IntPoly
from .reports import IdentityReport

Entry = Union[int, IntPoly]


@dataclass(frozen=True)
class Matrix:
    """Square matrix with immutable rows."""

    rows: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]]) -> "Matrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, size: int, one: Entry = 1, zero: Entry = 0) -> "Matrix":
        return cls(tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Entry:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.size != self.size:
            raise ValueError("size mismatch")
        return Matrix.from_rows(kernels.matmul([list(r) for r in self.rows], [list(r) for r in other.rows]))

    def scale(self, c: Entry) -> "Matrix":
        return Matrix.from_rows([[c * e for e in r] for r in self.rows])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix.from_rows([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def is_poly(self) -> bool:
        return any(isinstance(e, IntPoly) for r in self.rows for e in r)

    def to_lists(self) -> list[list[Entry]]:
        return [list(r) for r in self.rows]

    def render(self) -> str:
        cells = [[str(e) for e in r] for r in self.rows]
        if not cells:
            return ""
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


# Both names in the data model describe the same container.
IntMatrix = Matrix
PolyMatrix = Matrix


def build_unit_primitive(m: int) -> Matrix:
    """B(m): entry (i, j) is 1 when i + j <= m + 1, else 0."""
    if m < 1:
        raise ValueError("unit-primitive matrix needs m >= 1")
    return Matrix(tuple(tuple(1 if i + j <= m - 1 else 0 for j in range(m)) for i in range(m)))


def unit_primitive_inverse(m: int) -> Matrix:
    """Closed-form inverse of B(m).

    Ones on the anti-diagonal (i + j = m + 1) and -1 directly left of it
    (i + j = m + 2).
    """
    if m < 1:
        raise ValueError("unit-primitive matrix needs m >= 1")
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            s = i + j
            row.append(1 if s == m - 1 else -1 if s == m else 0)
        rows.append(tuple(row))
    return Matrix(tuple(rows))


def entry_sum(M: Matrix) -> Entry:
    total: Entry = 0
    for r in M.rows:
        for e in r:
            total = total + e
    return total


def mat_pow(M: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("negative matrix power")
    result = Matrix.identity(M.size)
    base = M
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def identity_minus_xb(m: int) -> Matrix:
    """The polynomial matrix I - x*B(m)."""
    one, zero, mx = IntPoly.const(1), IntPoly(), IntPoly((0, -1))
    rows = []
    for i in range(m):
        rows.append(tuple((one if i == j else zero) + (mx if i + j <= m - 1 else zero) for j in range(m)))
    return Matrix(tuple(rows))


def _exact_div(a: Entry, b: Entry) -> Entry:
    if isinstance(a, IntPoly):
        return a.exact_div(b)
    q, r = divmod(a, b)
    if r:
        raise ExactDivisionError(f"{a} is not divisible by {b}")
    return q


def _as_ring(M: Matrix) -> list[list[Entry]]:
    if M.is_poly():
        return [[e if isinstance(e, IntPoly) else IntPoly.const(e) for e in r] for r in M.rows]
    return [list(r) for r in M.rows]


def det(M: Matrix) -> Entry:
    """Determinant by Bareiss elimination; the empty matrix has determinant 1."""
    n = M.size
    poly = M.is_poly()
    one: Entry = IntPoly.const(1) if poly else 1
    if n == 0:
        return one
    a = _as_ring(M)
    sign = 1
    prev: Entry = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return IntPoly() if poly else 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * pivot - lead * row_k[j], prev)
            row_i[k] = 0 * one
        prev = pivot
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def poly_det(M: Matrix) -> IntPoly:
    d = det(M)
    return d if isinstance(d, IntPoly) else IntPoly.const(d)


def _minor(rows: Sequence[Sequence[Entry]], i: int, j: int) -> Matrix:
    return Matrix.from_rows([r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i])


def adjugate(M: Matrix) -> Matrix:
    """Transpose of the cofactor matrix, built from (n-1)x(n-1) minors."""
    n = M.size
    if n < 1:
        raise ValueError("adjugate needs size >= 1")
    if n == 1:
        return Matrix.identity(1, IntPoly.const(1) if M.is_poly() else 1)
    rows = [list(r) for r in M.rows]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(_minor(rows, i, j))
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return Matrix.from_rows(adj)


def bordered(M: Matrix) -> Matrix:
    """[[0, u^t], [-u, M]] with u the all-ones column."""
    n = M.size
    rows = [(0,) + (1,) * n]
    for r in M.rows:
        rows.append((-1,) + tuple(r))
    return Matrix(tuple(rows))


def bordered_det(M: Matrix) -> Entry:
    return det(bordered(M))


def verify_lemma1(M: Matrix) -> IdentityReport:
    """Entry sum of the adjugate against the bordered determinant."""
    lhs = entry_sum(adjugate(M))
    rhs = bordered_det(M)
    residual = lhs - rhs
    return IdentityReport(
        name="lemma1",
        index=M.size,
        passed=not residual,
        residual=residual,
        details={"adjugate_sum": str(lhs), "bordered_det": str(rhs)},
    )
