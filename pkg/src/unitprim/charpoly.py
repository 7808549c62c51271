"""The Q, R, E and F families attached to the unit-primitive matrices.

Q_m(x) = det(I - x B(m)) and R_m(x) is the bordered determinant of the same
matrix. Each family is produced by two independent routes so they can be
checked against each other, and the identities linking them are verified
exactly as polynomial equalities.

Sign conventions follow the worked proofs rather than the displayed
statements:

* Q_m(x) Q_{m+1}(x) + Q_m(-x) Q_{m+1}(-x) = 2 (the "+" form);
* Q_m(x) + x R_m(x) = Q_{m-1}(-x);
* in the continued-fraction step the inner term is Q_{m-1}(x);
* the sine form of the trigonometric closed form carries the same
  (-1)^(m+1) factor as the cosine form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exactcore import IntPoly, RatFunc, poly_eval_float, series_expand_poly
from .matrixops import bordered_det, identity_minus_xb, poly_det
from .reports import IdentityReport

X = IntPoly((0, 1))
ONE = IntPoly.const(1)


@dataclass(frozen=True)
class QFamily:
    polys: tuple[IntPoly, ...]
    method: str

    def __getitem__(self, m: int) -> IntPoly:
        return self.polys[m]

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def m_max(self) -> int:
        return len(self.polys) - 1

    def covers(self, *ms: int) -> bool:
        return all(0 <= m <= self.m_max for m in ms)


@dataclass(frozen=True)
class RFamily:
    """R_1 .. R_{m_max}; ``polys[0]`` holds R_1."""

    polys: tuple[IntPoly, ...]
    method: str

    def __getitem__(self, m: int) -> IntPoly:
        if m < 1:
            raise IndexError("R is indexed from 1")
        return self.polys[m - 1]

    @property
    def m_max(self) -> int:
        return len(self.polys)


@dataclass(frozen=True)
class FFunc:
    m: int
    rat: RatFunc
    method: str

    def series(self, order: int) -> list[int]:
        return self.rat.series(order)


def q_by_recurrence(m_max: int) -> QFamily:
    """Q_0 = 1, Q_1 = 1 - x, Q_m(x) = -x Q_{m-1}(-x) + Q_{m-2}(x)."""
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    polys = [ONE, IntPoly((1, -1))]
    for m in range(2, m_max + 1):
        polys.append(-(polys[m - 1].neg_x().shift(1)) + polys[m - 2])
    return QFamily(tuple(polys[: m_max + 1]), "recurrence")


def q_by_determinant(m: int) -> IntPoly:
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return ONE
    return poly_det(identity_minus_xb(m))


def q_family_by_determinant(m_max: int) -> QFamily:
    return QFamily(tuple(q_by_determinant(m) for m in range(m_max + 1)), "determinant")


def r_by_bordered(m: int) -> IntPoly:
    if m < 1:
        raise ValueError("R_m is defined for m >= 1")
    r = bordered_det(identity_minus_xb(m))
    return r if isinstance(r, IntPoly) else IntPoly.const(r)


def r_from_q(m: int, q: QFamily) -> IntPoly:
    """(Q_{m-1}(-x) - Q_m(x)) / x; the division is exact."""
    if m < 1:
        raise ValueError("R_m is defined for m >= 1")
    if not q.covers(m - 1, m):
        raise ValueError(f"Q family does not cover indices {m - 1}..{m}")
    return (q[m - 1].neg_x() - q[m]).div_x()


def r_family(m_max: int, method: str = "bordered", q: Optional[QFamily] = None) -> RFamily:
    if method == "bordered":
        polys = tuple(r_by_bordered(m) for m in range(1, m_max + 1))
    elif method == "from_q":
        q = q if q is not None and q.covers(m_max) else q_by_recurrence(m_max)
        polys = tuple(r_from_q(m, q) for m in range(1, m_max + 1))
    else:
        raise ValueError(f"unknown R method {method!r}")
    return RFamily(polys, method)


def _q_up_to(m: int, q: Optional[QFamily]) -> QFamily:
    if q is not None and q.covers(m):
        return q
    return q_by_recurrence(m)


def e_rational(m: int, q: Optional[QFamily] = None) -> RatFunc:
    """E_m = R_{m+1} / Q_{m+1}; its coefficients are b(n+1, m)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    q = _q_up_to(m + 1, q)
    return RatFunc(r_from_q(m + 1, q), q[m + 1])


def f_rational(m: int, q: Optional[QFamily] = None) -> FFunc:
    """F_m = Q_m(-x) / Q_{m+1}(x)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    q = _q_up_to(m + 1, q)
    return FFunc(m, RatFunc(q[m].neg_x(), q[m + 1]), "theorem5")


def f_contfrac(m: int) -> FFunc:
    """F_m = 1 / (-x + F_{m-1}(-x)) built upward from F_0 = 1/(1 - x).

    With F_{m-1} = N/D the step gives F_m = D(-x) / (-x D(-x) + N(-x)).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    num, den = ONE, IntPoly((1, -1))
    for _ in range(m):
        d_neg = den.neg_x()
        num, den = d_neg, -(d_neg.shift(1)) + num.neg_x()
    return FFunc(m, RatFunc(num, den), "contfrac")


def verify_identity_2(m: int, q: QFamily, literal: bool = False) -> IdentityReport:
    """Q_m(x)Q_{m+1}(x) + Q_m(-x)Q_{m+1}(-x) = 2.

    ``literal=True`` checks the minus-sign variant instead, which is false.
    """
    if not q.covers(m, m + 1):
        raise ValueError("Q family too short")
    a = q[m] * q[m + 1]
    b = q[m].neg_x() * q[m + 1].neg_x()
    lhs = a - b if literal else a + b
    residual = lhs - 2
    return IdentityReport("identity2_literal" if literal else "identity2", m, residual.is_zero(), residual)


def verify_identity_3(m: int, q: QFamily) -> IdentityReport:
    """Q_{m+1}(x)Q_{m+1}(-x) - Q_{m+2}(x)Q_m(-x) = x."""
    if not q.covers(m, m + 2):
        raise ValueError("Q family too short")
    lhs = q[m + 1] * q[m + 1].neg_x() - q[m + 2] * q[m].neg_x()
    residual = lhs - X
    return IdentityReport("identity3", m, residual.is_zero(), residual)


def verify_identity_4(m: int, q: QFamily, r: RFamily) -> IdentityReport:
    """Q_m(x) + x R_m(x) = Q_{m-1}(-x)."""
    if m < 1:
        raise ValueError("identity 4 needs m >= 1")
    if not q.covers(m - 1, m) or r.m_max < m:
        raise ValueError("families too short")
    residual = q[m] + r[m].shift(1) - q[m - 1].neg_x()
    return IdentityReport("identity4", m, residual.is_zero(), residual)


def q_ogf_coefficients(m_max: int) -> list[IntPoly]:
    """Coefficients of t^0..t^m_max in (1+t)(1-t^2-xt) / ((1-t^2)^2 + (xt)^2)."""
    c = IntPoly.const
    # numerator: (1 + t)(1 - x t - t^2) = 1 + (1 - x) t - (1 + x) t^2 - t^3
    num = [c(1), IntPoly((1, -1)), IntPoly((-1, -1)), c(-1)]
    # denominator: 1 - 2 t^2 + t^4 + x^2 t^2
    den = [c(1), IntPoly(), IntPoly((-2, 0, 1)), IntPoly(), c(1)]
    return series_expand_poly(num, den, m_max + 1)


def verify_q_ogf(m_max: int, q: QFamily) -> list[IdentityReport]:
    if not q.covers(m_max):
        raise ValueError("Q family too short")
    coeffs = q_ogf_coefficients(m_max)
    reports = []
    for m, cm in enumerate(coeffs):
        residual = cm - q[m]
        reports.append(IdentityReport("q_ogf", m, residual.is_zero(), residual))
    return reports


POLE_GUARD = 1e-6


def _real_roots(p: IntPoly) -> list[float]:
    if p.degree < 1:
        return []
    roots = np.roots(list(reversed(p.coeffs)))
    return [float(z.real) for z in roots if abs(z.imag) < 1e-9]


def trig_values(m: int, x: float) -> dict[str, float]:
    """Rational value of F_m(x) next to the two trigonometric forms.

    ``cos_form`` and ``sin_form`` use the corrected sign; ``sin_form_literal``
    is the sine ratio without the (-1)^(m+1) factor.
    """
    q = q_by_recurrence(m + 1)
    rational = poly_eval_float(q[m].neg_x(), x) / poly_eval_float(q[m + 1], x)
    theta = math.acos((-1) ** m * x / 2)
    sign = (-1) ** (m + 1)
    cos_form = sign * math.cos((2 * m + 1) / 2 * theta) / math.cos((2 * m + 3) / 2 * theta)
    sin_ratio = (math.sin((m + 1) * theta) - math.sin(m * theta)) / (
        math.sin((m + 2) * theta) - math.sin((m + 1) * theta)
    )
    return {
        "theta": theta,
        "rational": rational,
        "cos_form": cos_form,
        "sin_form": sign * sin_ratio,
        "sin_form_literal": sin_ratio,
    }


def trig_check(m: int, x: float, tol: float = 1e-8) -> IdentityReport:
    if m < 0:
        raise ValueError("m must be >= 0")
    if not abs(x) < 2:
        raise ValueError("|x| must be < 2 for a real angle")
    q = q_by_recurrence(m + 1)
    for root in _real_roots(q[m + 1]):
        if abs(x - root) < POLE_GUARD:
            raise ValueError(f"x={x} lies within {POLE_GUARD} of a pole at {root}")
    v = trig_values(m, x)
    err = max(abs(v["cos_form"] - v["rational"]), abs(v["sin_form"] - v["rational"]))
    return IdentityReport(
        "trig",
        m,
        err <= tol,
        err,
        details={"x": x, "tol": tol, **v},
    )
