"""Integer polynomials, rational functions and power-series extraction.

Python ints are the scalar type throughout. Polynomials are stored in
ascending order (constant term first) with no trailing zeros, so the zero
polynomial has an empty coefficient tuple and degree ``NEG_INF``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import kernels

#: Degree of the zero polynomial. Adding an integer to it stays ``NEG_INF``.
NEG_INF = -math.inf


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder (internal arithmetic bug)."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Dense univariate polynomial over the integers, immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.render()

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def neg_x(self) -> "IntPoly":
        return poly_substitute_neg(self)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def div_x(self) -> "IntPoly":
        """Exact division by x."""
        if self[0] != 0:
            raise ExactDivisionError(f"{self} has nonzero constant term; not divisible by x")
        return IntPoly(self.coeffs[1:])

    def exact_div(self, divisor: "IntPoly | int") -> "IntPoly":
        """Quotient of an exact division in Z[x]; raises if a remainder is left."""
        if isinstance(divisor, int):
            divisor = IntPoly.const(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = divisor.coeffs
        dn = len(d) - 1
        lead = d[-1]
        if len(rem) - 1 < dn:
            if rem:
                raise ExactDivisionError(f"{self} is not divisible by {divisor}")
            return IntPoly()
        quot = [0] * (len(rem) - dn)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ExactDivisionError(f"{self} is not divisible by {divisor}")
            quot[i - dn] = q
            for j, dj in enumerate(d):
                rem[i - dn + j] -= q * dj
        if any(rem):
            raise ExactDivisionError(f"{self} is not divisible by {divisor}")
        return IntPoly(quot)

    def render(self, var: str = "x") -> str:
        return render_poly(self, var)


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return IntPoly(kernels.convolve(list(p.coeffs), list(q.coeffs)))


def poly_substitute_neg(p: IntPoly) -> IntPoly:
    """p(x) -> p(-x)."""
    return IntPoly(-c if i & 1 else c for i, c in enumerate(p.coeffs))


def poly_eval_float(p: IntPoly, x: float) -> float:
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def render_poly(p: IntPoly, var: str = "x") -> str:
    """Ascending text form such as ``1 - 2*x - x^2 + x^3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


@dataclass(frozen=True, eq=False)
class RatFunc:
    """Numerator/denominator pair kept unreduced; equality is cross-multiplicative."""

    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        if self.den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFunc equality is cross-multiplicative; not hashable")

    def series(self, order: int) -> list[int]:
        return series_expand(self, order)

    def render(self, var: str = "x") -> str:
        return f"({render_poly(self.num, var)})/({render_poly(self.den, var)})"

    def __str__(self) -> str:
        return self.render()


def series_expand(f: RatFunc, order: int) -> list[int]:
    """First ``order`` power-series coefficients of ``f`` at 0.

    Solves den * series = num term by term. The denominator's constant term
    must be +1 or -1 so the coefficients stay integral.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    d0 = f.den[0]
    if d0 not in (1, -1):
        raise ValueError(f"denominator constant term {d0} is not a unit; series is not integral")
    return kernels.recurrence_series(list(f.num.coeffs), list(f.den.coeffs), order, d0)


def series_expand_poly(
    num: Sequence[IntPoly], den: Sequence[IntPoly], order: int
) -> list[IntPoly]:
    """Same recurrence with polynomial coefficients (a series in t over Z[x]).

    ``den[0]`` must be the constant polynomial 1 or -1.
    """
    if not den or den[0] not in (IntPoly.const(1), IntPoly.const(-1)):
        raise ValueError("leading series coefficient of the denominator must be +1 or -1")
    sign = den[0][0]
    out = kernels.recurrence_series(list(num), list(den), order, sign)
    return [c if isinstance(c, IntPoly) else IntPoly.const(c) for c in out]
