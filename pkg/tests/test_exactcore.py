import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitprim.exactcore import (
    NEG_INF,
    ExactDivisionError,
    IntPoly,
    RatFunc,
    poly_eval_float,
    poly_mul,
    poly_substitute_neg,
    render_poly,
    series_expand,
)

small_polys = st.lists(st.integers(-9, 9), max_size=9).map(IntPoly)
wide_polys = st.lists(st.integers(-(10**20), 10**20), max_size=7).map(IntPoly)


def P(*c):
    return IntPoly(c)


class TestIntPoly:
    def test_canonical_form_drops_trailing_zeros(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).coeffs == ()

    def test_zero_degree_is_sentinel(self):
        assert IntPoly().degree == NEG_INF
        assert IntPoly().degree + 5 == NEG_INF
        assert P(3).degree == 0

    def test_immutable(self):
        with pytest.raises(AttributeError):
            P(1).coeffs = (2,)

    @pytest.mark.parametrize(
        "p, q, expected",
        [
            (P(1, -1), P(1, 1), P(1, 0, -1)),
            (P(1, -1), P(1, -1, -1), P(1, -2, 0, 1)),
            (IntPoly(), P(4, 5, 6), IntPoly()),
        ],
    )
    def test_poly_mul(self, each_backend, p, q, expected):
        assert poly_mul(p, q) == expected

    @pytest.mark.parametrize(
        "p, expected",
        [(P(1, -1), P(1, 1)), (P(1, -1, -1), P(1, 1, -1)), (P(7), P(7))],
    )
    def test_substitute_neg(self, p, expected):
        assert poly_substitute_neg(p) == expected

    def test_eval(self):
        assert P(1, 2, 3)(2) == 17
        assert P(1, -1)(10**30) == 1 - 10**30

    @pytest.mark.parametrize(
        "p, x, expected",
        [(P(1, -1), 0.5, 0.5), (P(1, -1, -1), 0.5, 0.25), (P(1, -2, -1, 1), 0.0, 1.0)],
    )
    def test_eval_float(self, p, x, expected):
        assert poly_eval_float(p, x) == pytest.approx(expected, abs=1e-15)

    def test_exact_div(self):
        a = P(1, -1) * P(2, 3, 5)
        assert a.exact_div(P(1, -1)) == P(2, 3, 5)
        assert P(6, 4).exact_div(2) == P(3, 2)
        with pytest.raises(ExactDivisionError):
            P(1, 1).exact_div(P(1, -1))
        with pytest.raises(ExactDivisionError):
            P(3, 4).exact_div(2)
        with pytest.raises(ZeroDivisionError):
            P(1).exact_div(IntPoly())

    def test_div_x(self):
        assert P(0, 2, 1).div_x() == P(2, 1)
        with pytest.raises(ExactDivisionError):
            P(1, 1).div_x()

    @pytest.mark.parametrize(
        "p, text",
        [
            (P(1, -2, -1, 1), "1 - 2*x - x^2 + x^3"),
            (P(1, -2, -3, 1, 1), "1 - 2*x - 3*x^2 + x^3 + x^4"),
            (P(0, -1), "-x"),
            (P(0, 0, 5), "5*x^2"),
            (IntPoly(), "0"),
            (P(1), "1"),
        ],
    )
    def test_render(self, p, text):
        assert render_poly(p) == text

    def test_render_variable(self):
        assert P(1, 1).render("y") == "1 + y"


@settings(max_examples=200)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p + q) - q == p


@given(wide_polys, wide_polys)
def test_degree_of_product(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree
    else:
        assert (p * q).degree == NEG_INF


@given(small_polys, small_polys)
def test_neg_x_is_involutive_homomorphism(p, q):
    assert poly_substitute_neg(poly_substitute_neg(p)) == p
    assert poly_substitute_neg(p * q) == poly_substitute_neg(p) * poly_substitute_neg(q)


class TestSeries:
    @pytest.mark.parametrize(
        "num, den, order, expected",
        [
            (P(1), P(1, -1), 5, [1, 1, 1, 1, 1]),
            (P(1, 1), P(1, -1, -1), 6, [1, 2, 3, 5, 8, 13]),
            (P(1, 1, -1), P(1, -2, -1, 1), 6, [1, 3, 6, 14, 31, 70]),
        ],
    )
    def test_table_columns(self, each_backend, num, den, order, expected):
        assert series_expand(RatFunc(num, den), order) == expected

    def test_negative_unit_constant(self):
        # 1/(-1 + x) = -(1 + x + x^2 + ...)
        assert series_expand(RatFunc(P(1), P(-1, 1)), 4) == [-1, -1, -1, -1]

    def test_non_unit_constant_rejected(self):
        with pytest.raises(ValueError):
            series_expand(RatFunc(P(1), P(2, 1)), 3)

    def test_zero_constant_rejected(self):
        with pytest.raises(ValueError):
            RatFunc(P(1), P(0, 1))

    def test_order_zero(self):
        assert series_expand(RatFunc(P(1), P(1, -1)), 0) == []


dens = st.lists(st.integers(-5, 5), max_size=5).map(lambda t: IntPoly([1] + t))


@given(small_polys, dens, st.integers(0, 25), st.integers(0, 25))
def test_series_prefix_stability(num, den, j, k):
    j, k = sorted((j, k))
    f = RatFunc(num, den)
    assert series_expand(f, k)[:j] == series_expand(f, j)


@given(small_polys, small_polys, dens, st.integers(0, 20))
def test_series_of_product_is_convolution(p, num, den, k):
    lhs = series_expand(RatFunc(p * num, den), k)
    base = series_expand(RatFunc(num, den), k)
    conv = [sum(p[i] * base[n - i] for i in range(n + 1)) for n in range(k)]
    assert lhs == conv


@given(small_polys, dens, st.integers(0, 20))
def test_series_satisfies_defining_congruence(num, den, k):
    c = series_expand(RatFunc(num, den), k)
    prod = den * IntPoly(c)
    assert [prod[i] for i in range(k)] == [num[i] for i in range(k)]


def test_ratfunc_cross_multiplicative_equality():
    f = RatFunc(P(1, 1), P(1, -1, -1))
    g = RatFunc(P(1, 1) * P(1, 2), P(1, -1, -1) * P(1, 2))
    assert f == g
    assert f != RatFunc(P(1), P(1, -1))
    assert math.isclose(poly_eval_float(g.num, 0.1) / poly_eval_float(g.den, 0.1), 1.1 / 0.89)
