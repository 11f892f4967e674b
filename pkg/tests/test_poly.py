"""Polynomial arithmetic, composition, series expansion, rendering."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dickson.poly import (
    Polynomial,
    poly_compose,
    poly_derivative,
    poly_eval,
    render_human,
    render_latex,
    series_from_rational,
)
from dickson.rings import GF, QQ, ZZ, RingMismatchError


def test_construction_and_degree():
    p = Polynomial([1, 0, 3, 0], ZZ)
    assert p.coeffs == (1, 0, 3)
    assert p.degree == 2
    assert Polynomial.zero(ZZ).degree == -1
    assert Polynomial.x(ZZ).degree == 1


def test_foreign_coefficients_rejected():
    with pytest.raises(RingMismatchError):
        Polynomial([Fraction(1, 2)], ZZ)
    with pytest.raises(RingMismatchError):
        Polynomial([GF(11).one()], GF(7))


def test_arithmetic():
    x = Polynomial.x(ZZ)
    p = x * x - 2
    q = x + 1
    assert (p + q).coeffs == (-1, 1, 1)
    assert (p - q).coeffs == (-3, -1, 1)
    assert (p * q).coeffs == (-2, -2, 1, 1)
    assert (3 * q).coeffs == (3, 3)
    assert (-p).coeffs == (2, 0, -1)


def test_eval_horner():
    p = Polynomial([-2, 0, 1], ZZ)  # x^2 - 2
    assert poly_eval(p, 5) == 23
    assert p(5) == 23
    F = GF(7)
    pf = Polynomial([F.from_int(5), F.from_int(0), F.from_int(1)], F)
    assert poly_eval(pf, F.from_int(3)) == F.from_int(0)
    with pytest.raises(RingMismatchError):
        poly_eval(p, Fraction(1, 2))


def test_compose_dickson_instance():
    # D_2 o D_3 with a = 1: substituting x^3 - 3x into x^2 - 2
    d2 = Polynomial([-2, 0, 1], ZZ)
    d3 = Polynomial([0, -3, 0, 1], ZZ)
    comp = poly_compose(d2, d3)
    assert comp.coeffs == (-2, 0, 9, 0, -6, 0, 1)  # x^6 - 6x^4 + 9x^2 - 2


def test_derivative_leibniz():
    rng = random.Random(5)
    for _ in range(30):
        p = Polynomial([rng.randrange(-4, 5) for _ in range(rng.randrange(1, 6))], ZZ)
        q = Polynomial([rng.randrange(-4, 5) for _ in range(rng.randrange(1, 6))], ZZ)
        lhs = poly_derivative(p * q)
        rhs = poly_derivative(p) * q + p * poly_derivative(q)
        assert lhs.coeffs == rhs.coeffs


def test_derivative_finite_field_wraps():
    F = GF(5)
    p = Polynomial([F.zero()] * 5 + [F.one()], F)  # x^5
    assert poly_derivative(p).degree == -1  # 5 x^4 = 0 mod 5


def test_shift():
    p = Polynomial([1, 2], ZZ)
    assert p.shift(2).coeffs == (0, 0, 1, 2)


def test_series_geometric():
    # 1 / (1 - x) = 1 + x + x^2 + ...
    num = Polynomial([Fraction(1)], QQ)
    den = Polynomial([Fraction(1), Fraction(-1)], QQ)
    s = series_from_rational(num, den, 6)
    assert s.coeffs == tuple(Fraction(1) for _ in range(6))


def test_series_keeps_trailing_zeros():
    num = Polynomial([1], ZZ)
    den = Polynomial([1], ZZ)
    s = series_from_rational(num, den, 4)
    assert s.coeffs == (1, 0, 0, 0)
    assert s.order == 4
    assert s.coefficient(3) == 0


def test_series_requires_invertible_constant():
    num = Polynomial([1], ZZ)
    den = Polynomial([2, 1], ZZ)
    with pytest.raises(ValueError):
        series_from_rational(num, den, 4)


def test_series_finite_field():
    F = GF(7)
    num = Polynomial([F.one()], F)
    den = Polynomial([F.from_int(2), F.from_int(1)], F)
    s = series_from_rational(num, den, 5)
    # the defining property: den * series == num through order 5
    prod = [F.zero()] * 5
    for i, c in enumerate(den.coeffs):
        for j in range(5 - i):
            prod[i + j] = prod[i + j] + c * s.coefficient(j)
    assert prod == [F.one()] + [F.zero()] * 4


def test_render_human():
    p = Polynomial([0, 5, 0, -5, 0, 1], ZZ)
    assert render_human(p) == "x^5 - 5*x^3 + 5*x"
    assert render_human(Polynomial([2], ZZ)) == "2"
    assert render_human(Polynomial.zero(ZZ)) == "0"
    assert render_human(Polynomial([-1, -1], ZZ)) == "-x - 1"


def test_render_latex():
    p = Polynomial([0, 5, 0, -5, 0, 1], ZZ)
    assert render_latex(p) == "x^{5}-5x^{3}+5x"
    assert render_latex(Polynomial([-2, 0, 1], ZZ)) == "x^{2}-2"


def test_render_composite_coefficients_parenthesized():
    F = GF(9)
    t = F.parse("0,1")
    one = F.one()
    p = Polynomial([F.zero(), t + one + one], F)
    assert "(" in render_human(p)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.integers(-5, 5))
@settings(max_examples=60, deadline=None)
def test_compose_then_eval_matches_eval_then_eval(ps, qs, x):
    p = Polynomial(ps, ZZ)
    q = Polynomial(qs, ZZ)
    assert poly_eval(poly_compose(p, q), x) == poly_eval(p, poly_eval(q, x))
