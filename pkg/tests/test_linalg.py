"""Matrix helpers and the trace-power formula against literal powering."""

import random
from fractions import Fraction
from math import comb

import pytest

from dickson.linalg import (
    CharData2,
    CharData3,
    SmallMatrix,
    char_data,
    mat_mul,
    mat_pow,
    trace_power_coefficient,
    trace_power_formula,
    trace_sequence_3x3,
)
from dickson.rings import GF, RingMismatchError


def test_mat_pow_fibonacci():
    m = SmallMatrix(((1, 1), (1, 0)))
    m6 = mat_pow(m, 6)
    assert m6.rows == ((13, 8), (8, 5))
    assert mat_pow(m, 0).rows == ((1, 0), (0, 1))


def test_mat_mul_checks_shapes_and_rings():
    a = SmallMatrix(((1, 2), (3, 4)))
    b = SmallMatrix(((0, 1, 0), (1, 0, 0), (0, 0, 1)))
    with pytest.raises(ValueError):
        mat_mul(a, b)
    F = GF(7)
    c = SmallMatrix(((F.from_int(1), F.from_int(2)), (F.from_int(3), F.from_int(4))))
    with pytest.raises(RingMismatchError):
        mat_mul(a, c)


def test_char_data_2x2():
    m = SmallMatrix(((1, 2), (3, 4)))
    data = char_data(m)
    assert data == CharData2(t=5, d=-2)


def test_char_data_3x3_principal_minors():
    m = SmallMatrix(((1, 2, 3), (4, 5, 6), (7, 8, 10)))
    data = char_data(m)
    assert data.e1 == 16
    # sum of the three principal 2x2 minors
    assert data.e2 == (1 * 5 - 2 * 4) + (1 * 10 - 3 * 7) + (5 * 10 - 6 * 8)
    assert data.e3 == m.det()


def test_trace_power_coefficient_values():
    assert trace_power_coefficient(4, 0) == 1
    assert trace_power_coefficient(4, 1) == comb(3, 1) + comb(2, 0)
    assert trace_power_coefficient(6, 3) == comb(3, 3) + comb(2, 2)
    # the division-form n/(n-k) * C(n-k, k) agrees wherever it is integral
    for n in range(1, 40):
        for k in range(1, n // 2 + 1):
            assert trace_power_coefficient(n, k) * (n - k) == n * comb(n - k, k)


def test_trace_power_formula_vs_matrix_powering():
    rng = random.Random(3)
    for _ in range(60):
        rows = ((rng.randrange(-5, 6), rng.randrange(-5, 6)),
                (rng.randrange(-5, 6), rng.randrange(-5, 6)))
        m = SmallMatrix(rows)
        data = char_data(m)
        for n in (0, 1, 2, 7, 15):
            assert trace_power_formula(data.t, data.d, n) == mat_pow(m, n).trace()


def test_trace_power_formula_finite_field():
    F = GF(101)
    m = SmallMatrix(((F.from_int(3), F.from_int(99)), (F.from_int(1), F.from_int(0))))
    data = char_data(m)
    for n in range(0, 30):
        assert trace_power_formula(data.t, data.d, n) == mat_pow(m, n).trace()


def test_trace_sequence_3x3_vs_powering():
    rng = random.Random(7)
    for _ in range(20):
        rows = tuple(tuple(rng.randrange(-3, 4) for _ in range(3)) for _ in range(3))
        m = SmallMatrix(rows)
        data = char_data(m)
        seq = trace_sequence_3x3(data, 12)
        for n in range(13):
            assert seq[n] == mat_pow(m, n).trace()


def test_trace_sequence_3x3_rational():
    data = CharData3(e1=Fraction(1, 2), e2=Fraction(-1, 3), e3=Fraction(2))
    seq = trace_sequence_3x3(data, 6)
    assert seq[0] == 3
    assert seq[1] == Fraction(1, 2)
    assert seq[2] == Fraction(1, 2) ** 2 + Fraction(2, 3)


def test_matrix_power_negative_rejected():
    m = SmallMatrix(((1, 1), (1, 0)))
    with pytest.raises(ValueError):
        mat_pow(m, -1)
