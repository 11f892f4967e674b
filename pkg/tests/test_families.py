"""Dickson families, Waring/Carlitz power sums, multivariate analogues.

Expected values in this file come from independent derivations: direct
power sums of explicit roots, hand-expanded recurrences, or textbook
sequences (Lucas numbers, Chebyshev polynomials).
"""

import random
from fractions import Fraction

import pytest

from dickson.families import (
    N_POLY_MAX,
    DicksonSpec,
    SymmetricData,
    carlitz_power_sum,
    chebyshev_T,
    dickson_closed,
    dickson_eval_fast,
    dickson_first,
    dickson_genfun,
    dickson_kind,
    dickson_kind_closed,
    dickson_kind_eval_fast,
    dickson_kind_sequence,
    elementary_symmetric,
    family_terms,
    kind_k_functional_rhs,
    multivariate_dickson,
    multivariate_genfun,
    multivariate_oracle,
    waring_power_sum,
)
from dickson.poly import poly_compose, poly_eval
from dickson.rings import GF, QQ, BoundExceededError
from dickson.verify import run_suite


# ---------------------------------------------------------------- first kind

def test_first_kind_table_through_degree_five():
    # ascending coefficient tuples of D_0 .. D_5 with symbolic a folded
    # in at a = 1; independently: D_n(x, 1) are the trace polynomials
    # of [[x, -1], [1, 0]], expanded by hand
    seq = dickson_kind_sequence(5, 0, 1)
    assert [p.coeffs for p in seq] == [
        (2,),
        (0, 1),
        (-2, 0, 1),
        (0, -3, 0, 1),
        (2, 0, -4, 0, 1),
        (0, 5, 0, -5, 0, 1),
    ]


def test_family_terms_symbolic():
    assert family_terms(0, 0) == [(2, 0, 0)]
    assert family_terms(5, 0) == [(1, 0, 5), (-5, 1, 3), (5, 2, 1)]
    assert family_terms(4, 0) == [(1, 0, 4), (-4, 1, 2), (2, 2, 0)]
    # kind 2 has the degenerate constant 2 - k = 0
    assert family_terms(0, 2) == []


def test_closed_form_equals_recurrence():
    for a in (1, -1, 2, -3):
        for n in range(0, 25):
            assert dickson_closed(n, a).coeffs == dickson_first(n, a).coeffs
    F = GF(13)
    for av in (1, 5, 12):
        a = F.from_int(av)
        for n in range(0, 25):
            assert dickson_closed(n, a).coeffs == dickson_first(n, a).coeffs


def test_lucas_evaluation():
    # D_n(1, -1) is the Lucas sequence 2, 1, 3, 4, 7, 11, 18, ...
    expect = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76]
    assert [dickson_eval_fast(n, 1, -1) for n in range(10)] == expect
    assert dickson_eval_fast(5, 1, -1) == 11


def test_functional_equation_integer_points():
    # D_n(y + a/y, a) == y^n + (a/y)^n, checked with exact rationals
    rng = random.Random(17)
    for _ in range(25):
        y = Fraction(rng.randrange(1, 9), rng.randrange(1, 9))
        a = Fraction(rng.randrange(-8, 9), rng.randrange(1, 9))
        if a == 0:
            continue
        n = rng.randrange(0, 40)
        x = y + a / y
        assert dickson_eval_fast(n, x, a) == y**n + (a / y) ** n


def test_composition_semigroup():
    # D_m(D_n(x, a), a^n) = D_{mn}(x, a)
    a = 2
    for m, n in [(2, 3), (3, 2), (4, 3), (5, 2)]:
        outer = dickson_first(m, a**n)
        inner = dickson_first(n, a)
        assert poly_compose(outer, inner).coeffs == dickson_first(m * n, a).coeffs


def test_degree_cap_enforced():
    dickson_first(N_POLY_MAX, 1)
    with pytest.raises(BoundExceededError):
        dickson_first(N_POLY_MAX + 1, 1)
    big = 1 << 62
    with pytest.raises(BoundExceededError):
        dickson_eval_fast(big + 1, GF(5).one(), GF(5).one())


def test_eval_fast_huge_degree_prime_field():
    F = GF(101)
    x, a = F.from_int(3), F.from_int(2)
    # oracle: walk the two-term recurrence all the way to n = 10^5
    n = 10**5
    u, v = F.from_int(2), x  # D_0, D_1
    for _ in range(n - 1):
        u, v = v, x * v - a * u
    assert dickson_eval_fast(n, x, a) == v
    # three methods agree up to the polynomial-degree cap
    for m in (0, 1, 2, 3, 50, 511, 512):
        assert dickson_eval_fast(m, x, a) == poly_eval(dickson_first(m, a), x)


# ------------------------------------------------------------- kind (k + 1)

def test_second_kind_table():
    # k = 1: E_0 = 1, E_1 = x, E_2 = x^2 - a, E_3 = x^3 - 2ax (hand expansion)
    seq = dickson_kind_sequence(3, 1, 1)
    assert [p.coeffs for p in seq] == [(1,), (0, 1), (-1, 0, 1), (0, -2, 0, 1)]


def test_kind_zero_reduces_to_first():
    for n in range(12):
        assert dickson_kind(n, 0, 3).coeffs == dickson_first(n, 3).coeffs


def test_kind_closed_equals_recurrence():
    for k in range(4):
        for a in (1, -2):
            for n in range(18):
                assert dickson_kind_closed(n, k, a).coeffs == dickson_kind(n, k, a).coeffs


def test_kind_functional_frozen_value():
    # D_{2,1}(y + a/y, a) at y = 2, a = 1: x = 5/2, E_2(5/2) = 25/4 - 1
    lhs = poly_eval(dickson_kind(2, 1, Fraction(1)), Fraction(5, 2))
    assert lhs == Fraction(21, 4)
    assert kind_k_functional_rhs(2, 1, Fraction(2), Fraction(1)) == Fraction(21, 4)


def test_kind_functional_random_rational_points():
    rng = random.Random(23)
    for _ in range(20):
        k = rng.randrange(0, 4)
        y = Fraction(rng.randrange(1, 7), rng.randrange(1, 7))
        a = Fraction(rng.randrange(1, 7), rng.randrange(1, 7))
        if y * y == a:
            continue
        n = rng.randrange(0, 30)
        x = y + a / y
        lhs = poly_eval(dickson_kind(n, k, a), x)
        assert lhs == kind_k_functional_rhs(n, k, y, a)


def test_kind_functional_rejects_degenerate_inputs():
    with pytest.raises(ValueError):
        kind_k_functional_rhs(3, 1, Fraction(0), Fraction(1))
    with pytest.raises(ValueError):
        kind_k_functional_rhs(3, 1, Fraction(2), Fraction(0))
    with pytest.raises(ValueError):
        kind_k_functional_rhs(3, 1, Fraction(2), Fraction(4))


def test_kind_constraint_finite_field():
    F = GF(3)
    a = F.one()
    dickson_kind_eval_fast(5, 2, a, a)
    with pytest.raises(ValueError):
        dickson_kind_eval_fast(5, 3, a, a)
    # no constraint in characteristic zero
    dickson_kind(5, 7, 1)


def test_kind_eval_fast_matches_polynomial():
    F = GF(31)
    for k in range(4):
        for nv in (0, 1, 2, 9, 30):
            for xv in (0, 1, 5):
                x, a = F.from_int(xv), F.from_int(7)
                direct = poly_eval(dickson_kind(nv, k, a), x)
                assert dickson_kind_eval_fast(nv, k, x, a) == direct


def test_genfun_matches_sequence():
    from dickson.poly import series_from_rational

    for k in range(3):
        a = Fraction(2)
        x = Fraction(3)
        num, den = dickson_genfun(k, x, a)
        s = series_from_rational(num, den, 20)
        for n in range(20):
            expect = poly_eval(dickson_kind(n, k, a), x)
            assert s.coefficient(n) == expect


def test_dickson_spec_wrapper():
    spec = DicksonSpec(n=4, k=0, a=1)
    assert spec.polynomial().coeffs == (2, 0, -4, 0, 1)


# ---------------------------------------------------------------- chebyshev

def test_chebyshev_values():
    assert chebyshev_T(0).coeffs == (1,)
    assert chebyshev_T(1).coeffs == (0, 1)
    assert chebyshev_T(2).coeffs == (-1, 0, 2)
    assert chebyshev_T(3).coeffs == (0, -3, 0, 4)
    assert chebyshev_T(4).coeffs == (1, 0, -8, 0, 8)


def test_chebyshev_dickson_bridge():
    # D_n(2ax, a^2) == 2 a^n T_n(x) as polynomials in x over Q
    for a in (Fraction(2), Fraction(-3), Fraction(1, 2)):
        for n in range(10):
            dn = dickson_first(n, a * a)
            # evaluate both sides on enough points to pin the polynomial
            for xv in range(n + 1):
                x = Fraction(xv)
                lhs = poly_eval(dn, 2 * a * x)
                rhs = 2 * a**n * poly_eval(chebyshev_T(n, QQ), x)
                assert lhs == rhs


# ------------------------------------------------------ waring and carlitz

def test_waring_two_variable_frozen():
    # roots 2 and 3: e1 = 5, e2 = 6, s_2 = 4 + 9 = 13
    assert waring_power_sum(2, (-5, 6)) == 13
    assert waring_power_sum(1, (-5, 6)) == 5
    assert waring_power_sum(3, (-5, 6)) == 35


def test_waring_matches_direct_power_sums():
    rng = random.Random(29)
    for _ in range(20):
        roots = [rng.randrange(-5, 6) for _ in range(rng.randrange(2, 5))]
        t = len(roots)
        es = [elementary_symmetric(tuple(roots), i) for i in range(1, t + 1)]
        v = tuple((-1) ** i * es[i - 1] for i in range(1, t + 1))
        for k in range(1, 9):
            direct = sum(r**k for r in roots)
            assert waring_power_sum(k, v) == direct


def test_carlitz_frozen_rational_point():
    # roots (1, 2, -2/3): e1 = 7/3, e2 = 0, e3 = -4/3
    e1, e2, e3 = Fraction(7, 3), Fraction(0), Fraction(-4, 3)
    val = carlitz_power_sum(3, e1, e2, e3)
    assert val == Fraction(235, 27)
    assert val == e1**3 + 3 * e3  # e2 = 0 collapse at n = 3
    assert val == 1 + 8 + Fraction(-2, 3) ** 3


def test_carlitz_matches_newton_oracle():
    rng = random.Random(31)
    for _ in range(15):
        roots = [Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)) for _ in range(3)]
        e1 = sum(roots)
        e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]
        e3 = roots[0] * roots[1] * roots[2]
        # Newton oracle: p_0 = 3, p_1 = e1, p_2 = e1^2 - 2 e2, then the
        # three-term recurrence
        p = [Fraction(3), e1, e1 * e1 - 2 * e2]
        for n in range(3, 12):
            p.append(e1 * p[n - 1] - e2 * p[n - 2] + e3 * p[n - 3])
        for n in range(2, 12):
            assert carlitz_power_sum(n, e1, e2, e3) == p[n]
            assert p[n] == sum(r**n for r in roots)


# ------------------------------------------------------------- multivariate

def test_multivariate_base_cases():
    data = SymmetricData.from_roots((1, 2, 3))
    assert data.t == 2
    assert multivariate_dickson(0, data) == 3  # t + 1 quantities
    assert multivariate_dickson(1, data) == 6
    assert multivariate_dickson(2, data) == 1 + 4 + 9


def test_multivariate_matches_power_sum_oracle():
    rng = random.Random(37)
    for t in range(1, 5):
        for _ in range(6):
            u = tuple(Fraction(rng.randrange(-4, 5)) for _ in range(t + 1))
            if elementary_symmetric(u, t + 1) == 0:
                continue  # fixed product must be nonzero
            data = SymmetricData.from_roots(u)
            for n in range(0, 15):
                assert multivariate_dickson(n, data) == multivariate_oracle(n, u, 1)


def test_multivariate_oracle_elementary():
    # e_2 of the squares of (1, 2, 3): e_2(1, 4, 9) = 4 + 9 + 36
    assert multivariate_oracle(2, (1, 2, 3), 2) == 49


def test_multivariate_t1_reduces_to_classical():
    data = SymmetricData(t=1, xs=(Fraction(5),), a=Fraction(3))
    for n in range(12):
        assert multivariate_dickson(n, data) == dickson_eval_fast(n, Fraction(5), Fraction(3))


def test_multivariate_genfun():
    from dickson.poly import series_from_rational

    u = (Fraction(1), Fraction(2), Fraction(3))
    data = SymmetricData.from_roots(u)
    num, den = multivariate_genfun(data)
    s = series_from_rational(num, den, 16)
    for n in range(16):
        assert s.coefficient(n) == multivariate_dickson(n, data)


# -------------------------------------------------------------- suite smoke

def test_verify_suite_smoke():
    report = run_suite("functional", seed=5)
    assert report.failures == 0
    assert report.trials > 0
