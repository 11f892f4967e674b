"""Legendre symbols, Brewer sums, permutation behavior."""

import math

import pytest

from dickson.families import dickson_eval_fast
from dickson.numtheory import (
    PERMCHECK_SIZE_CAP,
    brewer_sum,
    is_permutation,
    legendre_symbol,
    monomial_permutation,
)
from dickson.rings import GF, BoundExceededError


def test_legendre_known_values():
    # squares mod 7 are {1, 2, 4}
    assert legendre_symbol(1, 7) == 1
    assert legendre_symbol(2, 7) == 1
    assert legendre_symbol(3, 7) == -1
    assert legendre_symbol(4, 7) == 1
    assert legendre_symbol(5, 7) == -1
    assert legendre_symbol(6, 7) == -1
    assert legendre_symbol(0, 7) == 0
    assert legendre_symbol(7, 7) == 0


def test_legendre_exhaustive_square_oracle():
    for p in (3, 5, 11, 13, 31):
        squares = {(x * x) % p for x in range(1, p)}
        for a in range(p):
            expect = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre_symbol(a, p) == expect


def test_legendre_multiplicativity():
    p = 23
    for a in range(1, p):
        for b in range(1, p):
            assert legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p)


def test_legendre_accepts_field_elements():
    F = GF(11)
    assert legendre_symbol(F.from_int(3), 11) == legendre_symbol(3, 11)


def test_legendre_rejects_bad_modulus():
    with pytest.raises(ValueError):
        legendre_symbol(1, 2)
    with pytest.raises(ValueError):
        legendre_symbol(1, 15)
    with pytest.raises(BoundExceededError):
        legendre_symbol(1, 1048583)


def test_brewer_frozen_values():
    # hand enumeration at p = 3, a = 1: D_2(x, 1) = x^2 - 2 takes values
    # 1, 2, 2 at x = 0, 1, 2; chi values 1, -1, -1 sum to -1
    assert brewer_sum(3, 1, 1) == -1
    # hand enumeration at p = 7, a = 3 gives -1 as well
    assert brewer_sum(7, 1, 3) == -1


def test_brewer_against_direct_enumeration():
    for p in (5, 7, 11, 13):
        F = GF(p)
        for n in range(0, 5):
            for av in range(p):
                a = F.from_int(av)
                direct = 0
                for xv in range(p):
                    val = dickson_eval_fast(n + 1, F.from_int(xv), a)
                    direct += legendre_symbol(val.val, p)
                assert brewer_sum(p, n, av) == direct


def test_brewer_lambda_zero_vanishes():
    # Lambda_0 sums chi(D_1) = chi(x) over all x, which is 0 for any a
    for p in (3, 5, 7, 11, 97):
        assert brewer_sum(p, 0, 4 % p) == 0


def test_permutation_verdicts_small_field():
    v = is_permutation(3, 1, 7)
    assert not v.is_permutation
    assert v.gcd_value == math.gcd(3, 48)
    assert v.agreement
    v = is_permutation(5, 1, 7)
    assert v.is_permutation
    assert v.gcd_value == 1
    assert v.agreement


def test_permutation_exhaustive_image_oracle():
    # independently recompute the image size for every (n, a) at p = 11
    p = 11
    F = GF(p)
    for n in range(1, 14):
        for av in range(1, p):
            a = F.from_int(av)
            image = {dickson_eval_fast(n, F.from_int(x), a).val for x in range(p)}
            verdict = is_permutation(n, a, p)
            assert verdict.is_permutation == (len(image) == p)
            assert verdict.agreement


def test_permutation_extension_field():
    v = is_permutation(5, GF(8).one(), 8)
    assert v.is_permutation
    assert v.gcd_value == math.gcd(5, 63)
    assert v.agreement


def test_permutation_rejects_zero_parameter():
    with pytest.raises(ValueError):
        is_permutation(3, GF(7).zero(), 7)
    with pytest.raises(ValueError):
        is_permutation(3, 0, 7)


def test_monomial_permutation():
    # x^n permutes GF(q) iff gcd(n, q - 1) == 1
    for q in (5, 7, 9, 11):
        for n in range(1, 12):
            v = monomial_permutation(n, q)
            assert v.monomial
            assert v.is_permutation == (math.gcd(n, q - 1) == 1)
            assert v.agreement


def test_permcheck_size_cap():
    with pytest.raises(BoundExceededError):
        is_permutation(3, 1, PERMCHECK_SIZE_CAP * 2)
