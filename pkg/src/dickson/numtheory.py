"""Character sums and permutation behaviour of Dickson polynomials over
finite fields.

Brewer sums are Lambda_n(a) = sum over x mod p of the Legendre symbol of
D_{n+1}(x, a).  The Legendre symbol itself goes through Euler's
criterion (the compiled kernel when built).

Permutation testing is empirical: the image of x -> D_n(x, a) is
enumerated exhaustively over the whole field.  The classical coprimality
criterion gcd(n, q^2 - 1) = 1 is computed alongside as a cross-check
only; the verdict records both and whether they agree, and the empirical
enumeration is always the primary answer.  a = 0 degenerates to the
monomial x^n, which obeys the different criterion gcd(n, q - 1) = 1 and
is handled by monomial_permutation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .families import dickson_eval_fast
from .rings import (
    BoundExceededError,
    FpElement,
    GF,
    PrimeField,
    is_prime,
)

PERMCHECK_SIZE_CAP = 1 << 16


def _check_odd_prime(p: int):
    if p == 2 or not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, got {p}")
    if p > 1 << 20:
        raise BoundExceededError(f"p = {p} exceeds the desk-scale cap 2**20")


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}; p must be an odd prime."""
    _check_odd_prime(p)
    if isinstance(a, FpElement):
        a = a.val
    return _kernels.ACTIVE.legendre(a, p)


def brewer_sum(p: int, n: int, a: int) -> int:
    """Lambda_n(a) = sum over x in GF(p) of (D_{n+1}(x, a) / p)."""
    _check_odd_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if isinstance(a, FpElement):
        a = a.val
    return _kernels.ACTIVE.brewer_sum(p, n, a)


@dataclass(frozen=True)
class PermutationVerdict:
    """Empirical permutation answer plus the coprimality cross-check."""

    n: int
    a: object
    q: int
    is_permutation: bool
    gcd_value: int
    agreement: bool
    monomial: bool = False


def _field_for_size(q: int):
    if q > PERMCHECK_SIZE_CAP:
        raise BoundExceededError(f"permutation checks are capped at q <= {PERMCHECK_SIZE_CAP}")
    return GF(q)


def is_permutation(n: int, a, q: int) -> PermutationVerdict:
    """Exhaustive permutation check of D_n(., a) on GF(q), a != 0.

    The verdict's gcd_value is gcd(n, q^2 - 1) and agreement records
    whether the empirical answer matches gcd_value == 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    field = _field_for_size(q)
    if isinstance(a, int):
        a = field.from_int(a)
    elif not field.contains(a):
        raise ValueError(f"parameter {a!r} does not live in {field!r}")
    if not a:
        raise ValueError("a = 0 is the monomial case; use monomial_permutation")
    if isinstance(field, PrimeField):
        empirical = bool(_kernels.ACTIVE.is_permutation_image(n, a.val, field.p))
    else:
        image = {dickson_eval_fast(n, x, a) for x in field.elements()}
        empirical = len(image) == q
    g = math.gcd(n, q * q - 1)
    return PermutationVerdict(
        n=n, a=a, q=q,
        is_permutation=empirical,
        gcd_value=g,
        agreement=empirical == (g == 1),
    )


def monomial_permutation(n: int, q: int) -> PermutationVerdict:
    """Exhaustive permutation check of the monomial x^n on GF(q)
    (the a = 0 degeneration); the cross-check here is gcd(n, q - 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    field = _field_for_size(q)
    if isinstance(field, PrimeField):
        p = field.p
        seen = bytearray(p)
        for x in range(p):
            seen[pow(x, n, p)] = 1
        empirical = all(seen)
    else:
        image = {x**n for x in field.elements()}
        empirical = len(image) == q
    g = math.gcd(n, q - 1)
    return PermutationVerdict(
        n=n, a=field.zero(), q=q,
        is_permutation=empirical,
        gcd_value=g,
        agreement=empirical == (g == 1),
        monomial=True,
    )
