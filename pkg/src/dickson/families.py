"""Dickson polynomial families and their power-sum relatives.

The first-kind family is defined by

    D_0 = 2,  D_1 = x,  D_{n+1} = x D_n - a D_{n-1},

and the kind-(k+1) family by the same recurrence from D_{0,k} = 2 - k,
D_{1,k} = x (k = 0 recovers the first kind).  Every D_{n,k} is
weighted-homogeneous: the coefficient of x^(n-2i) is an integer times
a^i, and that integer is

    binom(n-i, i) + (1 - k) * binom(n-i-1, i-1),

which equals ((n - k i)/(n - i)) * binom(n-i, i) without leaving Z, so
the same closed form is valid verbatim over GF(p).

Evaluation without constructing the polynomial goes through powers of
the companion matrix [[x, -a], [1, 0]]: Tr(M^n) = D_n(x, a), and
(D_{n,k}, D_{n-1,k}) = M^(n-1) (x, 2-k) for every kind.

Also here: Chebyshev T_n, the Waring power-sum formula in any number of
variables, its Carlitz three-variable form, and the multivariate Dickson
value D^(1)_n = power sum of n-th powers, computed by Newton's
recurrence from elementary symmetric data.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial, prod
from typing import Sequence

from . import _kernels
from .linalg import SmallMatrix, mat_pow
from .poly import Polynomial
from .rings import (
    BoundExceededError,
    PrimeField,
    Ring,
    RingMismatchError,
    RingValue,
    ZZ,
    ring_of,
)

N_POLY_MAX = 512
N_EVAL_MAX = 1 << 62


def _check_poly_degree(n: int):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > N_POLY_MAX:
        raise BoundExceededError(f"polynomial construction is capped at n <= {N_POLY_MAX}")


def _check_eval_degree(n: int):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > N_EVAL_MAX:
        raise BoundExceededError("evaluation is capped at n <= 2**62")


def _check_kind(k: int, ring: Ring):
    if k < 0:
        raise ValueError("kind parameter k must be nonnegative")
    if ring.characteristic and k >= ring.characteristic:
        raise ValueError(
            f"kind parameter k = {k} must satisfy 0 <= k < characteristic "
            f"{ring.characteristic}"
        )


@dataclass(frozen=True)
class DicksonSpec:
    """One polynomial in the family: degree n, kind offset k, parameter a."""

    n: int
    k: int
    a: RingValue

    def __post_init__(self):
        _check_poly_degree(self.n)
        _check_kind(self.k, ring_of(self.a))

    @property
    def ring(self) -> Ring:
        return ring_of(self.a)

    def polynomial(self) -> Polynomial:
        return dickson_kind(self.n, self.k, self.a)


def family_terms(n: int, k: int = 0) -> list[tuple[int, int, int]]:
    """Closed-form term data for D_{n,k}: (integer coefficient, power of a,
    power of x), descending in the power of x.  Zero coefficients are
    dropped.  n = 0 yields the single constant term 2 - k."""
    if n == 0:
        return [(2 - k, 0, 0)] if 2 - k else []
    terms = []
    for i in range(n // 2 + 1):
        c = comb(n - i, i) + ((1 - k) * comb(n - i - 1, i - 1) if i else 0)
        if i & 1:
            c = -c
        if c:
            terms.append((c, i, n - 2 * i))
    return terms


def dickson_kind_sequence(n_max: int, k: int, a: RingValue) -> list[Polynomial]:
    """[D_{0,k}, ..., D_{n_max,k}] built in one recurrence pass."""
    ring = ring_of(a)
    _check_poly_degree(n_max)
    _check_kind(k, ring)
    seq = [Polynomial.constant(ring.from_int(2 - k), ring)]
    if n_max == 0:
        return seq
    seq.append(Polynomial.x(ring))
    a_const = Polynomial.constant(a, ring)
    x = Polynomial.x(ring)
    for _ in range(n_max - 1):
        seq.append(x * seq[-1] - a_const * seq[-2])
    return seq


def _recurrence_family(n: int, k: int, a: RingValue) -> Polynomial:
    return dickson_kind_sequence(n, k, a)[-1]


def dickson_first(n: int, a: RingValue) -> Polynomial:
    """D_n(x, a) by the defining recurrence."""
    return _recurrence_family(n, 0, a)


def dickson_closed(n: int, a: RingValue) -> Polynomial:
    """D_n(x, a) assembled directly from the closed form."""
    return dickson_kind_closed(n, 0, a)


def dickson_kind(n: int, k: int, a: RingValue) -> Polynomial:
    """Kind-(k+1) polynomial D_{n,k}(x, a) by the defining recurrence."""
    return _recurrence_family(n, k, a)


def dickson_kind_closed(n: int, k: int, a: RingValue) -> Polynomial:
    """D_{n,k}(x, a) assembled from the closed form (independent of the
    recurrence path)."""
    ring = ring_of(a)
    _check_poly_degree(n)
    _check_kind(k, ring)
    coeffs = [ring.zero()] * (n + 1)
    for c, apow, xpow in family_terms(n, k):
        coeffs[xpow] = c * ring.pow(a, apow)
    return Polynomial(coeffs, ring)


def dickson_eval_fast(n: int, x: RingValue, a: RingValue) -> RingValue:
    """D_n(x, a) in O(log n) ring operations via Tr(M^n) for the
    companion matrix M = [[x, -a], [1, 0]].  Works for n up to 2**62."""
    _check_eval_degree(n)
    ring = ring_of(x)
    if ring_of(a) != ring:
        raise RingMismatchError("x and a must live in one ring")
    if n == 0:
        return ring.from_int(2)
    if isinstance(ring, PrimeField):
        return ring.from_int(_kernels.ACTIVE.dickson_first_eval(n, x.val, a.val, ring.p))
    m = SmallMatrix([[x, -a], [ring.one(), ring.zero()]], ring)
    return mat_pow(m, n).trace()


def dickson_kind_eval_fast(n: int, k: int, x: RingValue, a: RingValue) -> RingValue:
    """D_{n,k}(x, a) in O(log n) ring operations via the companion-matrix
    vector (D_{m,k}, D_{m-1,k})."""
    _check_eval_degree(n)
    ring = ring_of(x)
    if ring_of(a) != ring:
        raise RingMismatchError("x and a must live in one ring")
    _check_kind(k, ring)
    if n == 0:
        return ring.from_int(2 - k)
    if isinstance(ring, PrimeField):
        return ring.from_int(_kernels.ACTIVE.dickson_kind_eval(n, k, x.val, a.val, ring.p))
    m = mat_pow(SmallMatrix([[x, -a], [ring.one(), ring.zero()]], ring), n - 1)
    return m.rows[0][0] * x + m.rows[0][1] * ring.from_int(2 - k)


def kind_k_functional_rhs(n: int, k: int, y: RingValue, a: RingValue) -> RingValue:
    """Right side of the kind-(k+1) functional equation at x = y + a/y:

        (y^(2n) + a^n)/y^n + (k a / y^n) (y^(2n) - a^(n-1) y^2)/(y^2 - a)

    Requires y != 0, y^2 != a, a != 0.  The n = 0 instance evaluates to
    2 - k as it should.
    """
    ring = ring_of(y)
    if ring_of(a) != ring:
        raise RingMismatchError("y and a must live in one ring")
    _check_kind(k, ring)
    if n < 0:
        raise ValueError("n must be nonnegative")
    zero = ring.zero()
    y2 = y * y
    if y == zero or a == zero or y2 == a:
        raise ValueError("functional form needs y != 0, a != 0, y^2 != a")
    yn = ring.pow(y, n)
    y2n = yn * yn
    an = ring.pow(a, n)
    anm1 = ring.pow(a, n - 1) if n >= 1 else ring.inv(a)
    first = ring.div(y2n + an, yn)
    second = ring.div(ring.from_int(k) * a * (y2n - anm1 * y2), yn * (y2 - a))
    return first + second


def dickson_genfun(k: int, x: RingValue, a: RingValue) -> tuple[Polynomial, Polynomial]:
    """Numerator and denominator in z of sum_n D_{n,k}(x,a) z^n:

        ((2 - k) + (k - 1) x z) / (1 - x z + a z^2).
    """
    ring = ring_of(x)
    if ring_of(a) != ring:
        raise RingMismatchError("x and a must live in one ring")
    num = Polynomial([ring.from_int(2 - k), (k - 1) * x], ring)
    den = Polynomial([ring.one(), -x, a], ring)
    return num, den


def chebyshev_T(n: int, ring: Ring = ZZ) -> Polynomial:
    """Chebyshev polynomial of the first kind: T_0 = 1, T_1 = x,
    T_{n+1} = 2 x T_n - T_{n-1}."""
    _check_poly_degree(n)
    prev = Polynomial.constant(ring.one(), ring)
    if n == 0:
        return prev
    cur = Polynomial.x(ring)
    two_x = Polynomial([ring.zero(), ring.from_int(2)], ring)
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


# ---------------------------------------------------------------------------
# Waring / Carlitz power sums


def _weighted_compositions(weight: int, nvars: int):
    # all (r_1, ..., r_nvars) >= 0 with sum of i * r_i == weight
    if nvars == 0:
        if weight == 0:
            yield ()
        return
    for r in range(weight // nvars + 1):
        for rest in _weighted_compositions(weight - nvars * r, nvars - 1):
            yield rest + (r,)


def _power_sum_coefficient(r: Sequence[int]) -> int:
    """k * (m-1)! / prod(r_i!) with m = sum(r), k = sum(i*r_i), assembled
    as the integer sum over slots of i * multinomial(m-1; ..., r_i-1, ...)."""
    m = sum(r)
    base = factorial(m - 1)
    denom = prod(factorial(ri) for ri in r)
    total = 0
    for i, ri in enumerate(r, start=1):
        if ri:
            num = base * ri
            assert num % denom == 0
            total += i * (num // denom)
    return total


def waring_power_sum(k: int, v: Sequence[RingValue]) -> RingValue:
    """Power sum s_k of the roots of x^n + v_1 x^(n-1) + ... + v_n from
    the coefficients alone:

        s_k = k * sum over (r_i) with sum(i r_i) = k of
              (-1)^(r_1+...+r_n) ((r_1+...+r_n - 1)! / (r_1! ... r_n!))
              v_1^{r_1} ... v_n^{r_n}.

    Every term's rational prefactor is assembled as an exact integer.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not v:
        raise ValueError("need at least one coefficient")
    ring = ring_of(v[0])
    for c in v[1:]:
        if ring_of(c) != ring:
            raise RingMismatchError("coefficients must live in one ring")
    total = ring.zero()
    for r in _weighted_compositions(k, len(v)):
        c = _power_sum_coefficient(r)
        if sum(r) & 1:
            c = -c
        term = ring.from_int(c)
        for vi, ri in zip(v, r):
            if ri:
                term = term * ring.pow(vi, ri)
        total = total + term
    return total


def carlitz_power_sum(n: int, e1: RingValue, e2: RingValue, e3: RingValue) -> RingValue:
    """x^n + y^n + z^n from the elementary symmetric values
    (e1, e2, e3) = (x+y+z, xy+yz+zx, xyz):

        sum over i + 2j + 3k = n of
        (-1)^j (n/(i+j+k)) ((i+j+k)!/(i! j! k!)) e1^i e2^j e3^k,

    with the prefactor assembled as an exact integer.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ring = ring_of(e1)
    if ring_of(e2) != ring or ring_of(e3) != ring:
        raise RingMismatchError("e1, e2, e3 must live in one ring")
    total = ring.zero()
    for k in range(n // 3 + 1):
        for j in range((n - 3 * k) // 2 + 1):
            i = n - 2 * j - 3 * k
            c = _power_sum_coefficient((i, j, k))
            if j & 1:
                c = -c
            term = ring.from_int(c) * ring.pow(e1, i) * ring.pow(e2, j) * ring.pow(e3, k)
            total = total + term
    return total


# ---------------------------------------------------------------------------
# multivariate family


@dataclass(frozen=True)
class SymmetricData:
    """Elementary symmetric values (x_1, ..., x_t) of t+1 quantities,
    together with their product a = e_{t+1}."""

    t: int
    xs: tuple
    a: RingValue

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be at least 1")
        if len(self.xs) != self.t:
            raise ValueError(f"expected {self.t} symmetric values, got {len(self.xs)}")
        ring = ring_of(self.a)
        for x in self.xs:
            if ring_of(x) != ring:
                raise RingMismatchError("symmetric values must live in one ring")

    @property
    def ring(self) -> Ring:
        return ring_of(self.a)

    @classmethod
    def from_roots(cls, u: Sequence[RingValue]) -> "SymmetricData":
        t = len(u) - 1
        if t < 1:
            raise ValueError("need at least two quantities")
        xs = tuple(elementary_symmetric(u, i) for i in range(1, t + 1))
        return cls(t=t, xs=xs, a=elementary_symmetric(u, t + 1))


def elementary_symmetric(u: Sequence[RingValue], i: int) -> RingValue:
    """e_i(u_1, ..., u_r) by direct expansion (desk scale)."""
    ring = ring_of(u[0])
    if i == 0:
        return ring.one()
    if i > len(u):
        return ring.zero()
    total = ring.zero()
    for subset in combinations(u, i):
        term = subset[0]
        for x in subset[1:]:
            term = term * x
        total = total + term
    return total


def multivariate_dickson(n: int, data: SymmetricData) -> RingValue:
    """D^(1)_n: the power sum u_1^n + ... + u_{t+1}^n computed from the
    symmetric data by Newton's recurrence.  D^(1)_0 = t + 1, and for
    0 < j <= t

        D_j = sum_{r=1..j} (-1)^(r-1) x_r D_{j-r} + (-1)^j (t+1-j) x_j,

    then for m > t

        D_m = sum_{r=1..t} (-1)^(r-1) x_r D_{m-r} + (-1)^t a D_{m-t-1}.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    ring = data.ring
    t, xs, a = data.t, data.xs, data.a
    p = [ring.from_int(t + 1)]
    for j in range(1, min(n, t) + 1):
        acc = ring.zero()
        for r in range(1, j + 1):
            term = xs[r - 1] * p[j - r]
            acc = acc - term if (r - 1) & 1 else acc + term
        tail = (t + 1 - j) * xs[j - 1]
        acc = acc + tail if j % 2 == 0 else acc - tail
        p.append(acc)
    for m in range(t + 1, n + 1):
        acc = ring.zero()
        for r in range(1, t + 1):
            term = xs[r - 1] * p[m - r]
            acc = acc - term if (r - 1) & 1 else acc + term
        tail = a * p[m - t - 1]
        acc = acc + tail if t % 2 == 0 else acc - tail
        p.append(acc)
    return p[n]


def multivariate_oracle(n: int, u: Sequence[RingValue], i: int) -> RingValue:
    """Independent oracle: D^(i)_n = e_i(u_1^n, ..., u_r^n) by direct
    symmetric-function expansion."""
    powers = [ring_of(x).pow(x, n) for x in u]
    return elementary_symmetric(powers, i)


def multivariate_genfun(data: SymmetricData) -> tuple[Polynomial, Polynomial]:
    """Numerator and denominator in z of sum_n D^(1)_n z^n:

        sum_{i=0..t} (t+1-i)(-1)^i x_i z^i
        over
        sum_{i=0..t+1} (-1)^i x_i z^i,       x_0 = 1, x_{t+1} = a.
    """
    ring = data.ring
    xs = (ring.one(),) + data.xs + (data.a,)
    num = []
    den = []
    for i in range(data.t + 2):
        sign = -1 if i & 1 else 1
        den.append(sign * xs[i])
        if i <= data.t:
            num.append((sign * (data.t + 1 - i)) * xs[i])
    return Polynomial(num, ring), Polynomial(den, ring)
