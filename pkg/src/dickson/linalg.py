"""Small exact matrices and trace-of-power identities.

The only sizes needed are 2x2 and 3x3.  Entries are ring values
(int, Fraction, GF(p) or GF(p^m) elements); arithmetic is exact.

Tr(M^n) for a 2x2 matrix with trace t and determinant d is the integer
combination

    sum_{k=0..n//2} (-1)^k * c(n,k) * t^(n-2k) * d^k,
    c(n,k) = binom(n-k, k) + binom(n-k-1, k-1)

where c(n,k) equals (n/(n-k)) * binom(n-k, k); the two-binomial form
avoids the rational detour so the same coefficients are valid verbatim
in characteristic p.  Some printed statements of this identity orient
the binomial as binom(k, n-k), which vanishes for k < n/2; see
ERRATA.md.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .rings import Ring, RingMismatchError, RingValue, ring_of


class SmallMatrix:
    """Immutable square matrix of dimension 2 or 3 over one ring."""

    __slots__ = ("ring", "dim", "rows")

    def __init__(self, rows: Sequence[Sequence[RingValue]], ring: Ring | None = None):
        rows = tuple(tuple(r) for r in rows)
        dim = len(rows)
        if dim not in (2, 3) or any(len(r) != dim for r in rows):
            raise ValueError("matrices must be square of dimension 2 or 3")
        if ring is None:
            ring = ring_of(rows[0][0])
        for r in rows:
            for x in r:
                if ring_of(x) != ring:
                    raise RingMismatchError(f"entry {x!r} is not in {ring!r}")
        self.ring = ring
        self.dim = dim
        self.rows = rows

    @classmethod
    def identity(cls, ring: Ring, dim: int) -> "SmallMatrix":
        z, o = ring.zero(), ring.one()
        return cls([[o if i == j else z for j in range(dim)] for i in range(dim)], ring)

    def trace(self) -> RingValue:
        t = self.rows[0][0]
        for i in range(1, self.dim):
            t = t + self.rows[i][i]
        return t

    def det(self) -> RingValue:
        r = self.rows
        if self.dim == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def __mul__(self, other: "SmallMatrix") -> "SmallMatrix":
        return mat_mul(self, other)

    def __pow__(self, n: int) -> "SmallMatrix":
        return mat_pow(self, n)

    def __eq__(self, other):
        if not isinstance(other, SmallMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.dim, self.rows))

    def __repr__(self):
        return f"SmallMatrix({[list(r) for r in self.rows]!r})"


def mat_mul(a: SmallMatrix, b: SmallMatrix) -> SmallMatrix:
    """Exact matrix product; dimensions and rings must match."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    n = a.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            s = a.rows[i][0] * b.rows[0][j]
            for k in range(1, n):
                s = s + a.rows[i][k] * b.rows[k][j]
            row.append(s)
        rows.append(row)
    return SmallMatrix(rows, a.ring)


def mat_pow(m: SmallMatrix, n: int) -> SmallMatrix:
    """M^n by binary powering, n >= 0 (M^0 = I)."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    result = SmallMatrix.identity(m.ring, m.dim)
    base = m
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


@dataclass(frozen=True)
class CharData2:
    """Trace and determinant of a 2x2 matrix (characteristic polynomial
    z^2 - t z + d)."""

    t: RingValue
    d: RingValue


@dataclass(frozen=True)
class CharData3:
    """Elementary symmetric data of a 3x3 matrix (characteristic
    polynomial z^3 - e1 z^2 + e2 z - e3)."""

    e1: RingValue
    e2: RingValue
    e3: RingValue


def char_data(m: SmallMatrix) -> CharData2 | CharData3:
    """Characteristic-polynomial coefficients of a 2x2 or 3x3 matrix."""
    r = m.rows
    if m.dim == 2:
        return CharData2(t=m.trace(), d=m.det())
    e1 = m.trace()
    e2 = (
        (r[0][0] * r[1][1] - r[0][1] * r[1][0])
        + (r[0][0] * r[2][2] - r[0][2] * r[2][0])
        + (r[1][1] * r[2][2] - r[1][2] * r[2][1])
    )
    return CharData3(e1=e1, e2=e2, e3=m.det())


def trace_power_coefficient(n: int, k: int) -> int:
    """Integer coefficient c(n,k) = (n/(n-k)) * binom(n-k, k), assembled
    without rational arithmetic as binom(n-k,k) + binom(n-k-1,k-1)."""
    if k == 0:
        return 1
    return comb(n - k, k) + comb(n - k - 1, k - 1)


def trace_power_formula(t: RingValue, d: RingValue, n: int) -> RingValue:
    """Tr(M^n) from the 2x2 characteristic data (t, d).

    n = 0 returns the ring image of the dimension (Tr I = 2).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    ring = ring_of(t)
    if ring_of(d) != ring:
        raise RingMismatchError("t and d must live in one ring")
    if n == 0:
        return ring.from_int(2)
    total = ring.zero()
    for k in range(n // 2 + 1):
        term = trace_power_coefficient(n, k) * ring.pow(t, n - 2 * k) * ring.pow(d, k)
        total = total - term if k & 1 else total + term
    return total


def trace_sequence_3x3(e: CharData3, n_max: int) -> list[RingValue]:
    """[Tr(M^0), ..., Tr(M^n_max)] for a 3x3 matrix with symmetric data e.

    Newton's recurrence: p_n = e1 p_{n-1} - e2 p_{n-2} + e3 p_{n-3},
    seeded by p_0 = 3, p_1 = e1, p_2 = e1^2 - 2 e2.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    ring = ring_of(e.e1)
    if ring_of(e.e2) != ring or ring_of(e.e3) != ring:
        raise RingMismatchError("e1, e2, e3 must live in one ring")
    seq = [ring.from_int(3), e.e1, e.e1 * e.e1 - 2 * e.e2]
    for n in range(3, n_max + 1):
        seq.append(e.e1 * seq[n - 1] - e.e2 * seq[n - 2] + e.e3 * seq[n - 3])
    return seq[: n_max + 1]
