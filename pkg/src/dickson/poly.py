"""Dense univariate polynomials over an exact ring, plus truncated series.

Coefficients are stored ascending by degree with no trailing zeros; the
zero polynomial has an empty coefficient tuple and degree -1.  All
arithmetic is exact in the coefficient ring.  Mixed-ring operands raise
RingMismatchError.

Series expansion of a rational function num(z)/den(z) with unit constant
denominator term is computed by the linear recurrence the denominator
induces on the coefficients; no symbolic second variable is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rings import Ring, RingMismatchError, RingValue


class Polynomial:
    """Immutable dense polynomial over a fixed ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs: Sequence[RingValue], ring: Ring):
        cs = []
        for c in coeffs:
            if ring.contains(c):
                cs.append(c)
            elif isinstance(c, int) and not isinstance(c, bool):
                cs.append(ring.from_int(c))
            else:
                raise RingMismatchError(f"coefficient {c!r} is not in {ring!r}")
        while cs and cs[-1] == ring.zero():
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls([], ring)

    @classmethod
    def constant(cls, c: RingValue, ring: Ring) -> "Polynomial":
        return cls([c], ring)

    @classmethod
    def x(cls, ring: Ring) -> "Polynomial":
        return cls([ring.zero(), ring.one()], ring)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> RingValue:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero()

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def _coerce_operand(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return Polynomial.constant(self.ring.from_int(other), self.ring)
        if self.ring.contains(other):
            return Polynomial.constant(other, self.ring)
        return None

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Polynomial(cs, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            if self.is_zero() or other.is_zero():
                return Polynomial.zero(self.ring)
            z = self.ring.zero()
            cs = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == z:
                    continue
                for j, b in enumerate(other.coeffs):
                    cs[i + j] = cs[i + j] + a * b
            return Polynomial(cs, self.ring)
        # ring-value (or plain int) scalar
        if not self.ring.contains(other):
            if not (isinstance(other, int) and not isinstance(other, bool)):
                return NotImplemented
            other = self.ring.from_int(other)
        return Polynomial([other * c for c in self.coeffs], self.ring)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __call__(self, x: RingValue) -> RingValue:
        return poly_eval(self, x)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Polynomial([self.ring.zero()] * k + list(self.coeffs), self.ring)

    def __repr__(self):
        return f"Polynomial({self.to_human()!r}, ring={self.ring!r})"

    def to_human(self, var: str = "x") -> str:
        return render_human(self, var)

    def to_latex(self, var: str = "x") -> str:
        return render_latex(self, var)


def poly_eval(p: Polynomial, x: RingValue) -> RingValue:
    """Horner evaluation; the point must live in the coefficient ring."""
    ring = p.ring
    if not ring.contains(x):
        raise RingMismatchError(f"{x!r} is not in {ring!r}")
    acc = ring.zero()
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_compose(p: Polynomial, q: Polynomial) -> Polynomial:
    """p(q(x)) by Horner on polynomials."""
    p._check(q)
    acc = Polynomial.zero(p.ring)
    for c in reversed(p.coeffs):
        acc = acc * q + Polynomial.constant(c, p.ring)
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    """Formal derivative (k * c_k picks up the integer k via the ring)."""
    return Polynomial([k * p.coeffs[k] for k in range(1, len(p.coeffs))], p.ring)


@dataclass(frozen=True)
class TruncatedSeries:
    """First `order` coefficients of a power series, stored exactly.

    Unlike Polynomial, trailing zeros are kept: len(coeffs) == order.
    """

    coeffs: tuple
    ring: Ring

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, k: int):
        return self.coeffs[k]


def series_from_rational(num: Polynomial, den: Polynomial, order: int) -> TruncatedSeries:
    """Truncated expansion of num(z)/den(z) around z = 0.

    The constant term of den must be a unit (any nonzero constant over a
    field, +-1 over the integers); the denominator then induces the
    linear recurrence

        c_i = (num_i - sum_{j=1..deg den} den_j * c_{i-j}) / den_0.
    """
    num._check(den)
    ring = num.ring
    if den.is_zero() or den.coefficient(0) == ring.zero():
        raise ZeroDivisionError("denominator constant term must be a unit")
    d0 = den.coefficient(0)
    if ring.is_field:
        d0_inv = ring.inv(d0)
    elif d0 == ring.one() or d0 == -ring.one():
        d0_inv = d0
    else:
        raise ValueError(f"denominator constant term {d0!r} is not a unit")
    cs = []
    for i in range(order):
        acc = num.coefficient(i)
        for j in range(1, min(i, den.degree) + 1):
            acc = acc - den.coefficient(j) * cs[i - j]
        cs.append(acc * d0_inv)
    return TruncatedSeries(tuple(cs), ring)


# ---------------------------------------------------------------------------
# rendering


def _scalar_strings(ring: Ring, c: RingValue) -> tuple[str, str, bool]:
    """(sign, magnitude-string, magnitude-is-one) for a nonzero coefficient."""
    s = ring.render(c)
    sign = "+"
    if s.startswith("-"):
        sign, s = "-", s[1:]
    if any(ch in s[1:] for ch in "+-"):
        s = f"({s})"  # composite coefficients (extension fields) need parens
    return sign, s, s == "1"


def render_human(p: Polynomial, var: str = "x") -> str:
    """Descending-degree text form, e.g. x^5 - 5*x^3 + 5*x."""
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coefficient(e)
        if c == p.ring.zero():
            continue
        sign, mag, is_one = _scalar_strings(p.ring, c)
        if e == 0:
            body = mag
        else:
            xp = var if e == 1 else f"{var}^{e}"
            body = xp if is_one else f"{mag}*{xp}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def render_latex(p: Polynomial, var: str = "x") -> str:
    """Descending-degree LaTeX form, e.g. x^{5}-5x^{3}+5x."""
    if p.is_zero():
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coefficient(e)
        if c == p.ring.zero():
            continue
        sign, mag, is_one = _scalar_strings(p.ring, c)
        if e == 0:
            body = mag
        else:
            xp = var if e == 1 else f"{var}^{{{e}}}"
            body = xp if is_one else f"{mag}{xp}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign}{body}")
    return "".join(parts)
