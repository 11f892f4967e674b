"""Exact coefficient domains: Z, Q, GF(p), and GF(p^m).

Representation invariants:

- Integers are plain Python ints (arbitrary precision).
- Rationals are fractions.Fraction values: always reduced, denominator
  positive, zero canonicalized to 0/1.
- GF(p) elements carry the least nonnegative residue; p is certified
  prime by trial division at construction.
- GF(p^m) elements are coefficient tuples of length m (ascending degree)
  modulo a monic irreducible modulus.  The default modulus is the first
  irreducible in the deterministic enumeration order of monic degree-m
  polynomials (coefficient tuple read as a base-p integer, constant
  coefficient least significant), so construction is reproducible.
- Field sizes are capped at q <= 2**20; construction beyond that raises
  BoundExceededError.

Ring objects (ZZ, QQ, PrimeField, ExtensionField) provide zero/one,
integer embedding, inversion, powering, parsing, and rendering; element
arithmetic itself goes through ordinary operators so that generic code
over "ring values" works uniformly on int, Fraction, FpElement and
FqElement.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from typing import Iterator, Union

FIELD_SIZE_CAP = 1 << 20


class RingMismatchError(ValueError):
    """Mixed operands from different rings."""


class BoundExceededError(ValueError):
    """A desk-scale size cap was exceeded."""


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the field-size cap.

    >>> [k for k in range(14) if is_prime(k)]
    [2, 3, 5, 7, 11, 13]
    """
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def rational_normalize(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator.

    >>> rational_normalize(4, 6)
    Fraction(2, 3)
    >>> rational_normalize(-1, -2)
    Fraction(1, 2)
    >>> rational_normalize(0, 5)
    Fraction(0, 1)
    """
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), used only for modulus search and reduction


def _poly_rem(f: list[int], g: tuple[int, ...], p: int) -> list[int]:
    # remainder of f by monic g, coefficients ascending
    r = list(f)
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            for j in range(dg + 1):
                r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
    del r[dg:]
    return r


def _monic_polys(p: int, deg: int) -> Iterator[tuple[int, ...]]:
    # enumeration order: coefficient tuple read as a base-p integer,
    # constant coefficient least significant
    for value in range(p**deg):
        coeffs = []
        v = value
        for _ in range(deg):
            coeffs.append(v % p)
            v //= p
        yield tuple(coeffs) + (1,)


def _poly_is_irreducible(f: tuple[int, ...], p: int) -> bool:
    deg = len(f) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not any(_poly_rem(list(f), g, p)):
                return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m over GF(p), ascending coefficients.

    The enumeration order is deterministic (see module docstring), so
    repeated calls always return the same modulus.

    >>> find_irreducible(2, 2)
    (1, 1, 1)
    >>> find_irreducible(2, 3)
    (1, 1, 0, 1)
    >>> find_irreducible(7, 1)
    (0, 1)
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("degree must be positive")
    if p**m > FIELD_SIZE_CAP:
        raise BoundExceededError(f"field size {p}^{m} exceeds {FIELD_SIZE_CAP}")
    for f in _monic_polys(p, m):
        if _poly_is_irreducible(f, p):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


# ---------------------------------------------------------------------------
# ring descriptors


class Ring:
    """Shared surface for coefficient domains."""

    is_field = False
    characteristic = 0

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return x * self.inv(y)

    def pow(self, x, e: int):
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return x**e

    def parse(self, text: str):
        """Parse an integer or num/den literal into this ring."""
        frac = Fraction(text)
        if frac.denominator == 1:
            return self.from_int(frac.numerator)
        return self.div(self.from_int(frac.numerator), self.from_int(frac.denominator))

    def render(self, x) -> str:
        return str(x)

    def random_element(self, rng, nonzero: bool = False):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    @property
    def order(self) -> int | None:
        return None


class IntegerRing(Ring):
    name = "int"

    def from_int(self, n: int) -> int:
        return n

    def inv(self, x: int) -> int:
        if x in (1, -1):
            return x
        raise ZeroDivisionError(f"{x} is not a unit in Z")

    def div(self, x: int, y: int) -> int:
        q, r = divmod(x, y)
        if r:
            raise ValueError(f"{x} is not divisible by {y} in Z")
        return q

    def parse(self, text: str) -> int:
        frac = Fraction(text)
        if frac.denominator != 1:
            raise ValueError(f"{text!r} is not an integer")
        return frac.numerator

    def random_element(self, rng, nonzero: bool = False) -> int:
        while True:
            x = rng.randint(-9, 9)
            if x or not nonzero:
                return x

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("IntegerRing")

    def __repr__(self):
        return "ZZ"


class RationalField(Ring):
    name = "rat"
    is_field = True

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def inv(self, x: Fraction) -> Fraction:
        return 1 / Fraction(x)

    def random_element(self, rng, nonzero: bool = False) -> Fraction:
        while True:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if x or not nonzero:
                return x

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalField()


class FpElement:
    """Residue in GF(p), stored as the least nonnegative representative."""

    __slots__ = ("val", "field")

    def __init__(self, val: int, field: "PrimeField"):
        self.val = val % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field is not self.field and other.field != self.field:
                raise RingMismatchError(f"mixed fields {self.field} and {other.field}")
            return other.val
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.field.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val + v, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val - v, self.field)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(v - self.val, self.field)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(self.val * v, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.val, self.field)

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        return FpElement(pow(self.val, e, self.field.p), self.field)

    def inv(self) -> "FpElement":
        if self.val == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        return FpElement(pow(self.val, self.field.p - 2, self.field.p), self.field)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * FpElement(v, self.field).inv()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpElement(v, self.field) * self.inv()

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field == other.field and self.val == other.val
        if isinstance(other, int) and not isinstance(other, bool):
            return self.val == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val} (mod {self.field.p})"


class PrimeField(Ring):
    """GF(p) for prime p <= 2**20."""

    name = "fp"
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p > FIELD_SIZE_CAP:
            raise BoundExceededError(f"field size {p} exceeds {FIELD_SIZE_CAP}")
        self.p = p
        self.characteristic = p

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self)

    def inv(self, x: FpElement) -> FpElement:
        return x.inv()

    def pow(self, x: FpElement, e: int) -> FpElement:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return x**e

    def elements(self) -> Iterator[FpElement]:
        for v in range(self.p):
            yield FpElement(v, self)

    def random_element(self, rng, nonzero: bool = False) -> FpElement:
        lo = 1 if nonzero else 0
        return FpElement(rng.randrange(lo, self.p), self)

    def contains(self, x) -> bool:
        return isinstance(x, FpElement) and x.field == self

    def render(self, x) -> str:
        return str(x.val)

    @property
    def order(self) -> int:
        return self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class FqElement:
    """Element of GF(p^m): coefficient tuple of length m, ascending degree."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: "ExtensionField"):
        m, p = field.m, field.p
        cs = [c % p for c in coeffs]
        if len(cs) > m:
            cs = field._reduce(cs)
        cs += [0] * (m - len(cs))
        self.coeffs = tuple(cs)
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FqElement):
            if other.field != self.field:
                raise RingMismatchError(f"mixed fields {self.field} and {other.field}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElement([a + b for a, b in zip(self.coeffs, o.coeffs)], self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FqElement([a - b for a, b in zip(self.coeffs, o.coeffs)], self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.field.m
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        return FqElement(prod, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FqElement([-c for c in self.coeffs], self.field)

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> "FqElement":
        if not any(self.coeffs):
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __eq__(self, other):
        if isinstance(other, FqElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"{self.field.render(self)} in {self.field}"


class ExtensionField(Ring):
    """GF(p^m) modulo a deterministic monic irreducible, p^m <= 2**20."""

    name = "fq"
    is_field = True

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None = None):
        if m < 1:
            raise ValueError("extension degree must be positive")
        if modulus is None:
            modulus = find_irreducible(p, m)
        else:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _poly_is_irreducible(modulus, p):
                raise ValueError("modulus is reducible")
        if p**m > FIELD_SIZE_CAP:
            raise BoundExceededError(f"field size {p}^{m} exceeds {FIELD_SIZE_CAP}")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.characteristic = p

    def _reduce(self, coeffs: list[int]) -> list[int]:
        p, g, dg = self.p, self.modulus, self.m
        r = [c % p for c in coeffs]
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if c:
                for j in range(dg + 1):
                    r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
        del r[dg:]
        return r

    def from_int(self, n: int) -> FqElement:
        return FqElement([n], self)

    def element(self, coeffs) -> FqElement:
        return FqElement(coeffs, self)

    def inv(self, x: FqElement) -> FqElement:
        return x.inv()

    def pow(self, x: FqElement, e: int) -> FqElement:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return x**e

    def elements(self) -> Iterator[FqElement]:
        for coeffs in itertools.product(range(self.p), repeat=self.m):
            yield FqElement(coeffs, self)

    def random_element(self, rng, nonzero: bool = False) -> FqElement:
        while True:
            x = FqElement([rng.randrange(self.p) for _ in range(self.m)], self)
            if x or not nonzero:
                return x

    def contains(self, x) -> bool:
        return isinstance(x, FqElement) and x.field == self

    def parse(self, text: str):
        if "," in text:
            return FqElement([int(c) for c in text.split(",")], self)
        return super().parse(text)

    def render(self, x: FqElement) -> str:
        terms = []
        for e in range(self.m - 1, -1, -1):
            c = x.coeffs[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return "+".join(terms) if terms else "0"

    @property
    def order(self) -> int:
        return self.p**self.m

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.m == self.m
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtensionField", self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"


RingValue = Union[int, Fraction, FpElement, FqElement]


@functools.cache
def _prime_field(p: int) -> PrimeField:
    return PrimeField(p)


@functools.cache
def _extension_field(p: int, m: int) -> ExtensionField:
    return ExtensionField(p, m)


def GF(q: int) -> Ring:
    """Field of size q = p^m with the default modulus, cached.

    >>> GF(7)
    GF(7)
    >>> GF(8)
    GF(2^3)
    """
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = q
    for d in range(2, q):
        if d * d > q:
            break
        if q % d == 0:
            p = d
            break
    m = 0
    t = q
    while t % p == 0 and t > 1:
        t //= p
        m += 1
    if t != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return _prime_field(p) if m == 1 else _extension_field(p, m)


def ring_of(x: RingValue) -> Ring:
    """Ring descriptor for a ring value."""
    if isinstance(x, bool):
        raise TypeError("bool is not a ring value")
    if isinstance(x, int):
        return ZZ
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, (FpElement, FqElement)):
        return x.field
    raise TypeError(f"not a ring value: {x!r}")


def ff_inv(a: RingValue) -> RingValue:
    """Multiplicative inverse in the value's field.

    >>> ff_inv(GF(7).from_int(3)).val
    5
    """
    return ring_of(a).inv(a)


def ff_pow(a: RingValue, e: int) -> RingValue:
    """a**e by square and multiply, e >= 0 (0**0 = 1).

    >>> ff_pow(GF(7).from_int(3), 6).val
    1
    """
    return ring_of(a).pow(a, e)
