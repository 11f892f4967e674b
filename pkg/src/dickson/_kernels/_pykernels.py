"""Pure-Python kernels for word-sized prime-field inner loops.

Same contract as the compiled module dickson._kernels._ckernels; one of
the two is selected at import by dickson._kernels.  All arguments and
results are plain ints; inputs are reduced mod p defensively.  p is
assumed prime (callers validate) and at most 2**20, so intermediate
products stay far below machine limits in the compiled twin.
"""

BACKEND = "pure"


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion, p an odd prime."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _companion_power(n: int, x: int, a: int, p: int) -> tuple[int, int, int, int]:
    # [[x, -a], [1, 0]] ** n mod p, row-major
    m00, m01, m10, m11 = x % p, (-a) % p, 1, 0
    r00, r01, r10, r11 = 1, 0, 0, 1
    while n:
        if n & 1:
            r00, r01, r10, r11 = (
                (r00 * m00 + r01 * m10) % p,
                (r00 * m01 + r01 * m11) % p,
                (r10 * m00 + r11 * m10) % p,
                (r10 * m01 + r11 * m11) % p,
            )
        m00, m01, m10, m11 = (
            (m00 * m00 + m01 * m10) % p,
            (m00 * m01 + m01 * m11) % p,
            (m10 * m00 + m11 * m10) % p,
            (m10 * m01 + m11 * m11) % p,
        )
        n >>= 1
    return r00, r01, r10, r11


def dickson_first_eval(n: int, x: int, a: int, p: int) -> int:
    """D_n(x, a) mod p via the companion-matrix trace, O(log n)."""
    if n == 0:
        return 2 % p
    r00, _, _, r11 = _companion_power(n, x, a, p)
    return (r00 + r11) % p


def dickson_kind_eval(n: int, k: int, x: int, a: int, p: int) -> int:
    """D_{n,k}(x, a) mod p via the companion-matrix vector, O(log n)."""
    if n == 0:
        return (2 - k) % p
    r00, r01, _, _ = _companion_power(n - 1, x, a, p)
    return (r00 * (x % p) + r01 * ((2 - k) % p)) % p


def dickson_recurrence_eval(n: int, k: int, x: int, a: int, p: int) -> int:
    """D_{n,k}(x, a) mod p by the O(n) scalar recurrence."""
    x %= p
    a %= p
    prev, cur = (2 - k) % p, x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, (x * cur - a * prev) % p
    return cur


def brewer_sum(p: int, n: int, a: int) -> int:
    """Lambda_n(a) = sum over x mod p of (D_{n+1}(x, a) / p)."""
    total = 0
    for x in range(p):
        total += legendre(dickson_first_eval(n + 1, x, a, p), p)
    return total


def is_permutation_image(n: int, a: int, p: int) -> bool:
    """Whether x -> D_n(x, a) hits every residue mod p."""
    seen = bytearray(p)
    for x in range(p):
        seen[dickson_first_eval(n, x, a, p)] = 1
    return all(seen)
