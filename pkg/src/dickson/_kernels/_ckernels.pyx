# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for word-sized prime-field inner loops.

Contract-identical to dickson._kernels._pykernels; p <= 2**20 keeps all
intermediate products below 2**41, well inside 64-bit arithmetic.
"""

BACKEND = "compiled"

ctypedef unsigned long long u64


cdef inline u64 _reduce(long long v, u64 p) noexcept:
    cdef long long r = v % <long long> p
    if r < 0:
        r += <long long> p
    return <u64> r


cdef u64 _powmod(u64 base, u64 exp, u64 p) noexcept:
    cdef u64 result = 1 % p
    base %= p
    while exp:
        if exp & 1:
            result = (result * base) % p
        base = (base * base) % p
        exp >>= 1
    return result


cdef int _legendre_c(long long a, u64 p) noexcept:
    cdef u64 r = _reduce(a, p)
    if r == 0:
        return 0
    if _powmod(r, (p - 1) // 2, p) == 1:
        return 1
    return -1


cdef void _companion_power_c(u64 n, u64 x, u64 na, u64 p, u64 *out) noexcept:
    # [[x, -a], [1, 0]] ** n mod p; na is (-a) mod p; out = (r00, r01, r10, r11)
    cdef u64 m00 = x, m01 = na, m10 = 1 % p, m11 = 0
    cdef u64 r00 = 1 % p, r01 = 0, r10 = 0, r11 = 1 % p
    cdef u64 t00, t01, t10, t11
    while n:
        if n & 1:
            t00 = (r00 * m00 + r01 * m10) % p
            t01 = (r00 * m01 + r01 * m11) % p
            t10 = (r10 * m00 + r11 * m10) % p
            t11 = (r10 * m01 + r11 * m11) % p
            r00, r01, r10, r11 = t00, t01, t10, t11
        t00 = (m00 * m00 + m01 * m10) % p
        t01 = (m00 * m01 + m01 * m11) % p
        t10 = (m10 * m00 + m11 * m10) % p
        t11 = (m10 * m01 + m11 * m11) % p
        m00, m01, m10, m11 = t00, t01, t10, t11
        n >>= 1
    out[0] = r00
    out[1] = r01
    out[2] = r10
    out[3] = r11


cdef u64 _dickson_first_c(u64 n, u64 x, u64 na, u64 p) noexcept:
    cdef u64 m[4]
    if n == 0:
        return 2 % p
    _companion_power_c(n, x, na, p, m)
    return (m[0] + m[3]) % p


def legendre(long long a, unsigned long long p) -> int:
    """Legendre symbol (a/p) by Euler's criterion, p an odd prime."""
    return _legendre_c(a, p)


def dickson_first_eval(unsigned long long n, long long x, long long a,
                       unsigned long long p) -> int:
    """D_n(x, a) mod p via the companion-matrix trace, O(log n)."""
    return _dickson_first_c(n, _reduce(x, p), _reduce(-a, p), p)


def dickson_kind_eval(unsigned long long n, long long k, long long x, long long a,
                      unsigned long long p) -> int:
    """D_{n,k}(x, a) mod p via the companion-matrix vector, O(log n)."""
    cdef u64 m[4]
    cdef u64 xr = _reduce(x, p)
    cdef u64 seed = _reduce(2 - k, p)
    if n == 0:
        return seed
    _companion_power_c(n - 1, xr, _reduce(-a, p), p, m)
    return (m[0] * xr + m[1] * seed) % p


def dickson_recurrence_eval(unsigned long long n, long long k, long long x,
                            long long a, unsigned long long p) -> int:
    """D_{n,k}(x, a) mod p by the O(n) scalar recurrence."""
    cdef u64 xr = _reduce(x, p)
    cdef u64 ar = _reduce(a, p)
    cdef u64 prev = _reduce(2 - k, p)
    cdef u64 cur = xr
    cdef u64 nxt
    cdef u64 i
    if n == 0:
        return prev
    for i in range(n - 1):
        nxt = (xr * cur + (p - ar) * prev) % p
        prev = cur
        cur = nxt
    return cur


def brewer_sum(unsigned long long p, unsigned long long n, long long a) -> int:
    """Lambda_n(a) = sum over x mod p of (D_{n+1}(x, a) / p)."""
    cdef u64 na = _reduce(-a, p)
    cdef long long total = 0
    cdef u64 x
    for x in range(p):
        total += _legendre_c(<long long> _dickson_first_c(n + 1, x, na, p), p)
    return total


def is_permutation_image(unsigned long long n, long long a, unsigned long long p) -> bool:
    """Whether x -> D_n(x, a) hits every residue mod p."""
    cdef u64 na = _reduce(-a, p)
    cdef bytearray seen = bytearray(p)
    cdef unsigned char[::1] view = seen
    cdef u64 x
    for x in range(p):
        view[_dickson_first_c(n, x, na, p)] = 1
    for x in range(p):
        if not view[x]:
            return False
    return True
