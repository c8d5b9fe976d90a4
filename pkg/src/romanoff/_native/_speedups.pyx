# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled lane for the root-count kernels.

Hot loops run without the GIL so the scan drivers can spread moduli over a
thread pool. `pure.py` mirrors this surface in numpy for builds without a
C toolchain.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND_NAME = "cython"

DEF TABLE_CAP = 100_000_000


cdef long long _ipow(long long b, long long e) noexcept nogil:
    cdef long long r = 1
    while e > 0:
        if e & 1:
            r *= b
        b *= b
        e >>= 1
    return r


cdef int _jacobi(long long a, long long n) noexcept nogil:
    # n odd and positive; a any residue
    cdef int t = 1
    cdef long long tmp, r
    a %= n
    if a < 0:
        a += n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            r = n % 8
            if r == 3 or r == 5:
                t = -t
        tmp = a
        a = n
        n = tmp
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    if n == 1:
        return t
    return 0


cdef long long _count_reduced(long long a, long long p, int e) noexcept nogil:
    # Discriminant case analysis for 0 <= a < p**e, e >= 1.
    cdef long long u
    cdef int w
    if a == 0:
        return _ipow(p, e // 2)
    if p == 2:
        w = 0
        u = a
        while (u & 1) == 0:
            u >>= 1
            w += 1
        if w & 1 or (u & 3) == 3:
            return 0
        if e == w + 1:
            return (<long long>1) << (w >> 1)
        if e == w + 2:
            return (<long long>1) << ((w >> 1) + 1)
        if (u & 7) == 1:
            return (<long long>1) << ((w >> 1) + 2)
        return 0
    w = 0
    u = a
    while u % p == 0:
        u //= p
        w += 1
    if w & 1:
        return 0
    if _jacobi(u, p) == 1:
        return 2 * _ipow(p, w >> 1)
    return 0


def jacobi(a, n):
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    return _jacobi(a % n, n)


def bruteforce_root_counts(m):
    """counts[a] = #{z in [0, m): z*z ≡ a (mod m)}, by squaring every z."""
    cdef long long mm = m
    if mm < 1:
        raise ValueError("modulus must be positive")
    if mm > TABLE_CAP:
        raise ValueError("modulus too large for a residue table")
    out = np.zeros(mm, dtype=np.int64)
    cdef long long[::1] c = out
    cdef long long z
    with nogil:
        for z in range(mm):
            c[(z * z) % mm] += 1
    return out


def prime_power_root_counts(p, e):
    """Root-count table for the modulus p**e from the discriminant cases."""
    cdef long long pp = p
    cdef int ee = e
    cdef int i
    if ee < 1:
        raise ValueError("e must be at least 1")
    cdef long long q = 1
    for i in range(ee):
        q *= pp
        if q > TABLE_CAP:
            raise ValueError("modulus too large for a residue table")
    out = np.empty(q, dtype=np.int64)
    cdef long long[::1] c = out
    cdef long long a
    with nogil:
        for a in range(q):
            c[a] = _count_reduced(a, pp, ee)
    return out


def combined_root_counts(m, prime_powers):
    """Root-count table for m, multiplied up from its prime-power tables."""
    cdef long long mm = m
    if mm < 1:
        raise ValueError("modulus must be positive")
    if mm == 1:
        return np.ones(1, dtype=np.int64)
    cdef list tables = []
    cdef long long prod = 1
    cdef long long[16] qarr
    cdef const long long* ptrs[16]
    cdef Py_ssize_t t = 0
    cdef long long[::1] view
    for p, e in prime_powers:
        if t >= 16:
            raise ValueError("too many prime powers")
        tbl = prime_power_root_counts(p, e)
        tables.append(tbl)
        view = tbl
        ptrs[t] = &view[0]
        qarr[t] = <long long>(p) ** <long long>(e)
        prod *= qarr[t]
        t += 1
    if prod != mm:
        raise ValueError("prime powers do not multiply to the modulus")
    out = np.empty(mm, dtype=np.int64)
    cdef long long[::1] c = out
    cdef long long a, v
    cdef Py_ssize_t i
    with nogil:
        for a in range(mm):
            v = 1
            for i in range(t):
                v *= ptrs[i][a % qarr[i]]
                if v == 0:
                    break
            c[a] = v
    return out
