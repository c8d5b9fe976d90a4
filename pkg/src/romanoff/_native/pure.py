"""Pure-Python/numpy lane for the root-count kernels.

Same surface as the compiled `_speedups` extension. The expensive case, a
full Legendre-symbol table for an odd prime modulus, is vectorized through
Euler's criterion; the small prime-power cases fall back to a scalar loop.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"

_TABLE_CAP = 100_000_000


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    a %= n
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def bruteforce_root_counts(m: int) -> np.ndarray:
    """counts[a] = #{z in [0, m): z*z ≡ a (mod m)}, by squaring every z."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m > _TABLE_CAP:
        raise ValueError("modulus too large for a residue table")
    z = np.arange(m, dtype=np.int64)
    return np.bincount((z * z) % m, minlength=m).astype(np.int64)


def _count_reduced(a: int, p: int, e: int) -> int:
    # Discriminant case analysis for 0 <= a < p**e, e >= 1.
    if a == 0:
        return p ** (e // 2)
    if p == 2:
        w = 0
        u = a
        while u % 2 == 0:
            u //= 2
            w += 1
        if w % 2 or u % 4 == 3:
            return 0
        if e == w + 1:
            return 1 << (w // 2)
        if e == w + 2:
            return 1 << (w // 2 + 1)
        return (1 << (w // 2 + 2)) if u % 8 == 1 else 0
    v = 0
    u = a
    while u % p == 0:
        u //= p
        v += 1
    if v % 2:
        return 0
    return 2 * p ** (v // 2) if jacobi(u, p) == 1 else 0


def _odd_prime_counts(p: int) -> np.ndarray:
    # 1 + Legendre(a) for a != 0, via a vectorized power ladder mod p.
    base = np.arange(p, dtype=np.int64)
    result = np.ones(p, dtype=np.int64)
    exp = (p - 1) // 2
    while exp:
        if exp & 1:
            result = result * base % p
        base = base * base % p
        exp >>= 1
    counts = np.where(result == 1, 2, 0).astype(np.int64)
    counts[0] = 1
    return counts


def prime_power_root_counts(p: int, e: int) -> np.ndarray:
    """Root-count table for the modulus p**e from the discriminant cases."""
    if e < 1:
        raise ValueError("e must be at least 1")
    q = p**e
    if q > _TABLE_CAP:
        raise ValueError("modulus too large for a residue table")
    if p != 2 and e == 1:
        return _odd_prime_counts(p)
    return np.array([_count_reduced(a, p, e) for a in range(q)], dtype=np.int64)


def combined_root_counts(m: int, prime_powers) -> np.ndarray:
    """Root-count table for m, multiplied up from its prime-power tables."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return np.ones(1, dtype=np.int64)
    prod = 1
    for p, e in prime_powers:
        prod *= p**e
    if prod != m:
        raise ValueError("prime powers do not multiply to the modulus")
    out = np.ones(m, dtype=np.int64)
    idx = np.arange(m, dtype=np.int64)
    for p, e in prime_powers:
        q = p**e
        out *= prime_power_root_counts(p, e)[idx % q]
    return out
