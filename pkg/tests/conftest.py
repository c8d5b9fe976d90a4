"""Shared independent oracles for the test suite.

Everything here is deliberately naive and separate from the package code
paths: plain-Python loops, a bytearray sieve, stepping-based orders. Tests
compare the fast implementations against these.
"""

from __future__ import annotations

import math


def oracle_root_counts(m: int) -> list[int]:
    """counts[a] by squaring every z in a plain Python loop."""
    counts = [0] * m
    for z in range(m):
        counts[z * z % m] += 1
    return counts


def oracle_roots(a: int, m: int) -> list[int]:
    a %= m
    return [z for z in range(m) if (z * z - a) % m == 0]


def oracle_sieve(limit: int) -> bytearray:
    """Bytearray sieve: mask[n] == 1 iff n is prime."""
    mask = bytearray([1]) * (limit + 1)
    mask[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            start = p * p
            mask[start : limit + 1 : p] = b"\x00" * ((limit - start) // p + 1)
    return mask


def oracle_order(a: int, d: int) -> int:
    """Order by naive stepping."""
    if d == 1:
        return 1
    v = a % d
    k = 1
    while v != 1:
        v = v * a % d
        k += 1
    return k


def oracle_trial_factors(n: int) -> list[tuple[int, int]]:
    out = []
    f = 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        if e:
            out.append((f, e))
        f += 1
    if n > 1:
        out.append((n, 1))
    return out


def oracle_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for f in range(2, math.isqrt(n) + 1):
        if n % f == 0:
            return False
    return True
