"""Exact counting and enumeration of the solutions of z**2 ≡ a (mod m).

Counts for a prime-power modulus come from the classical discriminant case
analysis for quadratic congruences; counts for arbitrary moduli multiply
across the prime powers of m. Enumeration is an independent route: it
combines Tonelli-Shanks square roots modulo an odd prime, Newton (Hensel)
lifting to prime powers, explicit two-adic tables, and a CRT merge, and it
drives the windowed count N(y, m; a) of roots in 1 <= z <= y.

The verify_* scans compare the formula route against direct squaring over
full residue ranges and enforce the two classical bounds

    n_m <= 4 * sqrt(m)          and          N(y, m; a) <= 4 * y**(2/3) + 1,

both checked in exact integer arithmetic (squared and cubed respectively).
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import arith
from ._native import kernels
from .config import thread_count

__all__ = [
    "CongruenceSpec",
    "DiscriminantDecomposition",
    "decompose_discriminant",
    "count_roots_prime_power",
    "count_roots",
    "sqrt_mod_prime",
    "enumerate_roots",
    "count_roots_up_to",
    "formula_root_counts",
    "bruteforce_root_counts",
    "prime_power_pairs",
    "ScanReport",
    "WindowScanReport",
    "verify_multiplicativity",
    "verify_prime_power_formula",
    "verify_root_count_bound",
    "random_window_grid",
    "verify_window_bound",
]


@dataclass(frozen=True)
class CongruenceSpec:
    """The congruence z**2 ≡ a (mod m), with an optional window bound y."""

    a: int
    m: int
    y: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "a", self.a % self.m)
        if self.y is not None and not 2 <= self.y <= self.m:
            raise ValueError("window bound must satisfy 2 <= y <= m")


@dataclass(frozen=True)
class DiscriminantDecomposition:
    """delta = p**(2*ell) * delta0 with delta0 ≡ 0 or 1 (mod 4), ell maximal."""

    delta: int
    p: int
    ell: int
    delta0: int


def decompose_discriminant(delta: int, p: int) -> DiscriminantDecomposition:
    """Maximal extraction of p**(2*ell) from a nonzero discriminant.

    Requires delta ≡ 0 or 1 (mod 4); the remaining cofactor delta0 must keep
    that property, which for p = 2 can force ell below half the valuation.
    """
    if delta == 0:
        raise ValueError("decomposition needs delta != 0")
    if delta % 4 in (2, 3):
        raise ValueError("delta must be ≡ 0 or 1 (mod 4)")
    v = 0
    t = abs(delta)
    while t % p == 0:
        t //= p
        v += 1
    ell = v // 2
    delta0 = delta // p ** (2 * ell)
    while delta0 % 4 in (2, 3):
        ell -= 1
        delta0 *= p * p
    return DiscriminantDecomposition(delta, p, ell, delta0)


def count_roots_prime_power(a: int, p: int, e: int) -> int:
    """Number of z in [0, p**e) with z**2 ≡ a (mod p**e).

    Case analysis on the discriminant delta = 4*a of z**2 - a: above the
    extracted square part (e > 2*ell) the quadratic character of delta0 at p
    decides everything; at or below it the count is p**(e // 2), which also
    covers a ≡ 0. The e == 2*ell boundary reuses p**(e // 2); the scans
    validate that extension exhaustively against direct squaring.
    """
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e == 0:
        return 1
    if a % p**e == 0:
        return p ** (e // 2)
    dec = decompose_discriminant(4 * a, p)
    if e > 2 * dec.ell:
        chi = arith.kronecker_symbol(dec.delta0, p)
        if chi == 1:
            return 2 * p**dec.ell
        if chi == -1:
            return 0
        return p**dec.ell if e == 2 * dec.ell + 1 else 0
    return p ** (e // 2)


def count_roots(a: int, m: int) -> int:
    """Number of z in [0, m) with z**2 ≡ a (mod m): product over prime powers."""
    if m < 1:
        raise ValueError("modulus must be positive")
    total = 1
    for p, e in arith.factorize(m).factors:
        total *= count_roots_prime_power(a, p, e)
        if total == 0:
            return 0
    return total


# ---------------------------------------------------------------- enumeration


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """One square root of a modulo an odd prime, or None for a non-residue.

    Tonelli-Shanks, made deterministic by scanning 2, 3, ... for the
    auxiliary non-residue.
    """
    a %= p
    if a == 0:
        return 0
    if arith._legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while arith._legendre(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def _sqrt_unit_odd(u: int, p: int, e: int) -> int | None:
    # Root of a unit u modulo p**e for odd p, by Newton lifting with doubling
    # precision from the Tonelli-Shanks root mod p.
    w = sqrt_mod_prime(u, p)
    if w is None:
        return None
    k = 1
    while k < e:
        k = min(2 * k, e)
        mod = p**k
        w = (w + u * pow(w, -1, mod)) * pow(2, -1, mod) % mod
    return w


def _roots_two_power(a: int, e: int) -> list[int]:
    # All roots modulo 2**e for a nonzero reduced residue a.
    q = 1 << e
    w = 0
    u = a
    while u % 2 == 0:
        u //= 2
        w += 1
    if w % 2:
        return []
    ee = e - w
    if ee == 1:
        base = [1]
    elif ee == 2:
        base = [1, 3] if u % 4 == 1 else []
    elif u % 8 != 1:
        base = []
    else:
        r = 1
        for k in range(3, ee):
            if (r * r - u) % (1 << (k + 1)):
                r += 1 << (k - 1)
        mod = 1 << ee
        half_period = mod >> 1
        base = sorted({r, mod - r, (r + half_period) % mod, (mod - r + half_period) % mod})
    scale = 1 << (w // 2)
    step = 1 << (e - w)
    roots = set()
    for r in base:
        for t in range(scale):
            roots.add((r + t * step) * scale % q)
    return sorted(roots)


def _roots_prime_power(a: int, p: int, e: int) -> list[int]:
    # All roots of z**2 ≡ a (mod p**e), ascending.
    if e == 0:
        return [0]
    q = p**e
    a %= q
    if a == 0:
        step = p ** ((e + 1) // 2)
        return list(range(0, q, step))
    if p == 2:
        return _roots_two_power(a, e)
    v = 0
    u = a
    while u % p == 0:
        u //= p
        v += 1
    if v % 2:
        return []
    w = _sqrt_unit_odd(u, p, e - v)
    if w is None:
        return []
    scale = p ** (v // 2)
    step = p ** (e - v)
    roots = []
    for r in (w, step - w):
        for t in range(scale):
            roots.append((r + t * step) * scale % q)
    return sorted(roots)


def enumerate_roots(a: int, m: int) -> list[int]:
    """Sorted list of every z in [0, m) with z**2 ≡ a (mod m).

    Per-prime-power roots merged by the Chinese Remainder Theorem; the length
    always equals count_roots(a, m).
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return [0]
    residues = [0]
    modulus = 1
    for p, e in arith.factorize(m).factors:
        q = p**e
        part = _roots_prime_power(a, p, e)
        if not part:
            return []
        inv = pow(modulus, -1, q)
        residues = [r + modulus * ((s - r) * inv % q) for r in residues for s in part]
        modulus *= q
    return sorted(residues)


def count_roots_up_to(a: int, m: int, y: int) -> int:
    """N(y, m; a): roots z of z**2 ≡ a (mod m) with 1 <= z <= y.

    Requires 2 <= y <= m. The window never exceeds one full period, so each
    residue class contributes at most once; the class of 0 counts as z = m
    exactly when y == m.
    """
    if not 2 <= y <= m:
        raise ValueError("window must satisfy 2 <= y <= m")
    roots = enumerate_roots(a, m)
    n = sum(1 for r in roots if 1 <= r <= y)
    if roots and roots[0] == 0 and y == m:
        n += 1
    return n


# ------------------------------------------------------------------- batches


def formula_root_counts(m: int) -> np.ndarray:
    """Root-count table over all a in [0, m), by the prime-power formula."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return np.ones(1, dtype=np.int64)
    factors = arith.factorize(m).factors
    if len(factors) == 1:
        return kernels.prime_power_root_counts(*factors[0])
    return kernels.combined_root_counts(m, factors)


def bruteforce_root_counts(m: int) -> np.ndarray:
    """Oracle table over all a in [0, m), by squaring every z."""
    if m < 1:
        raise ValueError("modulus must be positive")
    return kernels.bruteforce_root_counts(m)


def _primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return [int(p) for p in np.flatnonzero(mask)]


def prime_power_pairs(limit: int) -> list[tuple[int, int]]:
    """All (p, e) with p prime, e >= 1 and p**e <= limit, ordered by (p, e)."""
    pairs = []
    for p in _primes_up_to(limit):
        q, e = p, 1
        while q <= limit:
            pairs.append((p, e))
            q *= p
            e += 1
    return pairs


# --------------------------------------------------------------------- scans


@dataclass
class ScanReport:
    """Outcome of a root-count scan over a family of moduli."""

    moduli_checked: int
    residues_checked: int
    mismatches: list[tuple[int, int]]  # (modulus, first a where formula != oracle)
    bound_violations: list[tuple[int, int]]  # (modulus, a) with count**2 > 16 m
    max_ratio: float  # max over (m, a) of n / sqrt(m)
    witness_m: int
    witness_a: int

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.bound_violations


def _scan_chunk(moduli: list[int], compare: bool):
    mismatches = []
    violations = []
    best = (-1.0, 0, 0)
    residues = 0
    for m in moduli:
        table = formula_root_counts(m)
        residues += int(table.shape[0])
        if compare:
            oracle = bruteforce_root_counts(m)
            if not np.array_equal(table, oracle):
                a = int(np.argmax(table != oracle))
                mismatches.append((m, a))
        a_best = int(np.argmax(table))
        n_best = int(table[a_best])
        if n_best * n_best > 16 * m:
            violations.append((m, a_best))
        ratio = n_best / math.sqrt(m)
        if ratio > best[0] or (ratio == best[0] and (m, a_best) < best[1:]):
            best = (ratio, m, a_best)
    return len(moduli), residues, mismatches, violations, best


def _run_scan(moduli: list[int], compare: bool, threads: int | None) -> ScanReport:
    workers = threads if threads is not None else thread_count()
    workers = max(1, min(workers, len(moduli)))
    if workers == 1:
        parts = [_scan_chunk(moduli, compare)]
    else:
        chunks = [moduli[i::workers] for i in range(workers)]  # round-robin balance
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: _scan_chunk(c, compare), chunks))
    checked = sum(p[0] for p in parts)
    residues = sum(p[1] for p in parts)
    mismatches = sorted(m for p in parts for m in p[2])
    violations = sorted(v for p in parts for v in p[3])
    best = (-1.0, 0, 0)
    for _, _, _, _, b in parts:
        if b[0] > best[0] or (b[0] == best[0] and b[1:] < best[1:]):
            best = b
    return ScanReport(
        moduli_checked=checked,
        residues_checked=residues,
        mismatches=mismatches,
        bound_violations=violations,
        max_ratio=best[0],
        witness_m=best[1],
        witness_a=best[2],
    )


def verify_multiplicativity(m_max: int, *, threads: int | None = None) -> ScanReport:
    """Formula vs direct squaring for every m <= m_max and every residue a."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    return _run_scan(list(range(1, m_max + 1)), compare=True, threads=threads)


def verify_prime_power_formula(limit: int, *, threads: int | None = None) -> ScanReport:
    """Formula vs direct squaring for every prime power p**e <= limit, every a."""
    if limit < 2:
        raise ValueError("limit must be at least 2")
    moduli = [p**e for p, e in prime_power_pairs(limit)]
    return _run_scan(moduli, compare=True, threads=threads)


def verify_root_count_bound(m_max: int, *, threads: int | None = None) -> ScanReport:
    """Scan n_m <= 4*sqrt(m) over all m <= m_max and all a (no oracle pass)."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    return _run_scan(list(range(1, m_max + 1)), compare=False, threads=threads)


@dataclass
class WindowScanReport:
    """Outcome of a windowed-count scan over (a, m, y) triples."""

    triples_checked: int
    violations: list[tuple[int, int, int]]  # (a, m, y) with (N-1)**3 > 64 y**2
    max_ratio: float  # max of N / y**(2/3)
    witness: tuple[int, int, int]

    @property
    def ok(self) -> bool:
        return not self.violations


def random_window_grid(count: int, *, m_max: int, seed: int) -> list[tuple[int, int, int]]:
    """Seeded (a, m, y) triples with 2 <= y <= m <= m_max."""
    if count < 1 or m_max < 2:
        raise ValueError("need count >= 1 and m_max >= 2")
    rng = random.Random(seed)
    grid = []
    for _ in range(count):
        m = rng.randint(2, m_max)
        y = rng.randint(2, m)
        a = rng.randrange(m)
        grid.append((a, m, y))
    return grid


def verify_window_bound(triples) -> WindowScanReport:
    """Check N(y, m; a) <= 4*y**(2/3) + 1 on every triple (exact cube compare)."""
    violations = []
    best = (-1.0, (0, 2, 2))
    checked = 0
    for a, m, y in triples:
        n = count_roots_up_to(a, m, y)
        checked += 1
        if n >= 1 and (n - 1) ** 3 > 64 * y * y:
            violations.append((a, m, y))
        ratio = n / y ** (2.0 / 3.0)
        if ratio > best[0]:
            best = (ratio, (a, m, y))
    return WindowScanReport(
        triples_checked=checked,
        violations=violations,
        max_ratio=best[0],
        witness=best[1],
    )
