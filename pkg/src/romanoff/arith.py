"""Exact integer and modular arithmetic shared by every other module.

Everything here is deterministic. Factorization runs trial division first and
a Miller-Rabin / Pollard-rho pipeline on what remains; with the witness set
used below the answers are exact for all inputs under 2**64, comfortably
covering the 2**63 input range this package promises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "UNIT_FACTOR",
    "Factorization",
    "OrderRecord",
    "is_prime",
    "factorize",
    "mobius",
    "largest_prime_factor",
    "pow_mod",
    "mult_order",
    "kronecker_symbol",
    "discrete_log_base2",
]

# largest_prime_factor(1): the unit has an empty factorization, and 1 sorts
# below every prime, so d = 1 passes any smoothness cutoff "P+(d) < y".
UNIT_FACTOR = 1

# Deterministic Miller-Rabin witness set for all n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_DIVISION_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """n = prod p**e over `factors`, primes strictly increasing, exponents >= 1."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("factorizations exist for n >= 1 only")
        prod = 1
        last = 1
        for p, e in self.factors:
            if e < 1 or p <= last:
                raise ValueError(f"malformed factor list for {self.n}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factor list does not multiply back to {self.n}")

    @property
    def mobius(self) -> int:
        if any(e > 1 for _, e in self.factors):
            return 0
        return -1 if len(self.factors) % 2 else 1

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    @property
    def largest_prime_factor(self) -> int:
        return self.factors[-1][0] if self.factors else UNIT_FACTOR

    @property
    def totient(self) -> int:
        t = 1
        for p, e in self.factors:
            t *= (p - 1) * p ** (e - 1)
        return t

    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _pollard_rho(n: int) -> int:
    # One nontrivial factor of an odd composite n; deterministic because the
    # polynomial increment c is scanned in order until a factor splits off.
    for c in range(1, 1000):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"factor search failed for {n}")


def _split(n: int, counts: dict[int, int]) -> None:
    if is_prime(n):
        counts[n] = counts.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split(d, counts)
    _split(n // d, counts)


def factorize(n: int) -> Factorization:
    """Prime factorization of 1 <= n < 2**63, deterministic."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    original = n
    counts: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    f, step = 7, 4
    while f * f <= n and f <= _TRIAL_DIVISION_LIMIT:
        while n % f == 0:
            counts[f] = counts.get(f, 0) + 1
            n //= f
        f += step
        step = 6 - step
    if n > 1:
        _split(n, counts)
    return Factorization(original, tuple(sorted(counts.items())))


def mobius(n: int) -> int:
    """Mobius function: 0 unless n is squarefree, else (-1)**(#prime factors)."""
    return factorize(n).mobius


def largest_prime_factor(n: int) -> int:
    """P+(n); returns UNIT_FACTOR (= 1) for n = 1."""
    return factorize(n).largest_prime_factor


def pow_mod(a: int, e: int, m: int) -> int:
    """a**e mod m, in [0, m); requires e >= 0 and m >= 1."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(a % m, e, m)


@dataclass(frozen=True)
class OrderRecord:
    """Multiplicative order: the least ell >= 1 with base**ell ≡ 1 (mod modulus)."""

    base: int
    modulus: int
    order: int


def mult_order(a: int, d: int) -> OrderRecord:
    """Order of a modulo d, via totient factorization and divisor descent.

    Starts from phi(d), a guaranteed multiple of the order, and strips prime
    factors while the power stays 1; no naive stepping.
    """
    if d < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(a, d) != 1:
        raise ValueError(f"order undefined: gcd({a}, {d}) != 1")
    if d == 1:
        return OrderRecord(a, 1, 1)
    ell = factorize(d).totient
    for q in factorize(ell).distinct_primes():
        while ell % q == 0 and pow(a, ell // q, d) == 1:
            ell //= q
    return OrderRecord(a, d, ell)


def _legendre(a: int, p: int) -> int:
    # Euler's criterion; caller guarantees p is an odd prime and a >= 0.
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def kronecker_symbol(delta: int, p: int) -> int:
    """Quadratic character of delta at the prime p.

    At p = 2 the symbol is defined only for delta ≡ 0 or 1 (mod 4): +1 when
    delta ≡ 1 (mod 8), -1 when delta ≡ 5 (mod 8), and 0 when 4 | delta. For
    odd p it is the Legendre symbol.
    """
    if p == 2:
        r = delta % 8
        if r in (2, 3, 6, 7):
            raise ValueError("symbol at 2 needs delta ≡ 0 or 1 (mod 4)")
        if r == 1:
            return 1
        if r == 5:
            return -1
        return 0
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _legendre(delta % p, p)


def discrete_log_base2(l: int, d: int) -> int | None:
    """Smallest j >= 0 with 2**j ≡ l (mod d), or None when l is outside <2>.

    Baby-step/giant-step over the cyclic subgroup generated by 2; d must be
    odd. A non-unit l raises instead, since no power of 2 shares a factor
    with an odd modulus.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError("modulus must be odd and positive")
    if d == 1:
        return 0
    l %= d
    if math.gcd(l, d) != 1:
        raise ValueError(f"{l} is not a unit modulo {d}")
    n = mult_order(2, d).order
    m = math.isqrt(n - 1) + 1
    baby: dict[int, int] = {}
    cur = 1
    for i in range(m):
        baby.setdefault(cur, i)
        cur = cur * 2 % d
    giant = pow(2, n - (m % n), d)  # multiply = step 2**-m
    val = l
    for q in range((n - 1) // m + 1):
        i = baby.get(val)
        if i is not None:
            return q * m + i
        val = val * giant % d
    return None
