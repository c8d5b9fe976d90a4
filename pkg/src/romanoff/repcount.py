"""Sieving and representation statistics for n = p + g**(m1**2) + g**(m2**2).

Builds primality tables, counts ordered representations and their first and
second moments, derives the Cauchy-Schwarz lower bound for the number of
representable integers, and provides the classical prime-plus-power density
counts and prime-pair counts with their singular products.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import arith
from .config import DEFAULT_CONFIG, BudgetError, RunConfig

__all__ = [
    "PrimeSet",
    "sieve_primes",
    "power_exponents",
    "power_values",
    "RepStats",
    "representation_stats",
    "cs_lower_bound",
    "sum_r_lower_witness",
    "HQuadruple",
    "h_value",
    "verify_h_zero_iff",
    "prime_pairs",
    "singular_product",
    "ClassicalDensityReport",
    "classical_density",
    "is_representable_prime_plus_power",
    "NonrepresentableOdds",
    "nonrepresentable_odds",
    "CLASSICAL_DENSITY_REFERENCES",
]

_SEGMENT = 1 << 20


def _sieve_mask(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    root = math.isqrt(limit)
    base = np.ones(root + 1, dtype=bool)
    base[:2] = False
    for p in range(2, math.isqrt(root) + 1):
        if base[p]:
            base[p * p :: p] = False
    base_primes = [int(p) for p in np.flatnonzero(base)]
    for lo in range(0, limit + 1, _SEGMENT):
        hi = min(lo + _SEGMENT, limit + 1)
        for p in base_primes:
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                mask[start:hi:p] = False
    return mask


class PrimeSet:
    """Primality indicator over [0, limit], built segment by segment."""

    def __init__(self, limit: int, *, memory_budget_bytes: int | None = None):
        if limit < 2:
            raise ValueError("limit must be at least 2")
        budget = (
            memory_budget_bytes
            if memory_budget_bytes is not None
            else DEFAULT_CONFIG.memory_budget_bytes
        )
        if limit + 1 > budget:
            raise BudgetError(
                f"primality table to {limit} needs {limit + 1} bytes, budget is {budget}"
            )
        self.limit = limit
        self._mask = _sieve_mask(limit)

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise ValueError(f"{n} outside the table range [0, {self.limit}]")
        return bool(self._mask[n])

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.limit and bool(self._mask[n])

    def count(self, hi: int | None = None) -> int:
        """pi(hi): how many primes are <= hi (defaults to the table limit)."""
        if hi is None:
            hi = self.limit
        if hi > self.limit:
            raise ValueError(f"pi({hi}) beyond the table limit {self.limit}")
        if hi < 2:
            return 0
        return int(np.count_nonzero(self._mask[: hi + 1]))

    def primes(self) -> np.ndarray:
        """All primes <= limit, ascending."""
        return np.flatnonzero(self._mask).astype(np.int64)

    @property
    def mask(self) -> np.ndarray:
        view = self._mask.view()
        view.setflags(write=False)
        return view


def sieve_primes(x: int, *, config: RunConfig | None = None) -> PrimeSet:
    """Primality table for [2, x] under the configured memory budget."""
    cfg = config or DEFAULT_CONFIG
    return PrimeSet(x, memory_budget_bytes=cfg.memory_budget_bytes)


def _table_for(primes: PrimeSet | None, needed: int, budget: int | None = None) -> PrimeSet:
    if primes is None:
        return PrimeSet(max(needed, 2), memory_budget_bytes=budget)
    if primes.limit < needed:
        raise ValueError(f"prime table reaches {primes.limit}, need {needed}")
    return primes


_SHAPES = ("squares", "linear")


def _power(g: int, m: int, exponent_shape: str) -> int:
    return g ** (m * m) if exponent_shape == "squares" else g**m


def power_exponents(
    x: int, g: int = 2, exponent_shape: str = "squares", *, zero_in_n: bool = True
) -> list[int]:
    """Exponents m with g**(m*m) <= x (or g**m <= x for the linear shape).

    The starting exponent follows the zero-in-N convention; comparisons are
    exact integer arithmetic, never floating logs.
    """
    if g < 2:
        raise ValueError("base must be at least 2")
    if exponent_shape not in _SHAPES:
        raise ValueError(f"unknown exponent shape {exponent_shape!r}")
    out = []
    m = 0 if zero_in_n else 1
    while x >= 1 and _power(g, m, exponent_shape) <= x:
        out.append(m)
        m += 1
    return out


def power_values(
    x: int, g: int = 2, exponent_shape: str = "squares", *, zero_in_n: bool = True
) -> list[int]:
    """The admissible power values themselves, ascending."""
    return [
        _power(g, m, exponent_shape)
        for m in power_exponents(x, g, exponent_shape, zero_in_n=zero_in_n)
    ]


@dataclass(frozen=True)
class RepStats:
    """Moments of the representation function r(n) over n <= x.

    r(n) counts ordered tuples (p, m_1, ..., m_k): permuting distinct
    exponents gives distinct representations.
    """

    x: int
    base: int
    terms: int
    exponent_shape: str
    zero_in_n: bool
    v_count: int  # representable n <= x
    sum_r: int
    sum_r2: int
    histogram: dict[int, int]  # r value -> number of n <= x attaining it

    @property
    def density(self) -> float:
        return self.v_count / self.x


def representation_stats(
    x: int,
    g: int = 2,
    terms: int = 2,
    exponent_shape: str = "squares",
    *,
    zero_in_n: bool = True,
    config: RunConfig | None = None,
    primes: PrimeSet | None = None,
) -> RepStats:
    """Exact r(n) statistics for n <= x by marking every power-sum shift of the primes."""
    cfg = config or DEFAULT_CONFIG
    if x < 4:
        raise ValueError("x must be at least 4")
    if terms < 1:
        raise ValueError("terms must be at least 1")
    if 5 * (x + 1) > cfg.memory_budget_bytes:
        raise BudgetError(f"representation arrays to {x} exceed the memory budget")
    ps = _table_for(primes, x, cfg.memory_budget_bytes)
    pm = ps.mask
    powers = power_values(x, g, exponent_shape, zero_in_n=zero_in_n)
    r = np.zeros(x + 1, dtype=np.int32)
    for combo in itertools.product(powers, repeat=terms):
        s = sum(combo)
        if s + 2 > x:
            continue
        r[s + 2 : x + 1] += pm[2 : x - s + 1]
    counts = r[1:].astype(np.int64)
    hist = np.bincount(counts)
    return RepStats(
        x=x,
        base=g,
        terms=terms,
        exponent_shape=exponent_shape,
        zero_in_n=zero_in_n,
        v_count=int(np.count_nonzero(counts)),
        sum_r=int(counts.sum()),
        sum_r2=int((counts * counts).sum()),
        histogram={int(v): int(c) for v, c in enumerate(hist) if c},
    )


def cs_lower_bound(stats: RepStats) -> Fraction:
    """(sum r)**2 / sum r**2, the moment lower bound for v_count (exact rational)."""
    if stats.sum_r2 <= 0:
        raise ValueError("no representations below x")
    return Fraction(stats.sum_r * stats.sum_r, stats.sum_r2)


def sum_r_lower_witness(
    x: int, g: int = 2, *, zero_in_n: bool = True, primes: PrimeSet | None = None
) -> int:
    """pi(x/3) * floor(sqrt(log(x/3) / log g))**2, an exact minorant of sum_r.

    Counts only exponents m >= 1, so it bounds sum_r from below under either
    zero-in-N convention; the flag is carried for report labelling only.
    """
    if x < 12:
        raise ValueError("x must be at least 12")
    x3 = x // 3
    ps = _table_for(primes, x3)
    pi = ps.count(x3)
    t = 0
    while g ** ((t + 1) * (t + 1)) <= x3:
        t += 1
    return pi * t * t


@dataclass(frozen=True)
class HQuadruple:
    """Exponent quadruple with h = 2**(m1*m1) + 2**(m2*m2) - 2**(k1*k1) - 2**(k2*k2)."""

    m1: int
    m2: int
    k1: int
    k2: int
    h: int

    @property
    def multisets_match(self) -> bool:
        return sorted((self.m1, self.m2)) == sorted((self.k1, self.k2))


def h_value(m1: int, m2: int, k1: int, k2: int) -> HQuadruple:
    """Exact h for an exponent quadruple (arbitrary-precision integers)."""
    for v in (m1, m2, k1, k2):
        if v < 0:
            raise ValueError("exponents must be nonnegative")
    h = (1 << m1 * m1) + (1 << m2 * m2) - (1 << k1 * k1) - (1 << k2 * k2)
    return HQuadruple(m1, m2, k1, k2, h)


def verify_h_zero_iff(max_exponent: int) -> bool:
    """Exhaustively check h = 0 iff {m1, m2} = {k1, k2} on [0, max_exponent]**4.

    Runs over all quadruples as pair x pair with the pair sums and sorted
    pairs precomputed once; the arithmetic is exact at any exponent size.
    """
    if max_exponent < 1:
        raise ValueError("max_exponent must be at least 1")
    rng = range(max_exponent + 1)
    pairs = [(i, j) for i in rng for j in rng]
    sums = [(1 << i * i) + (1 << j * j) for i, j in pairs]
    multisets = [(i, j) if i <= j else (j, i) for i, j in pairs]
    n = len(pairs)
    for i in range(n):
        s_i = sums[i]
        m_i = multisets[i]
        for j in range(n):
            if (s_i == sums[j]) != (m_i == multisets[j]):
                return False
    return True


def prime_pairs(x: int, h: int, *, primes: PrimeSet | None = None) -> int:
    """pi_2(x, h): primes p with q = p + h also prime and both p, q <= x."""
    if h == 0:
        raise ValueError("pair gap must be nonzero")
    if x < 2:
        raise ValueError("x must be at least 2")
    gap = abs(h)
    if gap > x - 2:
        return 0
    ps = _table_for(primes, x)
    pm = ps.mask
    return int(np.count_nonzero(pm[2 : x - gap + 1] & pm[2 + gap : x + 1]))


def singular_product(h: int, *, odd_primes_only: bool = False) -> Fraction:
    """prod over distinct primes p | h of (1 + 1/p), exact; optionally odd p only."""
    if h == 0:
        raise ValueError("h must be nonzero")
    result = Fraction(1)
    for p, _ in arith.factorize(abs(h)).factors:
        if odd_primes_only and p == 2:
            continue
        result *= Fraction(p + 1, p)
    return result


# ------------------------------------------------- classical p + g**m counts

# Published reference points for the base-2 density (reported for comparison,
# never asserted: the sources do not all state the same normalization).
CLASSICAL_DENSITY_REFERENCES = {
    "chen_sun_lower": 0.0868,
    "erdos_upper": 0.49999991,
    "pintz_limit_candidate": 0.434,
    "del_corso_limit_candidate": 0.437,
}


@dataclass(frozen=True)
class ClassicalDensityReport:
    """Counts of n <= x of the form prime + g**m, overall and among odd n >= 3."""

    x: int
    base: int
    zero_in_n: bool
    count: int
    odd_count: int
    odd_total: int

    @property
    def ratio(self) -> float:
        return self.count / self.x

    @property
    def odd_ratio(self) -> float:
        return self.odd_count / self.odd_total


def _representable_mask(x: int, g: int, zero_in_n: bool, ps: PrimeSet) -> np.ndarray:
    pm = ps.mask
    rep = np.zeros(x + 1, dtype=bool)
    for s in power_values(x, g, "linear", zero_in_n=zero_in_n):
        if s + 2 > x:
            break
        rep[s + 2 : x + 1] |= pm[2 : x - s + 1]
    return rep


def classical_density(
    x: int,
    g: int = 2,
    *,
    zero_in_n: bool = True,
    config: RunConfig | None = None,
    primes: PrimeSet | None = None,
) -> ClassicalDensityReport:
    """Density of n <= x representable as prime + g**m."""
    cfg = config or DEFAULT_CONFIG
    if x < 4:
        raise ValueError("x must be at least 4")
    ps = _table_for(primes, x, cfg.memory_budget_bytes)
    rep = _representable_mask(x, g, zero_in_n, ps)
    return ClassicalDensityReport(
        x=x,
        base=g,
        zero_in_n=zero_in_n,
        count=int(np.count_nonzero(rep)),
        odd_count=int(np.count_nonzero(rep[3 : x + 1 : 2])),
        odd_total=(x - 1) // 2,
    )


def is_representable_prime_plus_power(n: int, g: int = 2, *, zero_in_n: bool = True) -> bool:
    """Is n = p + g**m for some prime p and admissible exponent m?"""
    if n < 3:
        return False
    m = 0 if zero_in_n else 1
    while g**m <= n - 2:
        if arith.is_prime(n - g**m):
            return True
        m += 1
    return False


class NonrepresentableOdds(NamedTuple):
    """Counts of odd 3 <= n <= x with no prime + g**m form, per exponent convention."""

    with_zero_exponent: int  # m = 0, 1, 2, ...
    without_zero_exponent: int  # m = 1, 2, ...


def nonrepresentable_odds(
    x: int,
    g: int = 2,
    *,
    config: RunConfig | None = None,
    primes: PrimeSet | None = None,
) -> NonrepresentableOdds:
    """How many odd n in [3, x] resist every prime + g**m representation."""
    cfg = config or DEFAULT_CONFIG
    if x < 3:
        raise ValueError("x must be at least 3")
    ps = _table_for(primes, x, cfg.memory_budget_bytes)
    odd_total = (x - 1) // 2
    counts = []
    for zero in (True, False):
        rep = _representable_mask(x, g, zero, ps)
        counts.append(odd_total - int(np.count_nonzero(rep[3 : x + 1 : 2])))
    return NonrepresentableOdds(*counts)
