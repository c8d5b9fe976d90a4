"""Finite-scale evaluation of the bounding sums over odd squarefree moduli.

Four families of partial sums appear in the density bound: the order-weighted
harmonic sum over odd squarefree d (terms 1/(d*sqrt(e2(d))) with e2 the order
of 2 mod d), its smooth plain-harmonic counterpart, Mertens partial sums of
prime reciprocals, and the small-prime product they control. Alongside these
sit the congruence-solution counters: how many exponents k2 make a fixed odd
d divide h = 2**(m1*m1) + 2**(m2*m2) - 2**(k1*k1) - 2**(k2*k2), solved through
a discrete logarithm and residue roots modulo e2(d), plus the exact weighted
double sum assembled from those counts.

Rational values stay exact (fractions with a pairwise tree sum); whenever a
square root or logarithm enters, values are mpmath floats at the configured
precision with a first-order rounding bound reported next to them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from . import arith, quadroots
from .config import DEFAULT_CONFIG, BudgetError, RunConfig
from .repcount import PrimeSet

__all__ = [
    "LedgerRow",
    "SumReport",
    "order_of_two",
    "s1_partial",
    "s1_profile",
    "s2_partial",
    "mertens_partial",
    "small_prime_product",
    "count_k2_solutions",
    "count_k2_bruteforce",
    "k2_solution_bound",
    "K2ScanReport",
    "verify_k2_counts",
    "AssemblyReport",
    "double_sum_assembly",
]


@dataclass(frozen=True)
class LedgerRow:
    """One odd squarefree modulus d in a bounding sum.

    `term` is the exact rational weight mu^2(d)/d; the order-weighted sum
    divides it by sqrt(order2) at evaluation time.
    """

    d: int
    mu_sq: int
    p_plus: int
    order2: int
    term: Fraction


@dataclass
class SumReport:
    """One evaluated partial sum or product, with enough data to recompute it."""

    kind: str
    cutoffs: dict[str, int]
    value: mpmath.mpf
    term_count: int
    exact: Fraction | None = None
    error_bound: mpmath.mpf | None = None
    residual: mpmath.mpf | None = None
    rows: list[LedgerRow] | None = None


def order_of_two(d: int) -> int:
    """e2(d): multiplicative order of 2 modulo odd d (1 for d = 1)."""
    return arith.mult_order(2, d).order


def _tree_sum(terms: list[Fraction]) -> Fraction:
    """Pairwise sum; keeps intermediate denominators balanced."""
    if not terms:
        return Fraction(0)
    items = list(terms)
    while len(items) > 1:
        merged = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            merged.append(items[-1])
        items = merged
    return items[0]


def _spf_table(limit: int) -> np.ndarray:
    """Smallest prime factor for every integer up to limit (spf[1] = 1)."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            sl = spf[p * p :: p]
            sl[sl == 0] = p
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    if limit >= 1:
        spf[1] = 1
    return spf


def _distinct_primes_if_squarefree(d: int, spf: np.ndarray) -> list[int] | None:
    """Ascending prime factors of d, or None when a factor repeats."""
    primes = []
    while d > 1:
        p = int(spf[d])
        d //= p
        if d % p == 0:
            return None
        primes.append(p)
    return primes


def _s1_rows(d_max: int):
    """Yield (d, p_plus, e2(d)) for odd squarefree d <= d_max, ascending."""
    yield 1, arith.UNIT_FACTOR, 1
    if d_max < 3:
        return
    spf = _spf_table(d_max)
    order_cache: dict[int, int] = {}
    for d in range(3, d_max + 1, 2):
        primes = _distinct_primes_if_squarefree(d, spf)
        if primes is None:
            continue
        e = 1
        for p in primes:
            o = order_cache.get(p)
            if o is None:
                o = arith.mult_order(2, p).order
                order_cache[p] = o
            e = e * o // math.gcd(e, o)
        yield d, primes[-1], e


def s1_partial(d_max: int, *, precision_bits: int = 96, keep_rows: bool = False) -> SumReport:
    """Sum of 1/(d*sqrt(e2(d))) over odd squarefree d <= d_max.

    Irrational terms force floating point: values carry precision_bits of
    working precision and a first-order rounding bound.
    """
    reports = s1_profile([d_max], precision_bits=precision_bits, keep_rows=keep_rows)
    return reports[d_max]


def s1_profile(
    cutoffs, *, precision_bits: int = 96, keep_rows: bool = False
) -> dict[int, SumReport]:
    """s1_partial at several cutoffs from a single sweep over d."""
    cuts = sorted(set(int(c) for c in cutoffs))
    if not cuts or cuts[0] < 1:
        raise ValueError("cutoffs must be positive")
    reports: dict[int, SumReport] = {}
    rows: list[LedgerRow] | None = [] if keep_rows else None
    with mpmath.workprec(precision_bits):
        total = mpmath.mpf(0)
        count = 0
        pending = list(cuts)
        for d, p_plus, e in _s1_rows(cuts[-1]):
            while pending and d > pending[0]:
                reports[pending.pop(0)] = _snapshot_s1(total, count, precision_bits, rows)
            total += 1 / (mpmath.mpf(d) * mpmath.sqrt(e))
            count += 1
            if rows is not None:
                rows.append(LedgerRow(d=d, mu_sq=1, p_plus=p_plus, order2=e, term=Fraction(1, d)))
        while pending:
            reports[pending.pop(0)] = _snapshot_s1(total, count, precision_bits, rows)
    out = {}
    for c in cuts:
        rep = reports[c]
        rep.cutoffs = {"d_max": c}
        out[c] = rep
    return out


def _snapshot_s1(total, count, precision_bits, rows) -> SumReport:
    err = (count + 3) * mpmath.mpf(2) ** (3 - precision_bits) * total
    return SumReport(
        kind="s1",
        cutoffs={},
        value=+total,
        term_count=count,
        error_bound=+err,
        rows=list(rows) if rows is not None else None,
    )


def _odd_primes_below(y: int) -> list[int]:
    if y <= 3:
        return []
    ps = PrimeSet(y - 1)
    return [int(p) for p in ps.primes() if p > 2]


def _smooth_squarefree(primes: list[int], cap: int) -> list[tuple[int, int]]:
    """(d, P+(d)) for squarefree products d < cap of the given ascending primes."""
    out: list[tuple[int, int]] = []

    def extend(idx: int, prod: int) -> None:
        for j in range(idx, len(primes)):
            nxt = prod * primes[j]
            if nxt >= cap:
                break  # primes ascend, later j only grow
            out.append((nxt, primes[j]))
            extend(j + 1, nxt)

    extend(0, 1)
    return out


def s2_partial(
    d_max: int,
    smooth_y: int,
    *,
    precision_bits: int = 96,
    keep_rows: bool = False,
) -> SumReport:
    """Sum of mu^2(d)/d over odd squarefree d < d_max with P+(d) < smooth_y (exact).

    Always at most small_prime_product(smooth_y); equal once d_max exceeds
    the product of all odd primes below smooth_y.
    """
    if d_max < 1:
        raise ValueError("d_max must be positive")
    if smooth_y < 2:
        raise ValueError("smooth_y must be at least 2")
    entries = [(1, arith.UNIT_FACTOR)] if d_max > 1 else []
    entries += _smooth_squarefree(_odd_primes_below(smooth_y), d_max)
    entries.sort()
    exact = _tree_sum([Fraction(1, d) for d, _ in entries])
    rows = None
    if keep_rows:
        rows = [
            LedgerRow(d=d, mu_sq=1, p_plus=p_plus, order2=order_of_two(d), term=Fraction(1, d))
            for d, p_plus in entries
        ]
    with mpmath.workprec(precision_bits):
        value = mpmath.mpf(exact.numerator) / exact.denominator
    return SumReport(
        kind="s2",
        cutoffs={"d_max": d_max, "y": smooth_y},
        value=value,
        term_count=len(entries),
        exact=exact,
        rows=rows,
    )


def mertens_partial(y: int, *, precision_bits: int = 96) -> SumReport:
    """Exact rational sum of 1/p over primes p < y, and its log log y residual."""
    if y < 3:
        raise ValueError("y must be at least 3")
    ps = PrimeSet(y - 1)
    plist = [int(p) for p in ps.primes()]
    exact = _tree_sum([Fraction(1, p) for p in plist])
    with mpmath.workprec(precision_bits):
        value = mpmath.mpf(exact.numerator) / exact.denominator
        residual = value - mpmath.log(mpmath.log(y))
    return SumReport(
        kind="mertens",
        cutoffs={"y": y},
        value=value,
        term_count=len(plist),
        exact=exact,
        residual=residual,
    )


def small_prime_product(y: int, *, precision_bits: int = 96) -> SumReport:
    """prod over odd primes 2 < p < y of (1 + 1/p), exact rational and decimal."""
    if y < 3:
        raise ValueError("y must be at least 3")
    primes = _odd_primes_below(y)
    exact = Fraction(1)
    for p in primes:
        exact *= Fraction(p + 1, p)
    with mpmath.workprec(precision_bits):
        value = mpmath.mpf(exact.numerator) / exact.denominator
    return SumReport(
        kind="product",
        cutoffs={"y": y},
        value=value,
        term_count=len(primes),
        exact=exact,
    )


# ----------------------------------------------------- k2 solution counting


def count_k2_solutions(
    d: int, m1: int, m2: int, k1: int, k_max: int, *, zero_in_n: bool = True
) -> int:
    """Count k2 in the convention range [lo, k_max] with d dividing h.

    Divisibility reduces to 2**(k2*k2) ≡ l (mod d) with l the reduced value of
    2**(m1*m1) + 2**(m2*m2) - 2**(k1*k1); taking the discrete log j of l turns
    that into k2*k2 ≡ j modulo the order of 2, whose residue roots are counted
    along arithmetic progressions. Zero when l is not a unit or lies outside
    the subgroup generated by 2.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError("d must be odd and positive")
    if min(m1, m2, k1) < 0 or k_max < 0:
        raise ValueError("exponents and k_max must be nonnegative")
    lo = 0 if zero_in_n else 1
    if k_max < lo:
        return 0
    if d == 1:
        return k_max - lo + 1
    l = (pow(2, m1 * m1, d) + pow(2, m2 * m2, d) - pow(2, k1 * k1, d)) % d
    if math.gcd(l, d) != 1:
        return 0
    j = arith.discrete_log_base2(l, d)
    if j is None:
        return 0
    e = arith.mult_order(2, d).order
    total = 0
    for r in quadroots.enumerate_roots(j, e):
        first = lo + (r - lo) % e
        if first <= k_max:
            total += (k_max - first) // e + 1
    return total


def count_k2_bruteforce(
    d: int, m1: int, m2: int, k1: int, k_max: int, *, zero_in_n: bool = True
) -> int:
    """Oracle: test d | h directly with exact integers for every candidate k2."""
    if d < 1 or d % 2 == 0:
        raise ValueError("d must be odd and positive")
    lo = 0 if zero_in_n else 1
    base = (1 << m1 * m1) + (1 << m2 * m2) - (1 << k1 * k1)
    return sum(1 for k2 in range(lo, k_max + 1) if (base - (1 << k2 * k2)) % d == 0)


def k2_solution_bound(order: int, k_max: int) -> float:
    """(floor(k_max/order) + 1) * 4 * sqrt(order): periods times the root cap."""
    return (k_max // order + 1) * 4.0 * math.sqrt(order)


@dataclass
class K2ScanReport:
    """Outcome of the sampled k2-count comparison against the oracle."""

    checked: int
    mismatches: list[tuple[int, int, int, int, int, int]]  # (d, m1, m2, k1, fast, brute)
    bound_violations: list[tuple[int, int, int, int, int]]  # (d, m1, m2, k1, count)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.bound_violations


def verify_k2_counts(
    samples: int = 1000,
    *,
    d_max: int = 10**4,
    exp_max: int = 10,
    k_max: int = 100,
    seed: int = 0,
    zero_in_n: bool = True,
) -> K2ScanReport:
    """Seeded random instances: subgroup-based count vs oracle, plus the cap.

    The cap (floor(k_max/e2) + 1) * 4 * sqrt(e2) is checked exactly by
    squaring both sides.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = random.Random(seed)
    mismatches = []
    violations = []
    for _ in range(samples):
        d = rng.randrange(1, d_max + 1, 2)
        m1 = rng.randint(0, exp_max)
        m2 = rng.randint(0, exp_max)
        k1 = rng.randint(0, exp_max)
        fast = count_k2_solutions(d, m1, m2, k1, k_max, zero_in_n=zero_in_n)
        brute = count_k2_bruteforce(d, m1, m2, k1, k_max, zero_in_n=zero_in_n)
        if fast != brute:
            mismatches.append((d, m1, m2, k1, fast, brute))
        e = order_of_two(d)
        periods = k_max // e + 1
        if fast * fast > 16 * periods * periods * e:
            violations.append((d, m1, m2, k1, fast))
    return K2ScanReport(checked=samples, mismatches=mismatches, bound_violations=violations)


# ------------------------------------------------------- assembled double sum


@dataclass
class AssemblyReport:
    """The weighted quadruple count next to its two bounding channels.

    lhs sums mu^2(d)/d times the number of exponent quadruples with h != 0
    and d | h; the channels bound the same object with the order of 2 mod d
    split at the window length, mirroring the proof's decomposition. Both are
    reported, never asserted against each other: the analytic inequality
    carries unspecified absolute constants.
    """

    exp_max: int
    d_max: int
    smooth_y: int
    zero_in_n: bool
    lhs: Fraction
    lhs_exchanged: Fraction
    quadruple_count: int
    row_count: int
    small_order_channel: mpmath.mpf
    large_order_channel: mpmath.mpf
    ratio: mpmath.mpf | None
    window_hypothesis_violations: int


def double_sum_assembly(
    exp_max: int,
    d_max: int,
    smooth_y: int,
    *,
    zero_in_n: bool = True,
    config: RunConfig | None = None,
    precision_bits: int | None = None,
) -> AssemblyReport:
    """Exact weighted count of quadruples with d | h, with its bound channels.

    The window length T is the number of admissible exponents; channel one
    (order <= T) uses the progression cap T**3 * (floor(T/e2) + 1) * 4*sqrt(e2)
    and channel two (order > T) the windowed-count cap T**3 * (4*T**(2/3)+1).
    The windowed cap needs a window of length at least 2; rows where that
    hypothesis fails are counted, not silently dropped.
    """
    cfg = config or DEFAULT_CONFIG
    prec = precision_bits if precision_bits is not None else cfg.precision_bits
    if exp_max < 1 or d_max < 1:
        raise ValueError("exp_max and d_max must be positive")
    if smooth_y < 3:
        raise ValueError("smooth_y must be at least 3")
    lo = 0 if zero_in_n else 1
    window = exp_max - lo + 1
    if window**4 * d_max > cfg.work_budget:
        raise BudgetError(
            f"{window**4} quadruples x {d_max} moduli exceeds the work budget {cfg.work_budget}"
        )
    powers = [1 << (i * i) for i in range(exp_max + 1)]
    exps = range(lo, exp_max + 1)
    h_values = [
        h
        for a in exps
        for b in exps
        for c in exps
        for d_ in exps
        if (h := powers[a] + powers[b] - powers[c] - powers[d_]) != 0
    ]
    entries = [(1, arith.UNIT_FACTOR)] if d_max > 1 else []
    entries += _smooth_squarefree(_odd_primes_below(smooth_y), d_max)
    entries.sort()

    lhs_terms = []
    with mpmath.workprec(prec):
        small_channel = mpmath.mpf(0)
        large_channel = mpmath.mpf(0)
        flagged = 0
        t3 = mpmath.mpf(window) ** 3
        window_cap = 4 * mpmath.mpf(window) ** (mpmath.mpf(2) / 3) + 1
        for d, _ in entries:
            hits = sum(1 for h in h_values if h % d == 0)
            if hits:
                lhs_terms.append(Fraction(hits, d))
            e = order_of_two(d)
            if e <= window:
                cap = (window // e + 1) * 4 * mpmath.sqrt(e)
                small_channel += t3 * cap / d
            else:
                large_channel += t3 * window_cap / d
                if window < 2:
                    flagged += 1
        lhs = _tree_sum(lhs_terms)
        exchanged_terms = []
        for h in h_values:
            inner = [Fraction(1, d) for d, _ in entries if h % d == 0]
            exchanged_terms.append(_tree_sum(inner))
        lhs_exchanged = _tree_sum(exchanged_terms)
        total_bound = small_channel + large_channel
        ratio = None
        if total_bound > 0:
            ratio = mpmath.mpf(lhs.numerator) / lhs.denominator / total_bound
    return AssemblyReport(
        exp_max=exp_max,
        d_max=d_max,
        smooth_y=smooth_y,
        zero_in_n=zero_in_n,
        lhs=lhs,
        lhs_exchanged=lhs_exchanged,
        quadruple_count=len(h_values),
        row_count=len(entries),
        small_order_channel=small_channel,
        large_order_channel=large_channel,
        ratio=ratio,
        window_hypothesis_violations=flagged,
    )
