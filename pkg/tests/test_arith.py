import math
import random

import numpy as np
import pytest

from romanoff import arith
from conftest import oracle_is_prime, oracle_order, oracle_trial_factors


def test_is_prime_small():
    mask = [oracle_is_prime(n) for n in range(2000)]
    assert [arith.is_prime(n) for n in range(2000)] == mask


def test_factorize_small_values():
    assert arith.factorize(1).factors == ()
    assert arith.factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert arith.factorize(2**40).factors == ((2, 40),)


def test_factorize_prime_oracle():
    n = 10**9 + 7
    assert oracle_is_prime(n)
    assert arith.factorize(n).factors == ((n, 1),)


def test_factorize_matches_trial_division():
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randint(1, 10**6)
        assert arith.factorize(n).factors == tuple(oracle_trial_factors(n))


def test_factorize_large_semiprime():
    p, q = 1_000_003, 1_000_033
    f = arith.factorize(p * q)
    assert f.factors == ((p, 1), (q, 1))


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        arith.factorize(0)
    with pytest.raises(ValueError):
        arith.mobius(0)


def test_mobius_values():
    assert arith.mobius(1) == 1
    assert arith.mobius(30) == -1
    assert arith.mobius(12) == 0


def test_largest_prime_factor():
    assert arith.largest_prime_factor(35) == 7
    assert arith.largest_prime_factor(2) == 2
    assert arith.largest_prime_factor(1) == arith.UNIT_FACTOR
    assert arith.UNIT_FACTOR < 2  # the unit passes every smoothness cutoff


def test_mobius_and_lpf_against_sieve_table():
    # SPF-built oracle tables, checked for every n up to 10**6
    limit = 10**6
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            sl = spf[p * p :: p]
            sl[sl == 0] = p
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    spf[1] = 1

    def table_mobius_lpf(n):
        mob, lpf = 1, 1
        while n > 1:
            p = int(spf[n])
            n //= p
            if n % p == 0:
                mob = 0
                while n % p == 0:
                    n //= p
            else:
                mob = -mob
            lpf = max(lpf, p)
        return mob, lpf

    for n in range(1, limit + 1):
        f = arith.factorize(n)
        assert (f.mobius, f.largest_prime_factor) == table_mobius_lpf(n), n


def test_pow_mod():
    assert arith.pow_mod(2, 10, 1000) == 24
    assert arith.pow_mod(5, 0, 7) == 1
    assert arith.pow_mod(3, 5, 1) == 0
    with pytest.raises(ValueError):
        arith.pow_mod(2, 3, 0)
    with pytest.raises(ValueError):
        arith.pow_mod(2, -1, 5)


def test_pow_mod_against_repeated_squaring():
    def slow_pow(a, e, m):
        result = 1 % m
        base = a % m
        while e:
            if e & 1:
                result = result * base % m
            base = base * base % m
            e >>= 1
        return result

    rng = random.Random(3)
    for _ in range(200):
        a = rng.randint(0, 2**62)
        e = rng.randint(0, 2**62)
        m = rng.randint(1, 2**62)
        assert arith.pow_mod(a, e, m) == slow_pow(a, e, m)
    assert arith.pow_mod(2, 2**62, 10**9 + 7) == slow_pow(2, 2**62, 10**9 + 7)


def test_mult_order_examples():
    assert arith.mult_order(2, 7).order == 3
    assert arith.mult_order(2, 1).order == 1
    assert arith.mult_order(2, 9).order == 6


def test_mult_order_rejects_shared_factor():
    with pytest.raises(ValueError):
        arith.mult_order(2, 6)
    with pytest.raises(ValueError):
        arith.mult_order(10, 0)


def test_mult_order_matches_stepping():
    for d in range(1, 800, 2):
        rec = arith.mult_order(2, d)
        assert rec.order == oracle_order(2, d), d
        assert pow(2, rec.order, d) == 1 % d
        assert arith.factorize(d).totient % rec.order == 0
    rng = random.Random(5)
    for _ in range(300):
        d = rng.randint(2, 10**4)
        a = rng.randint(2, d - 1)
        if math.gcd(a, d) != 1:
            continue
        assert arith.mult_order(a, d).order == oracle_order(a, d), (a, d)


def test_kronecker_at_two():
    assert arith.kronecker_symbol(1, 2) == 1
    assert arith.kronecker_symbol(5, 2) == -1
    assert arith.kronecker_symbol(4, 2) == 0
    assert arith.kronecker_symbol(0, 2) == 0
    assert arith.kronecker_symbol(-3, 2) == -1  # -3 ≡ 5 (mod 8)
    with pytest.raises(ValueError):
        arith.kronecker_symbol(3, 2)
    with pytest.raises(ValueError):
        arith.kronecker_symbol(6, 2)


def test_kronecker_odd_primes_against_square_tables():
    # residue-table oracle: chi(a) = 1 iff a is a nonzero square mod p
    mask = [oracle_is_prime(n) for n in range(1000)]
    for p in range(3, 1000):
        if not mask[p]:
            continue
        squares = {z * z % p for z in range(1, p)}
        for a in range(p):
            chi = arith.kronecker_symbol(a, p)
            if a == 0:
                assert chi == 0
            else:
                assert (chi == 1) == (a in squares), (a, p)


def test_kronecker_rejects_composite_odd():
    with pytest.raises(ValueError):
        arith.kronecker_symbol(2, 9)


def test_discrete_log_examples():
    assert arith.discrete_log_base2(1, 7) == 0
    assert arith.discrete_log_base2(4, 7) == 2
    assert arith.discrete_log_base2(3, 7) is None
    assert arith.discrete_log_base2(5, 1) == 0


def test_discrete_log_rejects_bad_inputs():
    with pytest.raises(ValueError):
        arith.discrete_log_base2(3, 8)  # even modulus
    with pytest.raises(ValueError):
        arith.discrete_log_base2(3, 9)  # gcd(3, 9) != 1


def test_discrete_log_round_trip():
    # every odd modulus up to 10**4, one random exponent each (plus a dense
    # multi-exponent pass on the small ones)
    rng = random.Random(9)
    for d in range(3, 500, 2):
        e = arith.mult_order(2, d).order
        for _ in range(3):
            j = rng.randint(0, 3 * e)
            got = arith.discrete_log_base2(arith.pow_mod(2, j, d), d)
            assert got is not None and got % e == j % e, (d, j)
            assert 0 <= got < e
    for d in range(3, 10**4, 2):
        e = arith.mult_order(2, d).order
        j = rng.randint(0, 10**6)
        got = arith.discrete_log_base2(arith.pow_mod(2, j, d), d)
        assert got == j % e, (d, j)


def test_discrete_log_outside_subgroup():
    # 12 is a unit mod 35 but not a power of 2: <2> mod 35 = {1,2,4,8,16,32,29,23,11,22,9,18}
    powers = {arith.pow_mod(2, j, 35) for j in range(arith.mult_order(2, 35).order)}
    assert 12 not in powers
    assert arith.discrete_log_base2(12, 35) is None
