import random

import pytest

from iwrlat.arith import (
    Factorization,
    divisors,
    factorize,
    is_prime,
    is_squarefree,
    mobius,
    omega,
    squarefree_part,
    tau,
)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(45).factors == ((3, 2), (5, 1))
    assert factorize(2880).factors == ((2, 6), (3, 2), (5, 1))


def test_factorize_rejects_nonpositive():
    for bad in (0, -1, -45):
        with pytest.raises(ValueError):
            factorize(bad)


def test_factorize_large_semiprime():
    p, q = 1_000_003, 1_000_033
    f = factorize(p * q)
    assert f.factors == ((p, 1), (q, 1))


def test_factorization_reconstruct():
    f = factorize(360)
    assert isinstance(f, Factorization)
    assert f.reconstruct() == 360 == f.value


def test_full_reconstruction_sweep_to_one_million():
    # the strongest functional check factorize gets: every value round-trips
    for n in range(1, 1_000_001):
        f = factorize(n)
        assert f.reconstruct() == n


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(24) == [1, 2, 3, 4, 6, 8, 12, 24]
    assert divisors(45) == [1, 3, 5, 9, 15, 45]
    with pytest.raises(ValueError):
        divisors(0)


def test_squarefree_part_examples():
    assert squarefree_part(1) == (1, 1)
    assert squarefree_part(2880) == (5, 24)
    assert squarefree_part(153) == (17, 3)
    with pytest.raises(ValueError):
        squarefree_part(-4)


def test_standard_functions_examples():
    assert (mobius(1), omega(1), tau(1)) == (1, 0, 1)
    assert (mobius(45), omega(45), tau(45)) == (0, 2, 6)
    assert (mobius(30), omega(30), tau(30)) == (-1, 3, 8)
    for bad in (0, -7):
        for fn in (mobius, omega, tau):
            with pytest.raises(ValueError):
                fn(bad)


def test_mobius_divisor_sum():
    for n in range(1, 2001):
        total = sum(mobius(d) for d in divisors(n))
        assert total == (1 if n == 1 else 0)


def test_squarefree_part_identity():
    for n in range(1, 20_001):
        s, f = squarefree_part(n)
        assert s * f * f == n
        assert mobius(s) != 0


def test_tau_omega_match_divisors_and_factorization():
    for n in range(1, 5001):
        assert tau(n) == len(divisors(n))
        assert omega(n) == len(factorize(n).factors)


def test_is_squarefree_consistent_with_mobius():
    for n in range(1, 3001):
        assert is_squarefree(n) == (mobius(n) != 0)


def test_is_prime_known_values():
    primes = [2, 3, 5, 7, 97, 563, 7919, 10**9 + 7, 2**61 - 1]
    assert all(is_prime(p) for p in primes)
    composites = [1, 4, 9, 561, 1105, 6601, 10**12 + 1, 2**61 + 1]
    assert not any(is_prime(c) for c in composites)


def test_factorize_random_products():
    rng = random.Random(7)
    small_primes = [p for p in range(2, 200) if is_prime(p)]
    for _ in range(300):
        n = 1
        expect = {}
        for _ in range(rng.randint(1, 5)):
            p = rng.choice(small_primes)
            e = rng.randint(1, 4)
            n *= p**e
            expect[p] = expect.get(p, 0) + e
        f = factorize(n)
        assert dict(f.factors) == expect
