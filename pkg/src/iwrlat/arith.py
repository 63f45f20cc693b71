"""Exact integer arithmetic: factorization and multiplicative functions.

Everything here works on plain Python ints (arbitrary precision) and is
deterministic: trial division by a fixed prime table, then odd candidates,
with a Miller-Rabin certificate to stop early once the cofactor is prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

__all__ = [
    "Factorization",
    "factorize",
    "divisors",
    "squarefree_part",
    "is_squarefree",
    "mobius",
    "omega",
    "tau",
    "is_prime",
]

# witnesses proven sufficient for every n < 3.3e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(1000)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin, exact below 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=200_000)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        if not is_prime(m):
            # rare path: composite cofactor with prime factors > 1000
            f = 1009
            while f * f <= m:
                if m % f == 0:
                    e = 0
                    while m % f == 0:
                        m //= f
                        e += 1
                    out.append((f, e))
                    if m > 1 and is_prime(m):
                        break
                f += 2
        if m > 1:
            out.append((m, 1))
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer, exponents sorted by prime."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n


def factorize(n: int) -> Factorization:
    """Full prime factorization of n >= 1.  factorize(1) has no factors."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    return Factorization(n, _factor_tuple(n))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n).factors:
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def squarefree_part(n: int) -> tuple[int, int]:
    """Split n = s * f**2 with s squarefree; returns (s, f)."""
    s = f = 1
    for p, e in factorize(n).factors:
        if e % 2:
            s *= p
        f *= p ** (e // 2)
    return s, f


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for _, e in factorize(n).factors)


def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)**omega(n)."""
    fac = factorize(n).factors
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def omega(n: int) -> int:
    """Number of distinct prime divisors (omega(1) = 0)."""
    return len(factorize(n).factors)


def tau(n: int) -> int:
    """Number of positive divisors."""
    t = 1
    for _, e in factorize(n).factors:
        t *= e + 1
    return t
