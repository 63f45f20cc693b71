"""Similarity-class coordinates for planar integral well-rounded lattices.

A similarity class is an integer tuple (p, r, q, D) with D squarefree,
p^2 + D r^2 = q^2, gcd(p, q) = 1 and 2p <= q.  The minimal lattice of the
class has Gram matrix [[q, p], [p, q]]; scaling by k gives every integral
well-rounded lattice in the class, with minimum k*q and determinant k*r*sqrt(D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import is_squarefree, squarefree_part

__all__ = [
    "NotIntegralError",
    "NotPositiveDefiniteError",
    "NotWellRoundedError",
    "SimilarityClass",
    "MnPair",
    "IwrLattice",
    "GramMatrix",
    "DeterminantSpec",
    "e_exponent",
    "class_from_mn",
    "angle_cos",
    "angle_sin_sq",
    "lattice_gram",
    "minimal_lattice",
    "gauss_reduce",
    "classify_gram",
    "dioph_param",
]


class NotIntegralError(ValueError):
    """Gram entries must be plain integers."""


class NotPositiveDefiniteError(ValueError):
    """Gram matrix must be positive definite."""


class NotWellRoundedError(ValueError):
    """Lattice has distinct successive minima, so no class coordinates exist."""


@dataclass(frozen=True)
class SimilarityClass:
    """Coordinates (p, r, q, D) of a well-rounded similarity class.

    p = 0 is the square class: it forces D = 1 and q = r = 1 (gcd(0, q) = q).
    """

    p: int
    r: int
    q: int
    D: int

    def __post_init__(self):
        for name in ("p", "r", "q", "D"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise NotIntegralError(f"{name} must be an int, got {v!r}")
        if self.p < 0 or self.r < 1 or self.q < 1 or self.D < 1:
            raise ValueError(f"coordinates out of range: {self}")
        if not is_squarefree(self.D):
            raise ValueError(f"D must be squarefree, got {self.D}")
        if self.p * self.p + self.D * self.r * self.r != self.q * self.q:
            raise ValueError(f"p^2 + D r^2 != q^2 for {self}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd(p, q) != 1 for {self}")
        if 2 * self.p > self.q:
            raise ValueError(f"2p > q for {self} (angle outside [pi/3, pi/2])")

    def triple(self) -> tuple[int, int, int]:
        return (self.p, self.r, self.q)


@dataclass(frozen=True)
class MnPair:
    """Coprime generator pair (m, n) for classes of type D.

    The band D n^2 <= 3 m^2 and m^2 <= 3 D n^2 keeps the generated angle
    inside [pi/3, pi/2].
    """

    m: int
    n: int
    D: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.D < 1:
            raise ValueError(f"m, n, D must be positive: {self}")
        if not is_squarefree(self.D):
            raise ValueError(f"D must be squarefree, got {self.D}")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"gcd(m, n) != 1 for {self}")
        if self.D * self.n * self.n > 3 * self.m * self.m:
            raise ValueError(f"pair below band (D n^2 > 3 m^2): {self}")
        if self.m * self.m > 3 * self.D * self.n * self.n:
            raise ValueError(f"pair above band (m^2 > 3 D n^2): {self}")


@dataclass(frozen=True)
class DeterminantSpec:
    """Determinant M * sqrt(D) of an integral well-rounded lattice."""

    M: int
    D: int

    def __post_init__(self):
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")
        if self.D < 1 or not is_squarefree(self.D):
            raise ValueError(f"D must be squarefree >= 1, got {self.D}")


@dataclass(frozen=True)
class IwrLattice:
    """Scaled class representative sqrt(k/q) * (minimal lattice), Gram k[[q,p],[p,q]]."""

    cls: SimilarityClass
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"k must be a positive int, got {self.k!r}")

    @property
    def minimum(self) -> int:
        """Squared length of the shortest nonzero vectors."""
        return self.k * self.cls.q

    @property
    def determinant(self) -> DeterminantSpec:
        return DeterminantSpec(self.k * self.cls.r, self.cls.D)

    def gram(self) -> "GramMatrix":
        k, c = self.k, self.cls
        return GramMatrix(k * c.q, k * c.p, k * c.q)


@dataclass(frozen=True)
class GramMatrix:
    """Positive definite integral binary form [[a, b], [b, c]]."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise NotIntegralError(f"Gram entry {name} must be an int, got {v!r}")
        if self.a <= 0 or self.a * self.c - self.b * self.b <= 0:
            raise NotPositiveDefiniteError(f"not positive definite: {self}")

    def det(self) -> int:
        return self.a * self.c - self.b * self.b

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.b, self.c]]


def e_exponent(m: int, n: int, D: int) -> int:
    """Normalization exponent: 0 if 2 | D, or if D is odd and mn is even; else 1."""
    if D % 2 == 0 or ((D + 1) % 2 == 0 and (m * n) % 2 == 0):
        return 0
    return 1


def class_from_mn(pair: MnPair) -> SimilarityClass:
    """Class generated by a coprime pair: divide (|m^2-Dn^2|, 2mn, m^2+Dn^2) by 2^e*gcd(m,D)."""
    m, n, D = pair.m, pair.n, pair.D
    g = (2 ** e_exponent(m, n, D)) * gcd(m, D)
    num_p = abs(m * m - D * n * n)
    num_r = 2 * m * n
    num_q = m * m + D * n * n
    if num_p % g or num_r % g or num_q % g:
        raise ValueError(f"normalizer {g} does not divide the raw triple for {pair}")
    return SimilarityClass(num_p // g, num_r // g, num_q // g, D)


def angle_cos(cls: SimilarityClass) -> Fraction:
    """Cosine of the angle between minimal vectors, exactly p/q."""
    return Fraction(cls.p, cls.q)


def angle_sin_sq(cls: SimilarityClass) -> Fraction:
    """Squared sine of that angle, exactly r^2 D / q^2."""
    return Fraction(cls.r * cls.r * cls.D, cls.q * cls.q)


def lattice_gram(lat: IwrLattice) -> GramMatrix:
    return lat.gram()


def minimal_lattice(cls: SimilarityClass) -> IwrLattice:
    """k = 1 representative; its minimum q divides every minimum in the class."""
    return IwrLattice(cls, 1)


def _mat_mul(u, v):
    return (
        u[0] * v[0] + u[1] * v[2],
        u[0] * v[1] + u[1] * v[3],
        u[2] * v[0] + u[3] * v[2],
        u[2] * v[1] + u[3] * v[3],
    )


def gauss_reduce(g: GramMatrix) -> tuple[GramMatrix, tuple[tuple[int, int], tuple[int, int]]]:
    """Lagrange-Gauss reduction of a positive definite integral binary form.

    Returns (reduced, U) with U integral, det U = +-1, U^T g U = reduced and
    0 <= 2 b <= a <= c in the reduced form.  The sign of b is canonicalized to
    be nonnegative, so equivalent inputs land on one representative.
    """
    a, b, c = g.a, g.b, g.c
    u = (1, 0, 0, 1)
    while True:
        if abs(2 * b) > a:
            # shift the second basis vector by -t times the first: b -> b - t a
            t = (2 * b + a) // (2 * a)
            c = c - 2 * t * b + t * t * a
            b = b - t * a
            u = _mat_mul(u, (1, -t, 0, 1))
        if c < a:
            a, c = c, a
            u = _mat_mul(u, (0, 1, 1, 0))
            continue
        break
    if b < 0:
        b = -b
        u = _mat_mul(u, (1, 0, 0, -1))
    return GramMatrix(a, b, c), ((u[0], u[1]), (u[2], u[3]))


def classify_gram(g: GramMatrix) -> tuple[SimilarityClass, int]:
    """Recover (class, k) from an integral Gram matrix.

    Reduces first; a well-rounded reduced form has equal diagonal k*q with
    off-diagonal k*p, so k = gcd(diagonal, off-diagonal) and D, r come from
    the squarefree split of q^2 - p^2.
    """
    reduced, _ = gauss_reduce(g)
    a, b = reduced.a, reduced.b
    if reduced.c != a:
        raise NotWellRoundedError(
            f"reduced form {reduced.rows()} has distinct successive minima {a} < {reduced.c}"
        )
    if b == 0:
        p, q, k = 0, 1, a
    else:
        k = gcd(a, b)
        p, q = b // k, a // k
    D, r = squarefree_part(q * q - p * p)
    return SimilarityClass(p, r, q, D), k


def dioph_param(
    alpha: int,
    beta: int,
    gamma: int,
    delta: int,
    base: tuple[int, int, int],
    pair: tuple[int, int],
) -> tuple[int, int, int]:
    """Parameterize integral solutions of alpha x^2 + beta x y + gamma y^2 = delta z^2.

    Given one solution `base` = (a, b, c) with c != 0 and a coprime parameter
    pair (m, n) with m >= 0, produces another solution; every solution is a
    rational multiple of one produced this way (z is determined up to sign,
    the + branch is returned).
    """
    a, b, c = base
    m, n = pair
    if beta * beta == 4 * alpha * gamma:
        raise ValueError("degenerate form: beta^2 = 4 alpha gamma")
    if delta == 0 or c == 0:
        raise ValueError("delta and base z-coordinate must be nonzero")
    if alpha * a * a + beta * a * b + gamma * b * b != delta * c * c:
        raise ValueError(f"base {base} does not solve the equation")
    if m < 0 or gcd(m, n) != 1:
        raise ValueError(f"parameter pair {pair} must be coprime with m >= 0")
    x = gamma * n * (a * n - 2 * b * m) - (alpha * a + beta * b) * m * m
    y = alpha * m * (b * m - 2 * a * n) - (gamma * b + beta * a) * n * n
    z = c * (alpha * m * m + beta * m * n + gamma * n * n)
    if alpha * x * x + beta * x * y + gamma * y * y != delta * z * z:
        raise AssertionError("parameterization produced a non-solution")
    return x, y, z
