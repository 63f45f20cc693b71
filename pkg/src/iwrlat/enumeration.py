"""Enumerate and count the well-rounded classes sharing a determinant M*sqrt(D).

Every class with second coordinate r comes from a divisor b of c = r^2 D in
the half-open window sqrt(c) < b <= sqrt(3c): writing a = c/b, the candidate
is p = (b-a)/2, q = (b+a)/2, which needs a = b (mod 2) and gcd(p, q) = 1.
Window membership is tested exactly on integers (b^2 > c, b^2 <= 3c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, sqrt

from .arith import divisors, factorize, mobius, omega, tau
from .classes import DeterminantSpec, IwrLattice, SimilarityClass

__all__ = [
    "DeterminantSpec",
    "CountReport",
    "solutions_for_r",
    "count_classes",
    "count_primitive",
    "count_windowed",
    "mobius_identity_check",
    "enumerate_iwr",
    "enumerate_iwr_via_mn",
    "count_bound",
    "count_diagnostic",
    "count_report",
]


def solutions_for_r(r: int, D: int, include_p_zero: bool = False) -> list[tuple[int, int]]:
    """Primitive (p, q) with q^2 - p^2 = r^2 D and angle in [pi/3, pi/2).

    include_p_zero admits the right-angle solution p = 0 (divisor b = sqrt(c),
    possible only when r^2 D is a perfect square, i.e. D = 1); primitivity
    then forces q = 1.  Sorted by q ascending.
    """
    if r < 1 or D < 1:
        raise ValueError("r and D must be positive")
    c = r * r * D
    out = []
    for b in divisors(c):
        bb = b * b
        if bb <= c and not (include_p_zero and bb == c):
            continue
        if bb > 3 * c:
            break
        a = c // b
        if (a + b) % 2:
            continue
        p, q = (b - a) // 2, (a + b) // 2
        if gcd(p, q) == 1:
            out.append((p, q))
    return out


def count_classes(r: int, D: int) -> int:
    """Classes of type D with second coordinate exactly r (p > 0)."""
    return len(solutions_for_r(r, D))


def _is_power_of_two(n: int) -> bool:
    return n & (n - 1) == 0


def count_primitive(r: int, D: int) -> int:
    """Primitive p > 0 solutions of q^2 - p^2 = r^2 D with no angle constraint.

    Closed form from the factor-pair structure of c = r^2 D:
      - c odd, c > 1:                        2^(omega(c) - 1)
      - 8 | c with an odd prime divisor:     2^(omega(c) - 1)
      - c = 2^j:                             1 if j >= 3 else 0
      - otherwise (c = 1, or 2 | c, 8 !| c): 0
    """
    if r < 1 or D < 1:
        raise ValueError("r and D must be positive")
    c = r * r * D
    if c == 1:
        return 0
    w = omega(c)
    if c % 2:
        return 2 ** (w - 1)
    if c % 8 == 0:
        if _is_power_of_two(c):
            return 1 if c >= 8 else 0
        return 2 ** (w - 1)
    return 0


def count_windowed(r: int, D: int) -> int:
    """Divisors of r^2 D in the angle window with matching parity (no gcd filter)."""
    if r < 1 or D < 1:
        raise ValueError("r and D must be positive")
    c = r * r * D
    n = 0
    for b in divisors(c):
        bb = b * b
        if bb <= c:
            continue
        if bb > 3 * c:
            break
        if (b + c // b) % 2 == 0:
            n += 1
    return n


def mobius_identity_check(r: int, D: int) -> bool:
    """Both inversion identities tying the gcd-filtered and unfiltered counts.

    count_windowed(r) = sum over g | r of count_classes(r/g), and back via Moebius.
    """
    ds = divisors(r)
    direct = sum(count_classes(r // g, D) for g in ds)
    if direct != count_windowed(r, D):
        return False
    inverted = sum(mobius(r // g) * count_windowed(g, D) for g in ds)
    return inverted == count_classes(r, D)


def enumerate_iwr(spec: DeterminantSpec, include_square_class: bool = True) -> list[IwrLattice]:
    """All integral well-rounded lattices with determinant M*sqrt(D).

    One lattice per class with r | M, scaled by k = M/r; sorted by
    (minimum, q, p).  The square lattice sqrt(M)*Z^2 appears only for D = 1
    and only when include_square_class is set.
    """
    M, D = spec.M, spec.D
    found = []
    for r in divisors(M):
        k = M // r
        for p, q in solutions_for_r(r, D, include_p_zero=include_square_class):
            found.append(IwrLattice(SimilarityClass(p, r, q, D), k))
    found.sort(key=lambda lat: (lat.minimum, lat.cls.q, lat.cls.p))
    return found


def enumerate_iwr_via_mn(spec: DeterminantSpec) -> list[IwrLattice]:
    """Same list as enumerate_iwr but generated from coprime (m, n) pairs.

    Independent route: admissible pairs -> classes -> dedup; used to
    cross-check the divisor-window sweep.
    """
    from .optimize import admissible_pairs  # deferred: optimize builds on this module

    from .classes import class_from_mn

    seen: dict[tuple[int, int, int], IwrLattice] = {}
    for pair in admissible_pairs(spec):
        cls = class_from_mn(pair)
        if cls.triple() not in seen:
            seen[cls.triple()] = IwrLattice(cls, spec.M // cls.r)
    out = list(seen.values())
    out.sort(key=lambda lat: (lat.minimum, lat.cls.q, lat.cls.p))
    return out


def count_bound(spec: DeterminantSpec) -> Fraction:
    """Exact upper bound (1/2) * sum over r | M of 2^omega(r D) for the class count.

    Valid for D > 1; for D = 1 the square class escapes it (the r = D = 1
    term contributes only 1/2).
    """
    return Fraction(1, 2) * sum(2 ** omega(r * spec.D) for r in divisors(spec.M))


def count_diagnostic(spec: DeterminantSpec) -> float:
    """Heuristic size estimate sum_{r|M} sum_{g|r} mu(r/g) tau(g^2 D)/sqrt(omega(g D)).

    Terms with omega(g D) = 0 (g = D = 1) are skipped.  Reported only; the
    estimate is not an invariant and is never asserted against the true count.
    """
    total = 0.0
    for r in divisors(spec.M):
        for g in divisors(r):
            w = omega(g * spec.D)
            if w == 0:
                continue
            total += mobius(r // g) * tau(g * g * spec.D) / sqrt(w)
    return total


@dataclass(frozen=True)
class CountReport:
    """Per-divisor counting table for one determinant.

    rows hold (r, n_classes, n_primitive, n_windowed) for each r | M;
    total sums n_classes (square class excluded), square_classes counts the
    p = 0 lattice separately (1 iff D = 1), bound is the exact half-sum
    estimate and diagnostic the floating heuristic.
    """

    spec: DeterminantSpec
    rows: tuple[tuple[int, int, int, int], ...]
    total: int
    square_classes: int
    bound: Fraction
    diagnostic: float


def count_report(spec: DeterminantSpec) -> CountReport:
    rows = tuple(
        (r, count_classes(r, spec.D), count_primitive(r, spec.D), count_windowed(r, spec.D))
        for r in divisors(spec.M)
    )
    return CountReport(
        spec=spec,
        rows=rows,
        total=sum(row[1] for row in rows),
        square_classes=1 if spec.D == 1 else 0,
        bound=count_bound(spec),
        diagnostic=count_diagnostic(spec),
    )
