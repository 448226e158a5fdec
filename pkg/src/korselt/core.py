"""The defining divisibility predicate and its closed-form companions:
candidate values, global base bounds, and upper-bound attainment."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Rational, SquarefreeFactorization


@dataclass(frozen=True)
class KorseltSet:
    """All Korselt bases of n in ascending order, excluding 0 and n itself."""

    n: int
    bases: tuple[Rational, ...]

    @property
    def weight(self) -> int:
        return len(self.bases)

    @property
    def negatives(self) -> tuple[Rational, ...]:
        """The bases below zero, ascending."""
        return tuple(b for b in self.bases if b < 0)

    @property
    def positives(self) -> tuple[Rational, ...]:
        """The bases above zero, ascending."""
        return tuple(b for b in self.bases if b > 0)


@dataclass(frozen=True)
class BoundsReport:
    """Exact global bounds for the bases of n.

    upper_argmin records which of the two upper candidates attains the
    minimum: "second_largest_prime" for the k = m-1 candidate anchored at
    p_(m-1), "largest_prime" for the k = m candidate anchored at p_m, or
    "tie" when they coincide.
    """

    n: int
    lower: Rational
    upper: Rational
    upper_argmin: str


def is_korselt_base(f: SquarefreeFactorization, alpha) -> bool:
    """True iff (a2*p - a1) divides (a2*n - a1) for every prime p | n, where
    alpha = a1/a2 in lowest terms with a2 > 0.

    When alpha equals a prime factor the divisor is zero, and zero divides
    nothing but zero, so such alphas are never bases.  alpha in {0, n} is
    rejected outright: 0 is excluded by convention and n would pass vacuously.
    """
    a = Fraction(alpha)
    if a == 0 or a == f.n:
        raise ValueError(f"alpha must differ from 0 and {f.n}")
    a1, a2 = a.numerator, a.denominator
    t = a2 * f.n - a1
    for p in f.primes:
        d = a2 * p - a1
        if d == 0 or t % d:
            return False
    return True


def m_value(n: int, k: int, p: int) -> Rational:
    """The candidate value (n + k*p)/(k + 1), defined for k != -1 and p | n."""
    if k == -1:
        raise ValueError("k = -1 does not define a candidate value")
    if n % p:
        raise ValueError(f"{p} does not divide {n}")
    return Fraction(n + k * p, k + 1)


def korselt_bounds(f: SquarefreeFactorization) -> BoundsReport:
    """Compute the interval [lower, upper] that contains every base of n."""
    n, m = f.n, f.m
    lower = m_value(n, -m - 2, f.primes[0])
    second = m_value(n, m - 1, f.primes[m - 2])
    last = m_value(n, m, f.primes[m - 1])
    if second < last:
        tag = "second_largest_prime"
    elif last < second:
        tag = "largest_prime"
    else:
        tag = "tie"
    return BoundsReport(n, lower, min(second, last), tag)


def upper_attainment(f: SquarefreeFactorization, ks: KorseltSet) -> int | None:
    """Smallest j in 1..m whose candidate value m_value(n, j, p_j) is itself a
    base, or None when no candidate is attained."""
    members = set(ks.bases)
    for j in range(1, f.m + 1):
        if m_value(f.n, j, f.primes[j - 1]) in members:
            return j
    return None
