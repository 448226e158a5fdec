"""Enumeration engines: the production divisor-pair search for the rational
base set, an independent windowed oracle, the integer restriction, weights,
inverse base-set queries, and Carmichael scanning."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from .arith import (
    NotCompositeError,
    NotSquarefreeError,
    Rational,
    SquarefreeFactorization,
    factor_squarefree,
    signed_divisors,
)
from .core import KorseltSet, is_korselt_base


@dataclass(frozen=True)
class BaseSetRecord:
    """All squarefree composite n <= limit that admit alpha as a base."""

    alpha: Rational
    limit: int
    members: tuple[int, ...]


def squarefree_composites(lo: int, hi: int) -> Iterator[SquarefreeFactorization]:
    """Factorizations of every squarefree composite in [lo, hi], ascending."""
    for n in range(max(lo, 6), hi + 1):
        try:
            yield factor_squarefree(n)
        except (NotSquarefreeError, NotCompositeError):
            continue


def q_korselt_set(f: SquarefreeFactorization) -> KorseltSet:
    """The complete set of rational bases of n, found by divisor-pair search.

    For reduced alpha = a1/a2 the defining condition (a2*p - a1) | (a2*n - a1)
    is equivalent to (a2*p - a1) | (n - p): the dividend minus a2*(n - p) is
    the divisor itself, and gcd(a2*p - a1, a2) = 1.  So for the two smallest
    primes p < q the integers d = a2*p - a1 and e = a2*q - a1 range over the
    signed divisors of n - p and n - q, and e - d = a2*(q - p) pins a2 and
    then a1.  Candidates with gcd(a1, a2) > 1 are skipped rather than reduced;
    the reduced representative arises from its own pair (d/g, e/g).  The
    remaining primes are screened with the same reduced divisibility test.
    Cost is O(tau(n - p) * tau(n - q) * m) exact-integer work.
    """
    n = f.n
    p, q = f.primes[0], f.primes[1]
    rest = f.primes[2:]
    step = q - p
    found = set()
    es = signed_divisors(n - q)
    for d in signed_divisors(n - p):
        for e in es:
            de = e - d
            if de < step or de % step:
                continue  # a2 = de/step must be a positive integer
            a2 = de // step
            a1 = a2 * p - d
            if a1 == 0 or gcd(a1, a2) != 1 or (a2 == 1 and a1 == n):
                continue
            for pi in rest:
                di = a2 * pi - a1
                if di == 0 or (n - pi) % di:
                    break
            else:
                found.add(Fraction(a1, a2))
    return KorseltSet(n, tuple(sorted(found)))


def oracle_q_korselt_set(f: SquarefreeFactorization) -> KorseltSet:
    """The same set as q_korselt_set, computed by brute k-window enumeration.

    Every base alpha equals (n + k*p1)/(k + 1) for some integer k != -1 with
    k + 1 = (n - p1)/(alpha - p1).  Since |alpha - p1| >= 1/a2 and
    a2*(p2 - p1) = (a2*p2 - a1) - (a2*p1 - a1) is a difference of divisors of
    n - p2 and n - p1, we get a2 < 2n and |k + 1| <= (n - p1)*a2 < 2n^2, so
    the window |k| <= 2n^2 is exhaustive.  Per k, divisibility is screened on
    the unreduced pair (n + k*p1, k + 1); scaling divisor and dividend by the
    common factor preserves divisibility, and the few survivors are re-tested
    in reduced form.  Quadratic in n: intended for modest n only.
    """
    n = f.n
    p1 = f.primes[0]
    primes = f.primes
    window = 2 * n * n
    found = set()
    for k in range(-window, window + 1):
        if k == -1 or k == 0:  # k = 0 gives alpha = n, excluded by definition
            continue
        num = n + k * p1
        if num == 0:  # alpha = 0, excluded by definition
            continue
        den = k + 1
        t = den * n - num
        for p in primes:
            d = den * p - num
            if d == 0 or t % d:
                break
        else:
            if den < 0:
                num, den = -num, -den
            g = gcd(num, den)
            a1, a2 = num // g, den // g
            t2 = a2 * n - a1
            if all((d2 := a2 * p - a1) != 0 and t2 % d2 == 0 for p in primes):
                found.add(Fraction(a1, a2))
    return KorseltSet(n, tuple(sorted(found)))


def z_korselt_set(f: SquarefreeFactorization) -> KorseltSet:
    """The integer bases of n: the denominator-1 slice of the rational set."""
    qs = q_korselt_set(f)
    return KorseltSet(f.n, tuple(b for b in qs.bases if b.denominator == 1))


def korselt_weight(f: SquarefreeFactorization, domain: str = "q") -> int:
    """Cardinality of the rational ("q") or integer ("z") base set of n."""
    d = domain.lower()
    if d == "q":
        return q_korselt_set(f).weight
    if d == "z":
        return z_korselt_set(f).weight
    raise ValueError(f"unknown domain {domain!r} (expected 'q' or 'z')")


def base_set(alpha, limit: int) -> BaseSetRecord:
    """All squarefree composite n <= limit for which alpha is a base."""
    a = Fraction(alpha)
    if a == 0:
        raise ValueError("alpha = 0 is excluded by definition")
    members = []
    for f in squarefree_composites(6, limit):
        if a == f.n:
            continue
        if is_korselt_base(f, a):
            members.append(f.n)
    return BaseSetRecord(a, limit, tuple(members))


def is_carmichael(n: int) -> bool:
    """True iff n is squarefree composite and p - 1 divides n - 1 for every
    prime factor p (equivalently, 1 is a base of n).  Non-squarefree and
    prime inputs return False rather than raising."""
    if n < 6:
        return False
    try:
        f = factor_squarefree(n)
    except (NotSquarefreeError, NotCompositeError):
        return False
    return all((n - 1) % (p - 1) == 0 for p in f.primes)


def carmichael_scan(limit: int) -> list[int]:
    """All Carmichael numbers up to limit, ascending."""
    return [
        f.n
        for f in squarefree_composites(6, limit)
        if all((f.n - 1) % (p - 1) == 0 for p in f.primes)
    ]
