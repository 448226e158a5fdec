"""Exact integer primitives: reduced rationals, deterministic primality,
squarefree factorization, and signed divisor enumeration.

Everything works on plain Python integers, so intermediate products can never
wrap.  The one genuine width limit, the deterministic primality witness set,
is enforced with a hard error instead of silently degrading.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

# Reduced rational with positive denominator.  fractions.Fraction already
# guarantees the canonical form (gcd(num, den) == 1, den >= 1), so it is used
# directly instead of a bespoke wrapper.
Rational = Fraction


class NotSquarefreeError(ValueError):
    """A repeated prime factor was found."""

    def __init__(self, n: int, p: int):
        super().__init__(f"{n} is not squarefree: {p}^2 divides it")
        self.n = n
        self.p = p


class NotCompositeError(ValueError):
    """The input has fewer than two prime factors."""

    def __init__(self, n: int):
        super().__init__(f"{n} is not composite")
        self.n = n


@dataclass(frozen=True)
class SquarefreeFactorization:
    """A squarefree composite n with its prime factors in ascending order."""

    n: int
    primes: tuple[int, ...]

    @property
    def m(self) -> int:
        """Number of distinct prime factors."""
        return len(self.primes)


def reduce(num: int, den: int) -> Rational:
    """Canonical reduced fraction num/den with positive denominator."""
    if den == 0:
        raise ZeroDivisionError("denominator must be nonzero")
    return Fraction(num, den)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# The witness set above is a correct deterministic test for everything below
# this bound (Sorenson/Webster); larger inputs are refused rather than
# silently answered probabilistically.
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    if n >= _MR_DETERMINISTIC_BELOW:
        raise ValueError(f"{n} exceeds the deterministic primality range")
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


_TRIAL_LIMIT = 10_000


def _rho_factor(n: int) -> int:
    """Some nontrivial factor of an odd composite n (Brent's cycle variant).

    The parameter sweep is fixed, so the result is deterministic for a given n.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"factor search exhausted its parameters on {n}")


def factor_squarefree(n: int) -> SquarefreeFactorization:
    """Full factorization of a squarefree composite n.

    Trial division handles small factors; any cofactor that survives the trial
    bound is split recursively with Brent's rho.  Raises NotSquarefreeError on
    a repeated factor and NotCompositeError when n is prime.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    primes = []
    rem = n
    d = 2
    while d <= _TRIAL_LIMIT and d * d <= rem:
        if rem % d == 0:
            rem //= d
            if rem % d == 0:
                raise NotSquarefreeError(n, d)
            primes.append(d)
        d += 1 if d == 2 else 2
    if rem > 1:
        if d * d > rem:
            primes.append(rem)  # no factor below sqrt(rem): rem is prime
        else:
            stack = [rem]
            while stack:
                v = stack.pop()
                if is_prime(v):
                    primes.append(v)
                else:
                    f = _rho_factor(v)
                    stack += [f, v // f]
    primes.sort()
    for a, b in zip(primes, primes[1:]):
        if a == b:
            raise NotSquarefreeError(n, a)
    if len(primes) < 2:
        raise NotCompositeError(n)
    return SquarefreeFactorization(n, tuple(primes))


def signed_divisors(n: int) -> list[int]:
    """Every d with d | n, both signs, ascending; the length is 2*tau(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    pos = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            pos.append(i)
            if i != n // i:
                pos.append(n // i)
        i += 1
    pos.sort()
    return [-q for q in reversed(pos)] + pos
