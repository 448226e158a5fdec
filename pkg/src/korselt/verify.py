"""Range verification of the documented base-set properties, with exact
rational failure witnesses.

Each check is a pure function of a factorization (and, where relevant, the
verified base set) that returns the first violation found or None.  run_suite
applies a selection of checks to every squarefree composite in a range and
aggregates per-check reports.  Everything is exact rational arithmetic; no
floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import Rational, SquarefreeFactorization
from .core import KorseltSet, korselt_bounds, m_value, upper_attainment
from .solver import oracle_q_korselt_set, q_korselt_set, squarefree_composites

CHECK_IDS = (
    "lemma24_delta",
    "lemma24_gamma",
    "prop21_oracle",
    "prop23_k3",
    "prop23_neg",
    "prop23_pos",
    "thm25_bounds",
    "thm25_theta",
    "thm27_attain",
)

CHECK_DESCRIPTIONS = {
    "lemma24_delta": "upper candidate values decrease along consecutive prime indices",
    "lemma24_gamma": "lower candidate values decrease along consecutive prime indices",
    "prop21_oracle": "divisor-pair enumeration equals windowed-k enumeration",
    "prop23_k3": "step count from the most negative base to the largest prime is an integer >= 3",
    "prop23_neg": "every negative base dominates its indexed floor value",
    "prop23_pos": "every positive base respects its indexed ceiling value",
    "thm25_bounds": "every base lies within the global lower/upper bounds",
    "thm25_theta": "the two lower-bound candidates are strictly ordered when m >= 3",
    "thm27_attain": "an upper candidate is attained exactly when n is twice its larger prime",
}


@dataclass(frozen=True)
class FailureWitness:
    """One concrete violation: the number, the failed comparison's exact
    sides, and the indices that produced it."""

    n: int
    check_id: str
    description: str
    lhs: Rational | None = None
    rhs: Rational | None = None
    indices: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TheoremReport:
    """Aggregate outcome of one check over a range.

    tested_count is the number of squarefree composites examined, including
    those for which the check passed vacuously.
    """

    check_id: str
    n_lo: int
    n_hi: int
    tested_count: int
    failures: tuple[FailureWitness, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_prop23_pos(f: SquarefreeFactorization, ks: KorseltSet):
    pos = ks.positives
    r = len(pos)
    if r == 0:
        return None
    n = f.n
    if pos[-1] > n - 1:
        return FailureWitness(
            n, "prop23_pos", "largest positive base exceeds n - 1",
            lhs=pos[-1], rhs=Fraction(n - 1), indices={"i": r},
        )
    for i in range(1, r + 1):
        g = pos[i - 1]
        for j in range(1, f.m + 1):
            bound = m_value(n, j + r - i, f.primes[j - 1])
            if g > bound:
                return FailureWitness(
                    n, "prop23_pos", "positive base exceeds its indexed ceiling",
                    lhs=g, rhs=bound, indices={"i": i, "j": j},
                )
    return None


def _check_prop23_neg(f: SquarefreeFactorization, ks: KorseltSet):
    neg = ks.negatives
    n = f.n
    for s in range(1, len(neg) + 1):
        b = neg[s - 1]
        for j in range(1, f.m + 1):
            bound = m_value(n, j - f.m - s - 2, f.primes[j - 1])
            if bound > b:
                return FailureWitness(
                    n, "prop23_neg", "negative base falls below its indexed floor",
                    lhs=bound, rhs=b, indices={"s": s, "j": j},
                )
    return None


def _check_prop23_k3(f: SquarefreeFactorization, ks: KorseltSet):
    neg = ks.negatives
    if not neg:
        return None
    n = f.n
    b1 = neg[0]
    steps = (n - b1) / (f.primes[-1] - b1)
    if steps.denominator != 1 or steps < 3:
        return FailureWitness(
            n, "prop23_k3",
            "(n - beta_1)/(p_m - beta_1) is not an integer >= 3",
            lhs=steps, rhs=Fraction(3), indices={"s": 1, "j": f.m},
        )
    return None


def _check_lemma24_delta(f: SquarefreeFactorization, _ks=None):
    if f.m < 3:
        return None  # vacuous with fewer than three primes
    n = f.n
    for j in range(1, f.m - 1):
        delta = m_value(n, j, f.primes[j - 1]) - m_value(n, j + 2, f.primes[j + 1])
        if delta <= 0:
            return FailureWitness(
                n, "lemma24_delta", "upper candidate difference is not positive",
                lhs=delta, rhs=Fraction(0), indices={"j": j},
            )
    return None


def _check_lemma24_gamma(f: SquarefreeFactorization, _ks=None):
    if f.m < 3:
        return None
    n, m = f.n, f.m
    for j in range(1, m - 1):
        gamma = m_value(n, j - m - 3, f.primes[j - 1]) - m_value(n, j - m - 1, f.primes[j + 1])
        if gamma <= 0:
            return FailureWitness(
                n, "lemma24_gamma", "lower candidate difference is not positive",
                lhs=gamma, rhs=Fraction(0), indices={"j": j},
            )
    return None


def _check_thm25_bounds(f: SquarefreeFactorization, ks: KorseltSet):
    rep = korselt_bounds(f)
    for idx, b in enumerate(ks.bases, 1):
        if b < rep.lower or b > rep.upper:
            return FailureWitness(
                f.n, "thm25_bounds", "base outside the global bounds",
                lhs=b, rhs=rep.lower if b < rep.lower else rep.upper,
                indices={"position": idx},
            )
    return None


def _check_thm25_theta(f: SquarefreeFactorization, _ks=None):
    # Only claimed for m >= 3; at m = 2 the comparison can genuinely fail
    # (n = 10) while the bounds statement itself still holds.
    if f.m < 3:
        return None
    theta = m_value(f.n, -f.m - 2, f.primes[0]) - m_value(f.n, -f.m - 1, f.primes[1])
    if theta <= 0:
        return FailureWitness(
            f.n, "thm25_theta", "lower-bound candidates are not strictly ordered",
            lhs=theta, rhs=Fraction(0), indices={"m": f.m},
        )
    return None


def _check_thm27_attain(f: SquarefreeFactorization, ks: KorseltSet):
    j = upper_attainment(f, ks)
    expected = f.m == 2 and f.primes[0] == 2
    if (j is not None) != expected:
        return FailureWitness(
            f.n, "thm27_attain",
            "attainment does not match the n = 2*p2 characterization",
            indices={"j": 0 if j is None else j, "m": f.m},
        )
    return None


def _check_prop21_oracle(f: SquarefreeFactorization, ks: KorseltSet):
    other = oracle_q_korselt_set(f)
    if set(other.bases) != set(ks.bases):
        extra = sorted(set(ks.bases) - set(other.bases))
        missing = sorted(set(other.bases) - set(ks.bases))
        return FailureWitness(
            f.n, "prop21_oracle",
            f"set mismatch: only divisor-pair={extra}, only window={missing}",
        )
    return None


_CHECKS = {
    "lemma24_delta": _check_lemma24_delta,
    "lemma24_gamma": _check_lemma24_gamma,
    "prop21_oracle": _check_prop21_oracle,
    "prop23_k3": _check_prop23_k3,
    "prop23_neg": _check_prop23_neg,
    "prop23_pos": _check_prop23_pos,
    "thm25_bounds": _check_thm25_bounds,
    "thm25_theta": _check_thm25_theta,
    "thm27_attain": _check_thm27_attain,
}

# Checks that never look at the base set; run_suite skips computing it when
# only these are selected.
_SET_FREE = {"lemma24_delta", "lemma24_gamma", "thm25_theta"}


def check_prop23_pos(f: SquarefreeFactorization, ks: KorseltSet):
    """First positive-side violation (indexed ceilings, top base <= n - 1),
    or None."""
    return _check_prop23_pos(f, ks)


def check_prop23_neg(f: SquarefreeFactorization, ks: KorseltSet):
    """First negative-side violation (indexed floors, integer step count
    >= 3 at the extreme pair), or None."""
    return _check_prop23_neg(f, ks) or _check_prop23_k3(f, ks)


def check_lemma24(f: SquarefreeFactorization):
    """First monotonicity violation among the two candidate sequences, or
    None; vacuous for m = 2."""
    return _check_lemma24_delta(f) or _check_lemma24_gamma(f)


def check_thm25(f: SquarefreeFactorization, ks: KorseltSet):
    """First out-of-bounds base, else the failed candidate ordering for
    m >= 3, or None."""
    return _check_thm25_bounds(f, ks) or _check_thm25_theta(f)


def check_thm27(f: SquarefreeFactorization, ks: KorseltSet):
    """Violation of the attainment biconditional, or None."""
    return _check_thm27_attain(f, ks)


def _resolve_checks(checks) -> list[str]:
    if checks is None:
        return list(CHECK_IDS)
    ids = sorted(set(checks))
    unknown = [c for c in ids if c not in CHECK_IDS]
    if unknown:
        raise ValueError(f"unknown check id(s): {', '.join(unknown)}")
    return ids


def run_suite(n_lo: int, n_hi: int, checks=None) -> list[TheoremReport]:
    """Apply the selected checks to every squarefree composite in
    [n_lo, n_hi] and return one report per check id, ordered by check id;
    failures within a report are ordered by n.

    checks may be any iterable of check ids (None means all of CHECK_IDS).
    An empty range yields reports with tested_count = 0.
    """
    if n_lo < 6:
        raise ValueError("n_lo must be at least 6")
    ids = _resolve_checks(checks)
    failures: dict[str, list[FailureWitness]] = {cid: [] for cid in ids}
    tested = 0
    needs_sets = any(cid not in _SET_FREE for cid in ids)
    for f in squarefree_composites(n_lo, n_hi):
        tested += 1
        ks = q_korselt_set(f) if needs_sets else None
        for cid in ids:
            w = _CHECKS[cid](f, ks)
            if w is not None:
                failures[cid].append(w)
    return [
        TheoremReport(cid, n_lo, n_hi, tested, tuple(failures[cid]))
        for cid in ids
    ]
