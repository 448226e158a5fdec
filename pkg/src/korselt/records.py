"""Scan records and their canonical wire formats.

Rationals travel as {"num": int, "den": int} objects in JSONL and as exact
"num/den" strings in CSV; machine formats never render decimals.  JSON lines
are emitted with a fixed key order and compact separators so identical
records always serialize to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arith import Rational, SquarefreeFactorization
from .core import korselt_bounds, upper_attainment
from .solver import q_korselt_set


@dataclass(frozen=True)
class ScanRecord:
    """One squarefree composite's full result row."""

    n: int
    primes: tuple[int, ...]
    weight_q: int
    weight_z: int
    bases: tuple[Rational, ...]
    lower: Rational
    upper: Rational
    attained_j: int | None
    # Reserved telemetry slot.  Kept at 0: output bytes must not depend on
    # wall-clock timing or on the worker count.
    elapsed_us: int = 0


def build_scan_record(f: SquarefreeFactorization) -> ScanRecord:
    """Compute the full result row for one factorization."""
    ks = q_korselt_set(f)
    rep = korselt_bounds(f)
    return ScanRecord(
        n=f.n,
        primes=f.primes,
        weight_q=ks.weight,
        weight_z=sum(1 for b in ks.bases if b.denominator == 1),
        bases=ks.bases,
        lower=rep.lower,
        upper=rep.upper,
        attained_j=upper_attainment(f, ks),
    )


def rational_to_obj(x: Rational) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def obj_to_rational(obj) -> Rational:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise ValueError(f"expected a num/den object, got {obj!r}")
    num, den = obj["num"], obj["den"]
    if (
        not isinstance(num, int)
        or not isinstance(den, int)
        or isinstance(num, bool)
        or isinstance(den, bool)
        or den < 1
    ):
        raise ValueError(f"invalid rational object {obj!r}")
    return Fraction(num, den)


def rational_str(x: Rational) -> str:
    """Exact num/den rendering used in CSV output."""
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    """Parse '7/2', '-5/2' or '12' into a reduced rational."""
    s = text.strip()
    if "/" in s:
        a, _, b = s.partition("/")
        num, den = int(a), int(b)
        if den == 0:
            raise ValueError("zero denominator")
        return Fraction(num, den)
    return Fraction(int(s))


def record_to_json_line(rec: ScanRecord) -> str:
    """Canonical single-line JSON form of a record (no trailing newline)."""
    obj = {
        "n": rec.n,
        "primes": list(rec.primes),
        "weight_q": rec.weight_q,
        "weight_z": rec.weight_z,
        "bases": [rational_to_obj(b) for b in rec.bases],
        "lower": rational_to_obj(rec.lower),
        "upper": rational_to_obj(rec.upper),
        "attained_j": rec.attained_j,
        "elapsed_us": rec.elapsed_us,
    }
    return json.dumps(obj, separators=(",", ":"))


_INT_FIELDS = ("n", "weight_q", "weight_z", "elapsed_us")


def record_from_json_line(line: str) -> ScanRecord:
    """Parse one JSONL record line; raises ValueError on any malformation."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ValueError("record line must be a JSON object")
    try:
        for key in _INT_FIELDS:
            if not isinstance(obj[key], int) or isinstance(obj[key], bool):
                raise ValueError(f"field {key!r} must be an integer")
        primes = obj["primes"]
        if not isinstance(primes, list) or not all(
            isinstance(p, int) and not isinstance(p, bool) for p in primes
        ):
            raise ValueError("field 'primes' must be a list of integers")
        bases = obj["bases"]
        if not isinstance(bases, list):
            raise ValueError("field 'bases' must be a list")
        attained = obj["attained_j"]
        if attained is not None and (not isinstance(attained, int) or isinstance(attained, bool)):
            raise ValueError("field 'attained_j' must be an integer or null")
        return ScanRecord(
            n=obj["n"],
            primes=tuple(primes),
            weight_q=obj["weight_q"],
            weight_z=obj["weight_z"],
            bases=tuple(obj_to_rational(b) for b in bases),
            lower=obj_to_rational(obj["lower"]),
            upper=obj_to_rational(obj["upper"]),
            attained_j=attained,
            elapsed_us=obj["elapsed_us"],
        )
    except KeyError as exc:
        raise ValueError(f"missing field {exc.args[0]!r}") from None
