"""Exact-arithmetic toolkit for rational Korselt sets of squarefree composite
integers: set and weight computation, global base bounds, inverse base-set
queries, Carmichael scanning, and a range-verification suite."""

from .arith import (
    NotCompositeError,
    NotSquarefreeError,
    Rational,
    SquarefreeFactorization,
    factor_squarefree,
    is_prime,
    reduce,
    signed_divisors,
)
from .core import (
    BoundsReport,
    KorseltSet,
    is_korselt_base,
    korselt_bounds,
    m_value,
    upper_attainment,
)
from .records import ScanRecord, build_scan_record
from .solver import (
    BaseSetRecord,
    base_set,
    carmichael_scan,
    is_carmichael,
    korselt_weight,
    oracle_q_korselt_set,
    q_korselt_set,
    squarefree_composites,
    z_korselt_set,
)
from .verify import (
    CHECK_DESCRIPTIONS,
    CHECK_IDS,
    FailureWitness,
    TheoremReport,
    check_lemma24,
    check_prop23_neg,
    check_prop23_pos,
    check_thm25,
    check_thm27,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BaseSetRecord",
    "BoundsReport",
    "CHECK_DESCRIPTIONS",
    "CHECK_IDS",
    "FailureWitness",
    "KorseltSet",
    "NotCompositeError",
    "NotSquarefreeError",
    "Rational",
    "ScanRecord",
    "SquarefreeFactorization",
    "TheoremReport",
    "base_set",
    "build_scan_record",
    "carmichael_scan",
    "check_lemma24",
    "check_prop23_neg",
    "check_prop23_pos",
    "check_thm25",
    "check_thm27",
    "factor_squarefree",
    "is_carmichael",
    "is_korselt_base",
    "is_prime",
    "korselt_bounds",
    "korselt_weight",
    "m_value",
    "oracle_q_korselt_set",
    "q_korselt_set",
    "reduce",
    "run_suite",
    "signed_divisors",
    "squarefree_composites",
    "upper_attainment",
    "z_korselt_set",
]
