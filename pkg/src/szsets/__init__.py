"""Exact counting of Schreier and Zeckendorf subset families.

Core pieces:

* :mod:`szsets.fib` -- Fibonacci values under the F(-1) = 1, F(0) = 0 convention.
* :mod:`szsets.sets` -- the :class:`FiniteSet` value type and its predicates.
* :mod:`szsets.oracle` -- brute-force subset enumeration (ground truth).
* :mod:`szsets.counts` -- closed forms / recurrences for every family, plus
  oracle-backed verification reports.
* :mod:`szsets.bijection` -- the gap-widening bijection and its checker.
* :mod:`szsets.service` -- FastAPI app exposing all of the above.
* :mod:`szsets.cli` -- command-line client for the service.
"""

from .bijection import BijectionCheckReport, MappingDomainError, forward, inverse, verify_bijection
from .counts import (
    FAMILY_TAGS,
    SequenceFamily,
    VerificationReport,
    VerificationRow,
    binomial,
    check_floor_claims,
    count_A,
    count_A_binomial,
    count_B,
    count_C,
    count_compositions,
    count_D,
    count_E,
    count_H,
    count_H_binomial,
    count_I,
    count_J,
    count_Lw,
    count_Ls,
    count_M,
    count_P,
    count_Q,
    family_oracle_spec,
    family_value,
    verify_family,
)
from .fib import fib, fib_prefix_sum
from .oracle import (
    DEFAULT_CEILING,
    OracleCeilingError,
    PredicateSpec,
    count_matching,
    ensure_within_ceiling,
    enumerate_matching,
    oracle_ceiling,
)
from .sets import FiniteSet

__version__ = "0.1.0"

__all__ = [
    "BijectionCheckReport",
    "DEFAULT_CEILING",
    "FAMILY_TAGS",
    "FiniteSet",
    "MappingDomainError",
    "OracleCeilingError",
    "PredicateSpec",
    "SequenceFamily",
    "VerificationReport",
    "VerificationRow",
    "binomial",
    "check_floor_claims",
    "count_A",
    "count_A_binomial",
    "count_B",
    "count_C",
    "count_compositions",
    "count_D",
    "count_E",
    "count_H",
    "count_H_binomial",
    "count_I",
    "count_J",
    "count_Lw",
    "count_Ls",
    "count_M",
    "count_P",
    "count_Q",
    "count_matching",
    "ensure_within_ceiling",
    "enumerate_matching",
    "family_oracle_spec",
    "family_value",
    "fib",
    "fib_prefix_sum",
    "forward",
    "inverse",
    "oracle_ceiling",
    "verify_bijection",
    "verify_family",
]
