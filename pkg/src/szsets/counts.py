"""Closed forms and recurrences for the subset-counting sequences.

Each ``count_*`` function returns the exact size of one family of subsets of
{1..n}; :func:`verify_family` replays a family against the brute-force oracle
(and, where a second computational route exists, against that too).

Family tags follow the library's public interface:

===========  ================================================================
tag          counts subsets of {1..n} that are ...
===========  ================================================================
M            weak-Schreier with maximum exactly n                -> F(n)
A            strong-Schreier with maximum exactly n              -> F(n-1)
A_binomial   same family, evaluated by the double binomial sum
B            maximal-Schreier with maximum exactly n             -> F(n-2)
C            weak-Schreier, empty set included                   -> F(n+2)
D            strong-Schreier, empty set included                 -> F(n+1)
E            gap >= 2 everywhere, empty set included             -> F(n+2)
Lw           weak-Schreier with even maximum, plus the empty set
Ls           strong-Schreier with odd maximum, plus the empty set
H            gap >= k everywhere, containing n, weak-Schreier    (recurrence)
I            gap >= k everywhere, containing n, strong-Schreier  (recurrence)
J            gap >= k everywhere, containing n, maximal          (recurrence)
P            containing n, every consecutive gap odd             -> F(n+1)
Q            every consecutive gap odd, empty set included       -> F(n+3)-1
===========  ================================================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .fib import fib
from .oracle import PredicateSpec, count_matching, ensure_within_ceiling

FAMILY_TAGS = ("M", "A", "A_binomial", "B", "C", "D", "E", "Lw", "Ls", "H", "I", "J", "P", "Q")
GAP_FAMILY_TAGS = ("H", "I", "J")


def binomial(top: int, bottom: int) -> int:
    """C(top, bottom) with the conventions binom(a,b) = 0 for b < 0 or b > a.

    In particular binom(0,0) = 1 and any negative top argument yields 0, which
    is exactly what the summation formulas below rely on.
    """
    if bottom < 0 or bottom > top:
        return 0
    return math.comb(top, bottom)


def _check_n(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")


def _check_k(k: int, allow_k1: bool) -> None:
    floor = 1 if allow_k1 else 2
    if k < floor:
        raise ValueError(f"gap parameter k must be >= {floor}, got {k}")


def count_M(n: int) -> int:
    """Weak-Schreier sets with maximum exactly n: F(n)."""
    _check_n(n)
    return fib(n)


def count_A(n: int) -> int:
    """Strong-Schreier sets with maximum exactly n: F(n-1)."""
    _check_n(n)
    return fib(n - 1)


def count_A_binomial(n: int) -> int:
    """The strong-Schreier max-anchored count, via the double binomial sum.

    Evaluates sum over k = 1..n-1 of sum over j = 0..k-3 of C(n-k-1, j), plus
    one for the singleton {n}.  Inner sums with k < 3 are empty.  Valid for
    n >= 2; the n = 1 case is served by :func:`count_A`.
    """
    _check_n(n, minimum=2)
    total = 1
    for k in range(1, n):
        width = n - k - 1  # numbers strictly between the minimum k and n
        for j in range(0, k - 2):
            total += binomial(width, j)
    return total


def count_B(n: int) -> int:
    """Maximal-Schreier sets with maximum exactly n: F(n-2), using F(-1) = 1."""
    _check_n(n)
    return fib(n - 2)


def count_C(n: int) -> int:
    """Weak-Schreier subsets of {1..n}, empty set included: F(n+2)."""
    _check_n(n)
    return fib(n + 2)


def count_D(n: int) -> int:
    """Strong-Schreier subsets of {1..n}, empty set included: F(n+1)."""
    _check_n(n)
    return fib(n + 1)


def count_E(n: int) -> int:
    """Subsets of {1..n} with no two consecutive elements, empty included: F(n+2)."""
    _check_n(n)
    return fib(n + 2)


def count_Lw(n: int) -> int:
    """Weak-Schreier subsets of {1..n} with even maximum, plus the empty set."""
    _check_n(n)
    return fib(n) if n % 2 == 1 else fib(n + 1)


def count_Ls(n: int) -> int:
    """Strong-Schreier subsets of {1..n} with odd maximum, plus the empty set."""
    _check_n(n)
    return fib(n) if n % 2 == 1 else fib(n - 1)


def count_H(k: int, n: int, *, allow_k1: bool = False) -> int:
    """Weak-Schreier subsets of {1..n} containing n with all gaps >= k.

    Linear recurrence: 1 for n <= k+1, then H(n) = H(n-1) + H(n-k-1).
    k >= 2 unless ``allow_k1`` opts into the degenerate k = 1 extension
    (where the gap condition is vacuous and the count collapses to family M).
    """
    _check_k(k, allow_k1)
    _check_n(n)
    if n <= k + 1:
        return 1
    vals = [0] * (n + 1)
    for m in range(1, n + 1):
        vals[m] = 1 if m <= k + 1 else vals[m - 1] + vals[m - k - 1]
    return vals[n]


def count_H_binomial(k: int, n: int, *, allow_k1: bool = False) -> int:
    """Same family as :func:`count_H`, via the closed-form binomial sum.

    Evaluates sum over l = 1..floor((n-1)/(k+1)) of C(n - k*l - 1, l), plus
    one for the singleton {n}.  Retained as an independent cross-check of the
    recurrence, not as the primary evaluator.
    """
    _check_k(k, allow_k1)
    _check_n(n)
    total = 1
    for ell in range(1, (n - 1) // (k + 1) + 1):
        total += binomial(n - k * ell - 1, ell)
    return total


def count_I(k: int, n: int, *, allow_k1: bool = False) -> int:
    """Strong-Schreier subsets of {1..n} containing n with all gaps >= k.

    Recurrence: 0 at n = 1, then 1 for 2 <= n <= k+2, then
    I(n) = I(n-1) + I(n-k-1).
    """
    _check_k(k, allow_k1)
    _check_n(n)
    if n == 1:
        return 0
    if n <= k + 2:
        return 1
    vals = [0] * (n + 1)
    for m in range(2, n + 1):
        vals[m] = 1 if m <= k + 2 else vals[m - 1] + vals[m - k - 1]
    return vals[n]


def count_J(k: int, n: int, *, allow_k1: bool = False) -> int:
    """Maximal-Schreier subsets of {1..n} containing n with all gaps >= k.

    Recurrence: 1 at n = 1, 0 for 2 <= n <= k+1, 1 for k+1 < n <= 2k+2, then
    J(n) = J(n-1) + J(n-k-1).
    """
    _check_k(k, allow_k1)
    _check_n(n)
    if n == 1:
        return 1
    if n <= k + 1:
        return 0
    if n <= 2 * k + 2:
        return 1
    vals = [0] * (n + 1)
    vals[1] = 1
    for m in range(2, n + 1):
        if m <= k + 1:
            vals[m] = 0
        elif m <= 2 * k + 2:
            vals[m] = 1
        else:
            vals[m] = vals[m - 1] + vals[m - k - 1]
    return vals[n]


def count_P(n: int) -> int:
    """Subsets of {1..n} containing n whose consecutive gaps are all odd: F(n+1)."""
    _check_n(n)
    return fib(n + 1)


def count_Q(n: int) -> int:
    """Subsets of {1..n} whose consecutive gaps are all odd, empty included: F(n+3) - 1."""
    _check_n(n)
    return fib(n + 3) - 1


def count_compositions(n: int, lower_bounds: Sequence[int]) -> int:
    """Number of integer solutions to y_1 + ... + y_p = n with y_i >= c_i.

    Equals C(n - (c_1 + ... + c_p) + p - 1, p - 1); infeasible inputs (total
    below the combined lower bounds) return 0 rather than raising.
    """
    bounds = list(lower_bounds)
    if not bounds:
        raise ValueError("at least one variable is required")
    p = len(bounds)
    return binomial(n - sum(bounds) + p - 1, p - 1)


def check_floor_claims(n: int, k: int) -> tuple[bool, bool, bool]:
    """Check the three floor-division facts the gap-family recurrences rest on.

    With d = k + 1, writing fl(x) for floor(x / d):

    1. if fl(n-2) == fl(n-k-2) then fl(n-1) == fl(n-2) + 1;
    2. if fl(n-2) >  fl(n-k-2) then fl(n-1) <  fl(n-2) + 1;
    3. if fl(n-k-2) == fl(n-2) then (n-k-2)/d equals fl(n-2) exactly.

    Each slot reports True when the claim's hypothesis fails to apply
    (vacuously) or when its conclusion holds.  Floor division must round
    toward negative infinity, which Python's // does natively.
    """
    if k < 2:
        raise ValueError(f"gap parameter k must be >= 2, got {k}")
    d = k + 1
    f1 = (n - 1) // d
    f2 = (n - 2) // d
    fk2 = (n - k - 2) // d
    claim1 = f1 == f2 + 1 if f2 == fk2 else True
    claim2 = f1 < f2 + 1 if f2 > fk2 else True
    claim3 = (n - k - 2) % d == 0 if fk2 == f2 else True
    return claim1, claim2, claim3


@dataclass(frozen=True)
class SequenceFamily:
    """Identifier of a counting family: a tag plus the gap parameter for H/I/J."""

    tag: str
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family {self.tag!r}; expected one of {FAMILY_TAGS}")
        if self.tag in GAP_FAMILY_TAGS:
            if self.k is None:
                raise ValueError(f"family {self.tag} requires the gap parameter k")
            if self.k < 2:
                raise ValueError(f"family {self.tag} requires k >= 2, got {self.k}")
        elif self.k is not None:
            raise ValueError(f"family {self.tag} does not take a gap parameter")

    def label(self) -> str:
        return f"{self.tag}[k={self.k}]" if self.k is not None else self.tag


_FORMULAS = {
    "M": count_M,
    "A": count_A,
    "B": count_B,
    "C": count_C,
    "D": count_D,
    "E": count_E,
    "Lw": count_Lw,
    "Ls": count_Ls,
    "P": count_P,
    "Q": count_Q,
}


def family_value(family: SequenceFamily, n: int) -> int:
    """The family's canonical exact value at n (what ``count``/``table`` emit)."""
    if family.tag in _FORMULAS:
        return _FORMULAS[family.tag](n)
    if family.tag == "A_binomial":
        # The binomial sum's range of validity starts at n = 2; n = 1 is
        # served by the equivalent closed form.
        return count_A_binomial(n) if n >= 2 else count_A(n)
    if family.tag == "H":
        return count_H(family.k, n)
    if family.tag == "I":
        return count_I(family.k, n)
    return count_J(family.k, n)


def family_oracle_spec(family: SequenceFamily) -> PredicateSpec:
    """The brute-force filter that defines the family."""
    tag = family.tag
    if tag == "M":
        return PredicateSpec(schreier="weak", max_constraint="max_equals_n")
    if tag in ("A", "A_binomial"):
        return PredicateSpec(schreier="strong", max_constraint="max_equals_n")
    if tag == "B":
        return PredicateSpec(schreier="maximal", max_constraint="max_equals_n")
    if tag == "C":
        return PredicateSpec(schreier="weak", include_empty=True)
    if tag == "D":
        return PredicateSpec(schreier="strong", include_empty=True)
    if tag == "E":
        return PredicateSpec(zeckendorf_gap=2, include_empty=True)
    if tag == "Lw":
        return PredicateSpec(schreier="weak", max_parity="even", include_empty=True)
    if tag == "Ls":
        return PredicateSpec(schreier="strong", max_parity="odd", include_empty=True)
    if tag == "H":
        return PredicateSpec(schreier="weak", zeckendorf_gap=family.k, max_constraint="contains_n")
    if tag == "I":
        return PredicateSpec(schreier="strong", zeckendorf_gap=family.k, max_constraint="contains_n")
    if tag == "J":
        return PredicateSpec(schreier="maximal", zeckendorf_gap=family.k, max_constraint="contains_n")
    if tag == "P":
        return PredicateSpec(odd_gaps_only=True, max_constraint="contains_n")
    return PredicateSpec(odd_gaps_only=True, include_empty=True)  # Q


def _formula_column(family: SequenceFamily, n: int) -> int:
    # For H the closed-form sum fills this column so the report compares three
    # genuinely distinct routes; everywhere else it is the canonical value.
    if family.tag == "H":
        return count_H_binomial(family.k, n)
    return family_value(family, n)


def _recurrence_column(family: SequenceFamily, n: int) -> Optional[int]:
    if family.tag == "H":
        return count_H(family.k, n)
    if family.tag == "I":
        return count_I(family.k, n)
    if family.tag == "J":
        return count_J(family.k, n)
    return None


@dataclass(frozen=True)
class VerificationRow:
    n: int
    oracle: int
    formula: int
    recurrence: Optional[int]
    all_equal: bool


@dataclass(frozen=True)
class VerificationReport:
    family: SequenceFamily
    rows: tuple[VerificationRow, ...]
    overall_pass: bool


def verify_family(
    family: SequenceFamily, n_max: int, ceiling: Optional[int] = None
) -> VerificationReport:
    """Compare oracle, formula, and (where present) recurrence for n = 1..n_max."""
    ensure_within_ceiling(n_max, ceiling)
    spec = family_oracle_spec(family)
    rows = []
    for n in range(1, n_max + 1):
        oracle_value = count_matching(n, spec, ceiling)
        formula_value = _formula_column(family, n)
        recurrence_value = _recurrence_column(family, n)
        equal = oracle_value == formula_value and (
            recurrence_value is None or recurrence_value == formula_value
        )
        rows.append(VerificationRow(n, oracle_value, formula_value, recurrence_value, equal))
    return VerificationReport(family, tuple(rows), all(r.all_equal for r in rows))


def default_families(k_values: Iterable[int] = (2, 3, 4)) -> list[SequenceFamily]:
    """Every verifiable family, with the gap families expanded over k_values."""
    families = [SequenceFamily(tag) for tag in FAMILY_TAGS if tag not in GAP_FAMILY_TAGS]
    for tag in GAP_FAMILY_TAGS:
        families.extend(SequenceFamily(tag, k) for k in k_values)
    return families
