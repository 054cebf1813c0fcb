"""Brute-force subset enumeration: the ground truth every formula is checked against.

Subsets of {1..n} are walked as bitmasks in ascending value (bit i-1 set means
element i is present), so output order is stable across runs.  The counting
loop stays allocation-free; sets are materialized only when enumerating.

Because the scan is exponential in n, a hard ceiling (default 30, overridable
through the ``SZ_ORACLE_CEILING`` environment variable or per call) guards
against runaway requests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional

from .sets import FiniteSet

DEFAULT_CEILING = 30
CEILING_ENV_VAR = "SZ_ORACLE_CEILING"

SCHREIER_CHOICES = ("any", "weak", "strong", "maximal")
MAX_CONSTRAINT_CHOICES = ("none", "max_equals_n", "contains_n")
MAX_PARITY_CHOICES = ("any", "even", "odd")

_SCHREIER_CODE = {"any": 0, "weak": 1, "strong": 2, "maximal": 3}


class OracleCeilingError(ValueError):
    """Raised when an enumeration request exceeds the configured ceiling."""


@dataclass(frozen=True)
class PredicateSpec:
    """Declarative filter over subsets of {1..n}.

    Fields compose conjunctively:

    * ``schreier``: Schreier variant to require ("any" disables the check).
    * ``zeckendorf_gap``: require every consecutive gap >= this value.
    * ``odd_gaps_only``: require every consecutive gap to be odd.
    * ``max_constraint``: anchor the maximum ("max_equals_n") or require
      membership of n ("contains_n"); these coincide for subsets of {1..n}
      and are kept distinct only for readability at call sites.
    * ``max_parity``: parity filter on max S.  The empty set carries no
      maximum and is admitted by convention when no max constraint is set.
    * ``include_empty``: admit the empty set (it still must satisfy the
      schreier filter; it never satisfies a max constraint).
    """

    schreier: str = "any"
    zeckendorf_gap: Optional[int] = None
    odd_gaps_only: bool = False
    max_constraint: str = "none"
    max_parity: str = "any"
    include_empty: bool = False

    def __post_init__(self) -> None:
        if self.schreier not in SCHREIER_CHOICES:
            raise ValueError(f"schreier must be one of {SCHREIER_CHOICES}, got {self.schreier!r}")
        if self.max_constraint not in MAX_CONSTRAINT_CHOICES:
            raise ValueError(
                f"max_constraint must be one of {MAX_CONSTRAINT_CHOICES}, got {self.max_constraint!r}"
            )
        if self.max_parity not in MAX_PARITY_CHOICES:
            raise ValueError(f"max_parity must be one of {MAX_PARITY_CHOICES}, got {self.max_parity!r}")
        if self.zeckendorf_gap is not None and self.zeckendorf_gap < 1:
            raise ValueError(f"zeckendorf_gap must be >= 1, got {self.zeckendorf_gap}")


def oracle_ceiling() -> int:
    """Effective enumeration ceiling: ``SZ_ORACLE_CEILING`` or the default."""
    raw = os.environ.get(CEILING_ENV_VAR)
    if raw is None:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CEILING_ENV_VAR} must be an integer, got {raw!r}") from None


def ensure_within_ceiling(n: int, ceiling: Optional[int] = None) -> None:
    """Validate an ambient n against the ceiling without doing any work.

    Callers that loop over a range of n should check the top of the range
    first, so a request that can never finish fails immediately.
    """
    if n < 1:
        raise ValueError(f"ambient n must be >= 1, got {n}")
    limit = oracle_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise OracleCeilingError(f"n={n} exceeds the enumeration ceiling {limit}")


def _empty_set_matches(spec: PredicateSpec) -> bool:
    # The empty set is weak- and strong-Schreier but not maximal, satisfies
    # every gap condition vacuously, has no maximum (so it fails the max
    # constraints but passes the parity filter by convention).
    return (
        spec.include_empty
        and spec.schreier != "maximal"
        and spec.max_constraint == "none"
    )


def count_matching(n: int, spec: PredicateSpec, ceiling: Optional[int] = None) -> int:
    """Count subsets of {1..n} satisfying ``spec`` by exhaustive scan.

    Equal to the length of :func:`enumerate_matching`'s stream, but the hot
    loop works on raw masks and never allocates.
    """
    ensure_within_ceiling(n, ceiling)
    smode = _SCHREIER_CODE[spec.schreier]
    zk = spec.zeckendorf_gap
    check_zeck = zk is not None and zk > 1
    odd_only = spec.odd_gaps_only
    constrain_max = spec.max_constraint != "none"
    check_parity = spec.max_parity != "any"
    want_parity = 1 if spec.max_parity == "odd" else 0

    total = 1 if _empty_set_matches(spec) else 0
    # Masks containing element n occupy exactly the upper half of the range.
    start = 1 << (n - 1) if constrain_max else 1
    for mask in range(start, 1 << n):
        if smode:
            cnt = mask.bit_count()
            lo = (mask & -mask).bit_length()
            if smode == 1:
                if lo < cnt:
                    continue
            elif smode == 2:
                if lo <= cnt:
                    continue
            elif lo != cnt:
                continue
        if check_zeck:
            shifted = mask
            conflict = False
            for _ in range(zk - 1):
                shifted >>= 1
                if mask & shifted:
                    conflict = True
                    break
            if conflict:
                continue
        if check_parity and mask.bit_length() & 1 != want_parity:
            continue
        if odd_only:
            rest = mask & (mask - 1)
            prev = (mask & -mask).bit_length()
            ok = True
            while rest:
                pos = (rest & -rest).bit_length()
                if (pos - prev) & 1 == 0:
                    ok = False
                    break
                prev = pos
                rest &= rest - 1
            if not ok:
                continue
        total += 1
    return total


def _mask_matches(mask: int, spec: PredicateSpec) -> bool:
    cnt = mask.bit_count()
    lo = (mask & -mask).bit_length()
    smode = _SCHREIER_CODE[spec.schreier]
    if smode == 1 and lo < cnt:
        return False
    if smode == 2 and lo <= cnt:
        return False
    if smode == 3 and lo != cnt:
        return False
    zk = spec.zeckendorf_gap
    if zk is not None and zk > 1:
        for j in range(1, zk):
            if mask & (mask >> j):
                return False
    if spec.max_parity != "any":
        want = 1 if spec.max_parity == "odd" else 0
        if mask.bit_length() & 1 != want:
            return False
    if spec.odd_gaps_only and cnt >= 2:
        rest = mask & (mask - 1)
        prev = lo
        while rest:
            pos = (rest & -rest).bit_length()
            if (pos - prev) & 1 == 0:
                return False
            prev = pos
            rest &= rest - 1
    return True


def _mask_to_set(mask: int) -> FiniteSet:
    elems = []
    while mask:
        low = mask & -mask
        elems.append(low.bit_length())
        mask ^= low
    return FiniteSet(elems)


def enumerate_matching(
    n: int, spec: PredicateSpec, ceiling: Optional[int] = None
) -> Iterator[FiniteSet]:
    """Yield the subsets of {1..n} satisfying ``spec``, each exactly once.

    Order is ascending bitmask value (the empty set first when admitted),
    which keeps golden-file comparisons stable.
    """
    ensure_within_ceiling(n, ceiling)
    if _empty_set_matches(spec):
        yield FiniteSet()
    start = 1 << (n - 1) if spec.max_constraint != "none" else 1
    for mask in range(start, 1 << n):
        if _mask_matches(mask, spec):
            yield _mask_to_set(mask)
