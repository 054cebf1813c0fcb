"""The displacement bijection between weak-Schreier and no-consecutive subsets.

For a weak-Schreier set {a_1 < ... < a_k} within {1..n}, shifting each element
down by its distance from the top, a_i -> a_i - (k - i), widens every gap by
one and lands in the family of subsets with no two consecutive elements.  The
inverse shifts back up.  Both maps fix the maximum and the cardinality, and
the empty set maps to itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .oracle import PredicateSpec, enumerate_matching
from .sets import FiniteSet

_WEAK_SPEC = PredicateSpec(schreier="weak", include_empty=True)
_ZECK_SPEC = PredicateSpec(zeckendorf_gap=2, include_empty=True)


class MappingDomainError(ValueError):
    """Input set lies outside the mapping's domain."""


def _check_ambient(s: FiniteSet, n: int) -> None:
    if n < 1:
        raise ValueError(f"ambient n must be >= 1, got {n}")
    if s and s.maximum() > n:
        raise MappingDomainError(f"set exceeds the ambient bound: max {s.maximum()} > n = {n}")


def forward(a: FiniteSet, n: int) -> FiniteSet:
    """Map a weak-Schreier subset of {1..n} to its gap-widened image.

    Raises :class:`MappingDomainError` when ``a`` is not weak-Schreier or
    pokes above n; the map is undefined there (it would produce elements
    below 1).
    """
    _check_ambient(a, n)
    if not a.is_weak_schreier():
        raise MappingDomainError(
            f"not weak-Schreier: min {a.minimum()} < cardinality {len(a)}"
        )
    k = len(a)
    return FiniteSet(e - (k - i) for i, e in enumerate(a, start=1))


def inverse(c: FiniteSet, n: int) -> FiniteSet:
    """Map a no-two-consecutive subset of {1..n} back to its weak-Schreier source."""
    _check_ambient(c, n)
    if not c.is_zeckendorf():
        raise MappingDomainError("set contains two consecutive elements")
    k = len(c)
    return FiniteSet(e + (k - i) for i, e in enumerate(c, start=1))


@dataclass(frozen=True)
class BijectionCheckReport:
    """Outcome of exhaustively checking the mapping at one ambient n."""

    n: int
    domain_size: int
    image_size: int
    all_images_in_y: bool
    round_trip_ok: bool
    is_bijection: bool


def verify_bijection(n: int, ceiling: Optional[int] = None) -> BijectionCheckReport:
    """Enumerate both sides at ambient n and check the mapping end to end.

    Surjectivity is established by comparing the image against the
    independently enumerated codomain, not by trusting cardinalities alone.
    """
    domain = list(enumerate_matching(n, _WEAK_SPEC, ceiling))
    codomain = set(enumerate_matching(n, _ZECK_SPEC, ceiling))
    images = set()
    round_trip_ok = True
    for a in domain:
        image = forward(a, n)
        images.add(image)
        if inverse(image, n) != a:
            round_trip_ok = False
    all_in = images <= codomain
    is_bijection = (
        len(domain) == len(images) == len(codomain) and all_in and round_trip_ok
    )
    return BijectionCheckReport(
        n=n,
        domain_size=len(domain),
        image_size=len(images),
        all_images_in_y=all_in,
        round_trip_ok=round_trip_ok,
        is_bijection=is_bijection,
    )
