"""Finite sets of positive integers and the Schreier / Zeckendorf predicates.

A :class:`FiniteSet` is an immutable, strictly increasing sequence of integers
>= 1 (possibly empty).  All predicates are pure functions of the elements, so
instances are safe to share freely.

Canonical text form: comma-separated ascending integers in braces, e.g.
``{2,3,5}``; the empty set is ``{}``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional


class FiniteSet:
    """Immutable finite set of positive integers, stored in ascending order.

    The constructor accepts elements in any order but rejects duplicates and
    values below 1 outright, so fixtures stay unambiguous.
    """

    __slots__ = ("_elements",)

    def __init__(self, elements: Iterable[int] = ()) -> None:
        elems = sorted(elements)
        for e in elems:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError(f"elements must be integers, got {e!r}")
            if e < 1:
                raise ValueError(f"elements must be >= 1, got {e}")
        for a, b in zip(elems, elems[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a}")
        self._elements: tuple[int, ...] = tuple(elems)

    @classmethod
    def parse(cls, text: str) -> "FiniteSet":
        """Parse the canonical text form, e.g. ``{2,3,5}`` or ``{}``.

        Whitespace around elements is tolerated; ordering is not required.
        """
        stripped = text.strip()
        if not (stripped.startswith("{") and stripped.endswith("}")):
            raise ValueError(f"expected braces around set, got {text!r}")
        body = stripped[1:-1].strip()
        if not body:
            return cls()
        try:
            elems = [int(part.strip()) for part in body.split(",")]
        except ValueError:
            raise ValueError(f"malformed set literal {text!r}") from None
        return cls(elems)

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elements

    def minimum(self) -> Optional[int]:
        """Least element, or None for the empty set."""
        return self._elements[0] if self._elements else None

    def maximum(self) -> Optional[int]:
        """Greatest element, or None for the empty set."""
        return self._elements[-1] if self._elements else None

    def is_weak_schreier(self) -> bool:
        """True iff min S >= |S|.  The empty set qualifies."""
        return not self._elements or self._elements[0] >= len(self._elements)

    def is_strong_schreier(self) -> bool:
        """True iff min S > |S|.  The empty set qualifies."""
        return not self._elements or self._elements[0] > len(self._elements)

    def is_maximal_schreier(self) -> bool:
        """True iff min S = |S|.

        The empty set returns False: its minimum is undefined, and no counting
        result here depends on classifying it as maximal.
        """
        return bool(self._elements) and self._elements[0] == len(self._elements)

    def is_k_zeckendorf(self, k: int) -> bool:
        """True iff every pair of distinct elements differs by at least k.

        Equivalent to every consecutive gap being >= k.  Empty and singleton
        sets qualify vacuously.  k must be >= 1.
        """
        if k < 1:
            raise ValueError(f"gap parameter must be >= 1, got {k}")
        return all(b - a >= k for a, b in zip(self._elements, self._elements[1:]))

    def is_zeckendorf(self) -> bool:
        """True iff the set contains no two consecutive integers (gap >= 2)."""
        return self.is_k_zeckendorf(2)

    def gap_list(self) -> Optional[tuple[int, ...]]:
        """Consecutive differences, in order; None when |S| <= 1.

        Kept as an ordered list rather than a set: collapsing repeated gaps
        would lose information and nothing downstream needs deduplication.
        """
        if len(self._elements) <= 1:
            return None
        return tuple(b - a for a, b in zip(self._elements, self._elements[1:]))

    def has_odd_gaps(self) -> bool:
        """True iff every consecutive gap is odd; vacuously true for |S| <= 1."""
        return all((b - a) % 2 == 1 for a, b in zip(self._elements, self._elements[1:]))

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __contains__(self, value: object) -> bool:
        return value in self._elements

    def __bool__(self) -> bool:
        return bool(self._elements)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiniteSet):
            return self._elements == other._elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self._elements) + "}"

    def __repr__(self) -> str:
        return f"FiniteSet({list(self._elements)!r})"
