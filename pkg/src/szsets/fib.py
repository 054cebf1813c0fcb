"""Fibonacci numbers under the convention F(-1) = 1, F(0) = 0, F(1) = 1.

Every counting sequence in this package reduces to these values, so they are
kept exact (Python ints) and memoized in a growable table.  Indexing follows
the convention above verbatim; nothing below F(-1) is defined.
"""

from __future__ import annotations

import threading

_table: list[int] = [1, 0, 1]  # F(-1), F(0), F(1)
_lock = threading.Lock()


def fib(i: int) -> int:
    """Return F(i) for i >= -1, exactly.

    Values are memoized; the table is extended iteratively, never recursively,
    so large indices cannot overflow the stack.
    """
    if i < -1:
        raise ValueError(f"Fibonacci index must be >= -1, got {i}")
    idx = i + 1
    if idx >= len(_table):
        with _lock:
            while idx >= len(_table):
                _table.append(_table[-1] + _table[-2])
    return _table[idx]


def fib_prefix_sum(n: int) -> int:
    """Return F(1) + F(2) + ... + F(n), computed directly as F(n+2) - 1."""
    if n < 1:
        raise ValueError(f"prefix sum needs n >= 1, got {n}")
    return fib(n + 2) - 1
