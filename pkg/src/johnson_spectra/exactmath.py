"""Exact integer and rational helpers.

Python ints are already unbounded, and :class:`fractions.Fraction` keeps
rationals reduced with a positive denominator, so this module only adds the
binomial conventions used throughout the package.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = ["BigRational", "binom", "binom_row", "clear_row_cache"]

BigRational = Fraction

_row_cache: dict[int, tuple[int, ...]] = {}
_row_lock = threading.Lock()


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 whenever k < 0 or k > n.

    A negative ``n`` raises ``ValueError``; nothing in the package should ever
    produce one, so it is treated as a bug rather than extended.
    """
    if n < 0:
        raise ValueError(f"binom: negative upper index n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_row(n: int) -> tuple[int, ...]:
    """Return ``(C(n, 0), ..., C(n, n))``, memoized per ``n``."""
    if n < 0:
        raise ValueError(f"binom_row: negative n={n}")
    row = _row_cache.get(n)
    if row is not None:
        return row
    with _row_lock:
        row = _row_cache.get(n)
        if row is None:
            # Build by the multiplicative recurrence to avoid n separate comb calls.
            vals = [1] * (n + 1)
            for k in range(1, n + 1):
                vals[k] = vals[k - 1] * (n - k + 1) // k
            row = tuple(vals)
            _row_cache[n] = row
    return row


def clear_row_cache() -> None:
    with _row_lock:
        _row_cache.clear()
