"""Exact integer combinatorics: binomials, Bell numbers, integer partitions,
Stirling numbers of the second kind, factorials.

Everything here is computed with Python's unbounded integers; there is no
floating point and no rounding anywhere.  Sequence functions memoize their
tables and grow them on demand, guarded by a lock so concurrent callers are
safe after warm-up.
"""

from __future__ import annotations

import math
import threading

# Exact unbounded nonnegative integer; alias used across the package.
BigCount = int

# Hard input cap: these sequences are cheap up to a few hundred terms but
# grow fast enough that an accidental huge argument should be an error,
# not a hang.
MAX_INDEX = 10_000

_lock = threading.Lock()

# Bell triangle rows; _bell[i] is b(i).
_bell: list[int] = [1]
_bell_row: list[int] = [1]

# p(0), p(1), ... computed by the bounded-part recurrence.
_partitions: list[int] = [1]


class InputTooLargeError(ValueError):
    """Raised when a sequence index exceeds MAX_INDEX."""


def _check(n, name="n"):
    if n < 0:
        raise ValueError(f"{name} must be nonnegative, got {n}")
    if n > MAX_INDEX:
        raise InputTooLargeError(f"{name}={n} exceeds cap {MAX_INDEX}")


def binomial(n: int, k: int) -> BigCount:
    """C(n, k); zero when k < 0 or k > n."""
    _check(n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> BigCount:
    _check(n)
    return math.factorial(n)


def bell(n: int) -> BigCount:
    """n-th Bell number, b(0) = 1."""
    _check(n)
    with _lock:
        global _bell_row
        while len(_bell) <= n:
            # next Bell-triangle row starts with the previous row's last entry
            row = [_bell_row[-1]]
            for x in _bell_row:
                row.append(row[-1] + x)
            _bell_row = row
            _bell.append(row[0])
        return _bell[n]


def partition_count(n: int) -> BigCount:
    """Number of integer partitions p(n), p(0) = 1."""
    _check(n)
    with _lock:
        if len(_partitions) <= n:
            # p(m) with parts <= k, built column by column so the table can
            # be extended without recomputation.
            old = len(_partitions)
            table = [1] + [0] * n
            for part in range(1, n + 1):
                for m in range(part, n + 1):
                    table[m] += table[m - part]
            for m in range(old, n + 1):
                _partitions.append(table[m])
        return _partitions[n]


def partition_prefix_sum(n: int) -> BigCount:
    """p(1) + p(2) + ... + p(n); requires n >= 1."""
    _check(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(partition_count(i) for i in range(1, n + 1))


def stirling2(n: int, k: int) -> BigCount:
    """Stirling number of the second kind S(n, k); S(0, 0) = 1.

    Uses the explicit inclusion-exclusion sum (exact division by k!), which
    keeps it independent of the recurrence used as a test oracle.
    """
    _check(n)
    _check(k, "k")
    if k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    total = 0
    for j in range(k + 1):
        term = math.comb(k, j) * (k - j) ** n
        total += -term if j & 1 else term
    q, rem = divmod(total, math.factorial(k))
    if rem:
        raise ArithmeticError(f"inexact division in stirling2({n},{k})")
    return q


def warm_up(n: int) -> None:
    """Precompute Bell and partition tables through index n."""
    bell(n)
    partition_count(n)
