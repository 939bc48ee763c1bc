"""Restricted partition numbers and Gaussian binomial coefficients."""

from __future__ import annotations

import threading

from .errors import InvalidArgs
from .poly import ONE, Polynomial, exact_div, mul


class PartitionTable:
    """
    Memoized counts p(M, N; d): partitions of d into at most M parts, each
    part at most N.

    Uses p(M, N; d) = p(M, N-1; d) + p(M-1, N; d-N), splitting on whether
    some part equals N. Arguments are normalized to M <= N first since the
    count is symmetric, which halves the memo and bounds the recursion depth
    by M + N.
    """

    def __init__(self):
        self.memo: dict[tuple[int, int, int], int] = {}
        self._lock = threading.RLock()

    def __call__(self, M: int, N: int, d: int) -> int:
        if M < 0 or N < 0:
            raise InvalidArgs(f"M and N must be non-negative, got M={M}, N={N}")
        with self._lock:
            return self._count(M, N, d)

    def _count(self, M, N, d):
        if d < 0 or d > M * N:
            return 0
        if d == 0 or d == M * N:
            return 1
        if M > N:
            M, N = N, M
        key = (M, N, d)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        value = self._count(M, N - 1, d) + self._count(M - 1, N, d - N)
        self.memo[key] = value
        return value

    def row(self, M: int, N: int) -> list[int]:
        """All counts p(M, N; d) for d = 0..M*N."""
        return [self(M, N, d) for d in range(M * N + 1)]


_table = PartitionTable()


def clear_cache() -> None:
    with _table._lock:
        _table.memo.clear()


def restricted_partition(M: int, N: int, d: int) -> int:
    return _table(M, N, d)


def exact_quarter_partition(M: int, N: int, d: int, step: int = 4) -> int:
    """p(M, N; d/step), which is 0 unless ``step`` divides ``d``."""
    q, r = divmod(d, step)
    if r:
        return 0
    return restricted_partition(M, N, q)


def _one_minus_t_power(i: int) -> Polynomial:
    return Polynomial([1] + [0] * (i - 1) + [-1])


def gaussian_binomial(k: int, n: int) -> Polynomial:
    """
    The Gaussian binomial coefficient [n choose k]_t as a polynomial in t.

    Built literally as prod_{i=n-k+1..n}(1 - t^i) / prod_{i=1..k}(1 - t^i)
    with exact division, independent of the partition recurrence above.
    """
    if k < 0 or n < 0:
        raise InvalidArgs(f"k and n must be non-negative, got k={k}, n={n}")
    if k > n:
        raise InvalidArgs(f"k={k} exceeds n={n}")
    num = ONE
    den = ONE
    for i in range(1, k + 1):
        num = mul(num, _one_minus_t_power(n - k + i))
        den = mul(den, _one_minus_t_power(i))
    return exact_div(num, den)
