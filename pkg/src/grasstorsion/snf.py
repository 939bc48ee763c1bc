"""Smith normal form of integer matrices, invariant factors only."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class SNFResult:
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(f for f in self.invariant_factors if f > 1)


def smith_normal_form(m: Sequence[Sequence[int]]) -> SNFResult:
    """
    Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    Works on a private copy. Each round moves the nonzero entry of smallest
    absolute value to the pivot position and clears its row and column with
    Euclidean steps; a leftover entry not divisible by the pivot is folded
    into the pivot row, which strictly lowers the pivot and so terminates.
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors = []
    t = 0
    while t < min(rows, cols):
        pivot = _min_entry(a, t, rows, cols)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]

        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    _row_axpy(a, i, t, -q, t)
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        done = False
            if done:
                bad = _non_divisible(a, t, rows, cols)
                if bad is None:
                    break
                # fold the offending row into the pivot row; next pass lowers the pivot
                _row_axpy(a, t, bad, 1, t)
            pivot = _min_entry_cross(a, t, rows, cols)
            pi, pj = pivot
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]

        factors.append(abs(a[t][t]))
        t += 1

    for i in range(len(factors) - 1):
        assert factors[i + 1] % factors[i] == 0, factors
    return SNFResult(tuple(factors))


def _row_axpy(a, dst, src, scale, start):
    rd, rs = a[dst], a[src]
    for j in range(start, len(rd)):
        rd[j] += scale * rs[j]


def _min_entry(a, t, rows, cols):
    best = None
    best_val = 0
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            v = abs(row[j])
            if v and (best is None or v < best_val):
                best, best_val = (i, j), v
                if v == 1:
                    return best
    return best


def _min_entry_cross(a, t, rows, cols):
    # smallest nonzero in pivot row/column; pivot itself is nonzero so this exists
    best = (t, t)
    best_val = abs(a[t][t])
    for i in range(t + 1, rows):
        v = abs(a[i][t])
        if v and v < best_val:
            best, best_val = (i, t), v
    for j in range(t + 1, cols):
        v = abs(a[t][j])
        if v and v < best_val:
            best, best_val = (t, j), v
    return best


def _non_divisible(a, t, rows, cols):
    p = a[t][t]
    for i in range(t + 1, rows):
        for j in range(t + 1, cols):
            if a[i][j] % p:
                return i
    return None


def determinantal_divisors(m: Sequence[Sequence[int]]) -> list[int]:
    """
    gcd of all j x j minors, for j = 1.. until it vanishes.

    Exponential; meant only for cross-checking ``smith_normal_form`` on small
    matrices, where d_1 * ... * d_j equals the j-th determinantal divisor.
    """
    from itertools import combinations

    rows = len(m)
    cols = len(m[0]) if rows else 0
    out = []
    for size in range(1, min(rows, cols) + 1):
        g = 0
        for ri in combinations(range(rows), size):
            for ci in combinations(range(cols), size):
                g = gcd(g, _det([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        out.append(g)
    return out


def _det(a):
    # Bareiss fraction-free elimination
    a = [list(row) for row in a]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
