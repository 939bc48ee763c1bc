"""
Integral cellular chain complex of G_k(R^n) on Schubert cells.

A Schubert symbol is a non-decreasing tuple (a_1, ..., a_k) with entries in
[0, n-k]; it indexes one cell of dimension a_1 + ... + a_k. The boundary of
a cell only reaches the symbols obtained by lowering a single entry by one,
and the coefficient is 0 or +-2.

This module deliberately imports nothing from the formula side (poly, partitions,
betti, torsion) so that it can serve as an independent check on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import TextIO

from .errors import ComplexityLimit, InvalidArgs
from .params import GrassmannianParams, as_params
from .snf import smith_normal_form

SchubertSymbol = tuple[int, ...]

DEFAULT_MAX_DIMENSION = 36


def enumerate_symbols(params: GrassmannianParams, d: int) -> list[SchubertSymbol]:
    """All Schubert symbols of dimension d, in lexicographic order."""
    params = as_params(params)
    k, l = params.k, params.l
    if d < 0 or d > k * l:
        return []
    return [s for s in itertools.combinations_with_replacement(range(l + 1), k) if sum(s) == d]


def incidence(symbol: SchubertSymbol, i: int) -> int:
    """
    Coefficient of the cell with entry ``i`` (0-based) lowered by one in the
    boundary of ``symbol``, or 0 if that lowering is not a valid symbol.

    The magnitude is 2 when a_i + (k - 1 - i) is even, counting positions
    from the largest entry; for k = 1 this is the RP^{n-1} rule
    d e_a = (1 + (-1)^a) e_{a-1}. The sign (-1)^(a_1 + ... + a_{i-1} + i)
    makes any two lowerings in different positions anticommute, which is
    what d o d = 0 needs.
    """
    a = symbol
    k = len(a)
    if a[i] < 1 or (i > 0 and a[i] - 1 < a[i - 1]):
        return 0
    if (a[i] + k - 1 - i) % 2:
        return 0
    sign = -1 if (sum(a[:i]) + i) % 2 else 1
    return 2 * sign


@dataclass
class SparseMatrix:
    """Integer matrix stored by column as {row: value} dicts."""

    nrows: int
    ncols: int
    columns: list[dict[int, int]] = field(default_factory=list)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def entries(self):
        """Nonzero (row, col, value) triplets in column-major order."""
        for j, col in enumerate(self.columns):
            for i in sorted(col):
                yield i, j, col[i]

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = []
        for col in other.columns:
            acc: dict[int, int] = {}
            for mid, v in col.items():
                for i, w in self.columns[mid].items():
                    acc[i] = acc.get(i, 0) + w * v
            cols.append({i: v for i, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, cols)

    def is_zero(self) -> bool:
        return not any(self.columns)


def boundary_matrix(params: GrassmannianParams, d: int) -> SparseMatrix:
    """The cellular boundary from degree-d cells to degree-(d-1) cells."""
    params = as_params(params)
    if not 1 <= d <= params.dimension:
        raise InvalidArgs(f"boundary degree {d} outside 1..{params.dimension} for {params}")
    sources = enumerate_symbols(params, d)
    targets = enumerate_symbols(params, d - 1)
    index = {s: r for r, s in enumerate(targets)}
    columns = []
    for s in sources:
        col = {}
        for i in range(params.k):
            c = incidence(s, i)
            if c:
                lowered = s[:i] + (s[i] - 1,) + s[i + 1 :]
                col[index[lowered]] = c
        columns.append(col)
    return SparseMatrix(len(targets), len(sources), columns)


@dataclass
class ChainComplex:
    params: GrassmannianParams
    cells: dict[int, list[SchubertSymbol]]
    # boundaries[d] maps degree d to degree d-1, for 1 <= d <= dimension
    boundaries: dict[int, SparseMatrix]

    def squares_to_zero(self) -> bool:
        return all(
            (self.boundaries[d - 1] @ self.boundaries[d]).is_zero()
            for d in range(2, self.params.dimension + 1)
        )

    def dump(self, out: TextIO) -> None:
        """Sparse triplet dump: a header per degree, then ``row col value`` lines."""
        out.write(f"# {self.params} boundary matrices, 0-based indices into lexicographic cells\n")
        for d in sorted(self.boundaries):
            m = self.boundaries[d]
            out.write(f"# d={d} rows={m.nrows} cols={m.ncols}\n")
            for i, j, v in m.entries():
                out.write(f"{i} {j} {v}\n")


def check_size(params: GrassmannianParams, max_cells: int | None = None) -> None:
    if max_cells is None:
        if params.dimension > DEFAULT_MAX_DIMENSION:
            raise ComplexityLimit(
                f"{params} has dimension {params.dimension}, above the oracle limit "
                f"{DEFAULT_MAX_DIMENSION}; pass a max_cells override to proceed",
                size=params.dimension,
                limit=DEFAULT_MAX_DIMENSION,
            )
        return
    total = comb(params.n, params.k)
    if total > max_cells:
        raise ComplexityLimit(
            f"{params} has {total} Schubert cells, above the limit {max_cells}",
            size=total,
            limit=max_cells,
        )


def chain_complex(params: GrassmannianParams, max_cells: int | None = None) -> ChainComplex:
    params = as_params(params)
    check_size(params, max_cells)
    D = params.dimension
    cells = {d: enumerate_symbols(params, d) for d in range(D + 1)}
    boundaries = {d: boundary_matrix(params, d) for d in range(1, D + 1)}
    return ChainComplex(params, cells, boundaries)


@dataclass(frozen=True)
class DegreeHomology:
    d: int
    free: int
    torsion: tuple[int, ...]  # orders of the cyclic summands, e.g. (2, 2)

    def __str__(self):
        parts = []
        if self.free:
            parts.append("Z" if self.free == 1 else f"Z^{self.free}")
        for order in sorted(set(self.torsion)):
            count = self.torsion.count(order)
            parts.append(f"Z{order}" if count == 1 else f"Z{order}^{count}")
        return " + ".join(parts) if parts else "0"


def integral_homology(
    params: GrassmannianParams,
    max_cells: int | None = None,
    complex_: ChainComplex | None = None,
) -> list[DegreeHomology]:
    """
    H_d(G_k(R^n); Z) for d = 0..k(n-k) from the Schubert chain complex.

    free_d = #cells_d - rank(d_d) - rank(d_{d+1}); the torsion of H_d is the
    invariant factors of d_{d+1} that exceed 1.
    """
    params = as_params(params)
    cx = complex_ if complex_ is not None else chain_complex(params, max_cells)
    D = params.dimension
    snf = {d: smith_normal_form(cx.boundaries[d].to_dense()) for d in cx.boundaries}
    out = []
    for d in range(D + 1):
        rank_out = snf[d].rank if d in snf else 0
        incoming = snf.get(d + 1)
        rank_in = incoming.rank if incoming else 0
        torsion = incoming.torsion if incoming else ()
        out.append(DegreeHomology(d, len(cx.cells[d]) - rank_out - rank_in, tuple(sorted(torsion))))
    return out
