"""
Z2-torsion ranks of H_*(G_k(R^n); Z) and H^*(G_k(R^n); Z).

All torsion of the integral homology of a real Grassmannian has order 2, so
the universal coefficient theorem gives, degree by degree,

    B_d = FB_d + TB_{d-1} + TB_d

with B_d the mod-2 Betti number, FB_d the free rank, TB_d the number of Z2
summands in H_d. Summed into generating functions this reads
P = FP + (1 + t) TP, which is solved here by exact polynomial division and,
independently, by unrolling the recursion into an alternating sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import mod2_betti, mod2_poincare, rational_betti, rational_poincare
from .errors import InternalInconsistency
from .params import GrassmannianParams, as_params
from .poly import ONE, T, Polynomial, exact_div, mul

ONE_PLUS_T = ONE + T


def torsion_gf_homology(params: GrassmannianParams) -> Polynomial:
    """sum_d TB_d t^d, computed as (P - FP) / (1 + t)."""
    params = as_params(params)
    return exact_div(mod2_poincare(params) - rational_poincare(params), ONE_PLUS_T)


def torsion_gf_cohomology(params: GrassmannianParams) -> Polynomial:
    return mul(T, torsion_gf_homology(params))


def torsion_rank_direct(params: GrassmannianParams, d: int) -> int:
    """TB_d = (B_d - FB_d) - (B_{d-1} - FB_{d-1}) + ... down to degree 0."""
    params = as_params(params)
    total = 0
    sign = 1
    for j in range(d, -1, -1):
        total += sign * (mod2_betti(params, j) - rational_betti(params, j))
        sign = -sign
    return total


def group_string(free: int, torsion: int) -> str:
    """Canonical form of Z^free + Z2^torsion, e.g. ``Z``, ``Z^2 + Z2``, ``0``."""
    parts = []
    if free:
        parts.append("Z" if free == 1 else f"Z^{free}")
    if torsion:
        parts.append("Z2" if torsion == 1 else f"Z2^{torsion}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class DegreeRow:
    d: int
    mod2: int  # B_d
    free: int  # FB_d
    torsion: int  # TB_d
    cotorsion: int  # TB_{d-1}

    @property
    def homology(self) -> str:
        return group_string(self.free, self.torsion)

    @property
    def cohomology(self) -> str:
        return group_string(self.free, self.cotorsion)


@dataclass(frozen=True)
class HomologyReport:
    params: GrassmannianParams
    mod2_poincare: Polynomial
    free_part: Polynomial
    torsion_homology: Polynomial
    torsion_cohomology: Polynomial
    rows: tuple[DegreeRow, ...]

    @property
    def dimension(self) -> int:
        return self.params.dimension

    def homology_groups(self) -> list[str]:
        return [row.homology for row in self.rows]

    def cohomology_groups(self) -> list[str]:
        return [row.cohomology for row in self.rows]


def group_report(params: GrassmannianParams) -> HomologyReport:
    params = as_params(params)
    P = mod2_poincare(params)
    FP = rational_poincare(params)
    TP = torsion_gf_homology(params)
    coTP = mul(T, TP)
    D = params.dimension

    if any(c < 0 for c in TP):
        raise InternalInconsistency(f"negative torsion rank for {params}: {list(TP)}")
    if TP[D] != 0 or TP.degree > D:
        raise InternalInconsistency(f"torsion in top degree for {params}")

    rows = []
    for d in range(D + 1):
        row = DegreeRow(d, P[d], FP[d], TP[d], TP[d - 1] if d else 0)
        if row.mod2 != row.free + row.cotorsion + row.torsion:
            raise InternalInconsistency(
                f"{params} degree {d}: B={row.mod2} != FB+TB_(d-1)+TB_d "
                f"= {row.free}+{row.cotorsion}+{row.torsion}"
            )
        rows.append(row)
    return HomologyReport(params, P, FP, TP, coTP, tuple(rows))
