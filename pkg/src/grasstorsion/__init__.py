"""Mod-2 and rational Betti numbers and Z2-torsion of real Grassmannians."""

from .betti import mod2_betti, mod2_poincare, rational_betti, rational_poincare
from .errors import (
    ComplexityLimit,
    DivisionByZero,
    GrassmannianError,
    InternalInconsistency,
    InvalidArgs,
    NonExactDivision,
)
from .params import GrassmannianParams
from .partitions import gaussian_binomial, restricted_partition
from .poly import Polynomial
from .schubert import chain_complex, integral_homology
from .torsion import (
    HomologyReport,
    group_report,
    torsion_gf_cohomology,
    torsion_gf_homology,
    torsion_rank_direct,
)

__version__ = "0.1.0"
