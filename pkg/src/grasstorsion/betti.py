"""
Poincare polynomials and Betti numbers of the real Grassmannian G_k(R^n).

Each quantity is available twice: as a whole polynomial built from Gaussian
binomials, and degree by degree from restricted partition counts. The two
routes share no code beyond the ``Polynomial`` type, so agreement between
them is a meaningful check.
"""

from __future__ import annotations

from .params import GrassmannianParams, as_params
from .partitions import exact_quarter_partition, gaussian_binomial, restricted_partition
from .poly import ONE, Polynomial, compose_power, mul


def mod2_poincare(params: GrassmannianParams) -> Polynomial:
    params = as_params(params)
    return gaussian_binomial(params.k, params.n)


def rational_poincare(params: GrassmannianParams) -> Polynomial:
    """
    Rational Poincare polynomial: [hk + hl choose hk]_{t^4} with hk = [k/2],
    hl = [(n-k)/2], times (1 + t^{n-1}) when k(n-k) is odd.
    """
    params = as_params(params)
    base = compose_power(gaussian_binomial(params.half_k, params.half_k + params.half_l), 4)
    if params.odd_dimensional:
        return mul(ONE + Polynomial.monomial(params.n - 1), base)
    return base


def mod2_betti(params: GrassmannianParams, d: int) -> int:
    params = as_params(params)
    return restricted_partition(params.k, params.l, d)


def rational_betti(params: GrassmannianParams, d: int) -> int:
    params = as_params(params)
    hk, hl = params.half_k, params.half_l
    value = exact_quarter_partition(hk, hl, d)
    if params.odd_dimensional:
        # the shifted copy lives in odd degrees (n is even), the first in degrees 0 mod 4
        value += exact_quarter_partition(hk, hl, d - params.n + 1)
    return value
