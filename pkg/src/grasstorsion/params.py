"""The parameter pair (k, n) naming a real Grassmannian."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, InvalidArgs


@dataclass(frozen=True)
class GrassmannianParams:
    """G_k(R^n), the k-planes in R^n."""

    k: int
    n: int

    def __post_init__(self):
        for name in ("k", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidArgs(f"{name} must be an integer, got {value!r}")
        if self.k < 0 or self.n < 0:
            raise InvalidArgs(f"k and n must be non-negative, got k={self.k}, n={self.n}")
        if self.k > self.n:
            raise InvalidArgs(f"k={self.k} exceeds n={self.n}")

    @property
    def l(self) -> int:
        return self.n - self.k

    @property
    def dimension(self) -> int:
        return self.k * self.l

    @property
    def half_k(self) -> int:
        return self.k // 2

    @property
    def half_l(self) -> int:
        return self.l // 2

    @property
    def odd_dimensional(self) -> bool:
        odd = self.dimension % 2 == 1
        if odd and not (self.k % 2 == 1 and self.n % 2 == 0):
            raise InternalInconsistency(f"odd dimension with k={self.k}, n={self.n}")
        return odd

    def __str__(self):
        return f"G_{self.k}(R^{self.n})"


def as_params(params) -> GrassmannianParams:
    """Accept either a ``GrassmannianParams`` or a ``(k, n)`` pair."""
    if isinstance(params, GrassmannianParams):
        return params
    k, n = params
    return GrassmannianParams(k, n)
