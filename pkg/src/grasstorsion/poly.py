"""
Dense univariate polynomials with exact integer coefficients.

``Polynomial((1, 0, 2))`` is ``1 + 2t^2``. Coefficients are Python ints, so
nothing ever overflows or rounds. Instances are immutable and always kept in
canonical form: the highest stored coefficient is nonzero, and the zero
polynomial stores no coefficients at all.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DivisionByZero, NonExactDivision


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Polynomial:
    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        values = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            values.append(c)
        object.__setattr__(self, "coeffs", _trim(values))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> Polynomial:
        if degree < 0:
            raise ValueError("degree must be non-negative")
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> int:
        # coefficient of t^d, zero outside the stored range
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return render(self)

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __floordiv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(self, other)

    def __call__(self, x: int) -> int:
        return eval_at(self, x)


def _coerce(value) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return None


ZERO = Polynomial()
ONE = Polynomial((1,))
T = Polynomial((0, 1))


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    return Polynomial(a[i] + b[i] for i in range(n))


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return Polynomial(out)


def divmod_poly(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """
    Descending long division over the integers.

    Raises NonExactDivision as soon as a leading coefficient is not divisible
    by the leading coefficient of ``den``; for monic-up-to-sign divisors such
    as ``1 - t^i`` and ``1 + t`` that never happens and the remainder is
    returned in full.
    """
    if den.is_zero():
        raise DivisionByZero("polynomial division by zero")
    rem = list(num.coeffs)
    dd = den.degree
    lead = den.coeffs[-1]
    if len(rem) <= dd:
        return ZERO, num
    quot = [0] * (len(rem) - dd)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        top = rem[shift + dd]
        if top == 0:
            continue
        q, r = divmod(top, lead)
        if r:
            raise NonExactDivision(
                f"leading coefficient {top} of t^{shift + dd} not divisible by {lead}"
            )
        quot[shift] = q
        for j, c in enumerate(den.coeffs):
            rem[shift + j] -= q * c
    return Polynomial(quot), Polynomial(rem)


def exact_div(num: Polynomial, den: Polynomial) -> Polynomial:
    """Return ``q`` with ``q * den == num``; a nonzero remainder is an error."""
    q, r = divmod_poly(num, den)
    if not r.is_zero():
        raise NonExactDivision(f"({render(num)}) / ({render(den)}) leaves remainder {render(r)}")
    return q


def compose_power(p: Polynomial, m: int) -> Polynomial:
    """Substitute ``t -> t^m``."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if p.is_zero():
        return ZERO
    out = [0] * (m * p.degree + 1)
    for d, c in enumerate(p.coeffs):
        out[m * d] = c
    return Polynomial(out)


def eval_at(p: Polynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def render(p: Polynomial) -> str:
    """ASCII rendering in ascending degree: ``1 + t + 2t^2 - t^5``; ``0`` when zero."""
    terms = []
    for d, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            power = "t" if d == 1 else f"t^{d}"
            body = power if mag == 1 else f"{mag}{power}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out
