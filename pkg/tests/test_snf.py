import random

import pytest
from hypothesis import given, settings, strategies as st

from grasstorsion.snf import determinantal_divisors, smith_normal_form


@pytest.mark.parametrize(
    "m, factors",
    [
        ([[2]], (2,)),
        ([[2, 4], [6, 8]], (2, 4)),
        ([[0, 0], [0, 0]], ()),
        ([], ()),
        ([[0, 0, 0]], ()),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], (1, 3)),
        ([[2, 0], [0, 3]], (1, 6)),
        ([[6, 0, 0], [0, 10, 0], [0, 0, 15]], (1, 30, 30)),
    ],
)
def test_examples(m, factors):
    res = smith_normal_form(m)
    assert res.invariant_factors == factors
    assert res.rank == len(factors)


def test_2x2_example_against_minors():
    # d_1 = gcd of entries, d_1 d_2 = |det|
    assert determinantal_divisors([[2, 4], [6, 8]]) == [2, 8]


def test_input_not_mutated():
    m = [[4, 6], [6, 9]]
    smith_normal_form(m)
    assert m == [[4, 6], [6, 9]]


def test_torsion_property():
    assert smith_normal_form([[2, 0], [0, 1]]).torsion == (2,)


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


@settings(max_examples=300)
@given(matrices)
def test_matches_determinantal_divisors(m):
    factors = smith_normal_form(m).invariant_factors
    divisors = determinantal_divisors(m)
    assert len(factors) == len(divisors)
    prod = 1
    for f, dd in zip(factors, divisors):
        prod *= f
        assert prod == dd
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


def _random_unimodular(n, rng):
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        u[i] = [a + c * b for a, b in zip(u[i], u[j])]
    return u


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


@pytest.mark.parametrize("seed", range(20))
def test_invariant_under_unimodular_change_of_basis(seed):
    rng = random.Random(seed)
    r, c = rng.randint(1, 7), rng.randint(1, 7)
    m = [[rng.choice([0, 0, 2, -2, 4, 6]) for _ in range(c)] for _ in range(r)]
    conj = _matmul(_matmul(_random_unimodular(r, rng), m), _random_unimodular(c, rng))
    assert smith_normal_form(conj) == smith_normal_form(m)
