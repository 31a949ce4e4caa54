import math

import pytest

from abeltqft.algebra.intmatrix import IntMatrix, det
from abeltqft.algebra.snf import snf


def check_decomposition(m: IntMatrix):
    dec = snf(m)
    assert dec.u @ m @ dec.v == dec.d
    assert abs(det(dec.u)) == 1
    assert abs(det(dec.v)) == 1

    d = dec.d
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d[i, j] == 0
    factors = dec.invariant_factors
    assert all(x >= 0 for x in factors)
    nonzero = [x for x in factors if x]
    # zeros last
    assert factors[:len(nonzero)] == nonzero
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    if m.is_square:
        assert abs(det(m)) == math.prod(factors)
    return dec


@pytest.mark.parametrize(
    "rows, factors",
    [
        ([[2, 0], [0, 3]], [1, 6]),
        ([[2, 4], [6, 8]], [2, 4]),
        ([[0, 0], [0, 0]], [0, 0]),
        ([[2, 0], [0, 2]], [2, 2]),
        ([[0, 5]], [5]),
        ([[4], [6]], [2]),
        ([[6, 0, 0], [0, 10, 0], [0, 0, 15]], [1, 30, 30]),
        ([[2, 1], [1, 2]], [1, 3]),
    ],
)
def test_invariant_factor_examples(rows, factors):
    dec = check_decomposition(IntMatrix.from_rows(rows))
    assert dec.invariant_factors == factors


def test_empty_matrix():
    dec = snf(IntMatrix.zeros(0, 0))
    assert dec.invariant_factors == []
    assert dec.rank == 0


def test_rank_of_degenerate():
    dec = check_decomposition(IntMatrix.from_rows([[2, 2], [2, 2]]))
    assert dec.invariant_factors == [2, 0]
    assert dec.rank == 1


def test_random_matrices(rng):
    for _ in range(1000):
        rows = int(rng.integers(1, 7))
        cols = int(rng.integers(1, 7))
        entries = rng.integers(-9, 10, size=(rows, cols)).tolist()
        check_decomposition(IntMatrix.from_rows(entries, cols))


def test_input_not_mutated():
    m = IntMatrix.from_rows([[4, 6], [6, 9]])
    before = m.to_lists()
    snf(m)
    assert m.to_lists() == before


def test_normal_form_is_fixed(rng):
    for rows in ([[1, 0], [0, 6]], [[2, 0, 0], [0, 4, 0], [0, 0, 0]], [[3, 0, 0]], [[0, 0], [0, 0]]):
        d = IntMatrix.from_rows(rows)
        assert snf(d).d == d
    for _ in range(200):
        rows = int(rng.integers(1, 6))
        cols = int(rng.integers(1, 6))
        m = IntMatrix.from_rows(rng.integers(-9, 10, size=(rows, cols)).tolist(), cols)
        d = snf(m).d
        assert snf(d).d == d
