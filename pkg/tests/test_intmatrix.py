from fractions import Fraction

import pytest
import sympy

from abeltqft.algebra.intmatrix import IntMatrix, RationalMatrix, det, integer_inverse, rank, rational_inverse
from abeltqft.errors import DimensionMismatch, NonSquare, ParseError, SingularMatrix


def test_construction_and_access():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m[1, 2] == 6
    assert m.row(0) == (1, 2, 3)
    assert m.column(1) == (2, 5)
    assert m.T.shape == (3, 2)
    assert m.T[2, 1] == 6


def test_ragged_rows_rejected():
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_rows([[1, 2], [3]])


def test_non_integer_entries_rejected():
    with pytest.raises(ParseError):
        IntMatrix.from_rows([[1.5]])
    with pytest.raises(ParseError):
        IntMatrix.from_rows([[True]])


def test_block_diagonal():
    m = IntMatrix.block_diagonal(IntMatrix.from_rows([[2]]), IntMatrix.zeros(0, 0), IntMatrix.from_rows([[1, 1], [1, 3]]))
    assert m.to_lists() == [[2, 0, 0], [0, 1, 1], [0, 1, 3]]


def test_product_and_sum():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_lists() == [[2, 1], [4, 3]]
    assert (a + (-a)).is_zero()
    with pytest.raises(DimensionMismatch):
        a @ IntMatrix.zeros(3, 1)


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([], 1),
        ([[7]], 7),
        ([[1, 2], [3, 4]], -2),
        ([[0, 1], [1, 0]], -1),
        ([[2, 4], [1, 2]], 0),
        ([[0, 0, 1], [0, 2, 0], [3, 0, 0]], -6),
    ],
)
def test_det_examples(rows, expected):
    m = IntMatrix.from_rows(rows) if rows else IntMatrix.zeros(0, 0)
    assert det(m) == expected


def test_det_matches_sympy(rng):
    for _ in range(100):
        n = int(rng.integers(1, 6))
        rows = rng.integers(-9, 10, size=(n, n)).tolist()
        assert det(IntMatrix.from_rows(rows)) == int(sympy.Matrix(rows).det())


def test_det_non_square():
    with pytest.raises(NonSquare):
        det(IntMatrix.zeros(2, 3))


def test_rational_inverse():
    m = IntMatrix.from_rows([[3, 1], [1, 2]])
    inv = rational_inverse(m)
    assert inv.to_lists() == [[Fraction(2, 5), Fraction(-1, 5)], [Fraction(-1, 5), Fraction(3, 5)]]
    assert (m @ inv).is_identity()
    assert (inv @ m).is_identity()


def test_rational_inverse_singular():
    with pytest.raises(SingularMatrix):
        rational_inverse(IntMatrix.from_rows([[2, 4], [1, 2]]))


def test_integer_inverse():
    u = IntMatrix.from_rows([[2, 1], [1, 1]])
    assert (u @ integer_inverse(u)).to_lists() == [[1, 0], [0, 1]]
    with pytest.raises(SingularMatrix):
        integer_inverse(IntMatrix.from_rows([[2]]))


def test_rank():
    assert rank(IntMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(IntMatrix.zeros(3, 2)) == 0
    assert rank(IntMatrix.identity(4)) == 4


def test_mod_one():
    q = RationalMatrix.from_rows([[Fraction(-1, 3), Fraction(5, 2)]]).mod_one()
    assert q.row(0) == (Fraction(2, 3), Fraction(1, 2))


def test_json_round_trip():
    m = IntMatrix.from_rows([[2, -1], [-1, 2]])
    assert IntMatrix.from_json(m.to_json()) == m


@pytest.mark.parametrize(
    "data",
    [
        [[1]],
        {"rows": 1, "cols": 1},
        {"rows": 2, "cols": 1, "entries": [[1]]},
        {"rows": 1, "cols": 2, "entries": [[1]]},
        {"rows": 1, "cols": 1, "entries": [["x"]]},
    ],
)
def test_json_rejects_malformed(data):
    with pytest.raises(ParseError):
        IntMatrix.from_json(data)
