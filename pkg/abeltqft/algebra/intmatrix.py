"""Exact integer and rational matrices.

Entries are Python ints / ``fractions.Fraction`` so nothing overflows
during pivoting. Matrices act on column vectors: an ``r x c`` matrix is
a map Z^c -> Z^r.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from abeltqft.errors import DimensionMismatch, NonSquare, ParseError, SingularMatrix

logger = logging.getLogger(__name__)


def _as_int(value: Any) -> int:
    if isinstance(value, bool):
        raise ParseError(f"boolean is not an integer matrix entry: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise ParseError(f"not an integer matrix entry: {value!r}")


@dataclass(frozen=True)
class IntMatrix:
    """Immutable arbitrary-precision integer matrix stored row-major."""
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative shape {self.rows}x{self.cols}")
        entries = tuple(_as_int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    # ---------- constructors ----------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f"ragged row of length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Iterable[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        values = list(values)
        rows = len(values) if rows is None else rows
        cols = rows if cols is None else cols
        if len(values) > min(rows, cols):
            raise DimensionMismatch(f"{len(values)} diagonal values for {rows}x{cols}")
        data = [[0] * cols for _ in range(rows)]
        for i, x in enumerate(values):
            data[i][i] = x
        return cls.from_rows(data, cols)

    @classmethod
    def block_diagonal(cls, *blocks: "IntMatrix") -> "IntMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(data, cols)

    # ---------- access ----------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def diagonal_entries(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[i, j] for j in col_indices] for i in row_indices], len(col_indices)
        )

    # ---------- algebra ----------

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(self.column(j)) for j in range(self.cols)], self.rows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        data = [
            [sum(a * b for a, b in zip(self.row(i), col)) for col in cols]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(data, other.cols)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    # ---------- JSON ----------

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.to_lists()}

    @classmethod
    def from_json(cls, data: Any) -> "IntMatrix":
        if not isinstance(data, dict):
            raise ParseError("matrix JSON must be an object with rows, cols, entries")
        try:
            rows, cols, entries = data["rows"], data["cols"], data["entries"]
        except KeyError as e:
            raise ParseError(f"matrix JSON is missing key {e.args[0]!r}") from None
        if not isinstance(entries, list) or len(entries) != rows:
            raise ParseError(f"matrix JSON declares {rows} rows but lists {len(entries) if isinstance(entries, list) else 'none'}")
        try:
            return cls.from_rows(entries, cols)
        except DimensionMismatch as e:
            raise ParseError(str(e)) from None

    def __str__(self) -> str:
        if not self.entries:
            return f"[{self.rows}x{self.cols}]"
        return "[" + ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows)) + "]"


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable matrix of normalized ``Fraction`` entries."""
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(Fraction(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f"ragged row of length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_int(cls, m: IntMatrix) -> "RationalMatrix":
        return cls(m.rows, m.cols, m.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows([list(self.column(j)) for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "RationalMatrix | IntMatrix") -> "RationalMatrix":
        if isinstance(other, IntMatrix):
            other = RationalMatrix.from_int(other)
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        data = [
            [sum((a * b for a, b in zip(self.row(i), col)), Fraction(0)) for col in cols]
            for i in range(self.rows)
        ]
        return RationalMatrix.from_rows(data, other.cols)

    def __rmatmul__(self, other: IntMatrix) -> "RationalMatrix":
        if isinstance(other, IntMatrix):
            return RationalMatrix.from_int(other) @ self
        return NotImplemented

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == (1 if i == j else 0) for i in range(self.rows) for j in range(self.cols)
        )

    def to_int(self) -> IntMatrix:
        """Exact conversion; raises ``ValueError`` if some entry is not integral."""
        if any(x.denominator != 1 for x in self.entries):
            raise ValueError("matrix has non-integral entries")
        return IntMatrix(self.rows, self.cols, tuple(x.numerator for x in self.entries))

    def mod_one(self) -> "RationalMatrix":
        """Reduce every entry to its representative in [0, 1)."""
        return RationalMatrix(self.rows, self.cols, tuple(x % 1 for x in self.entries))

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in self.row(i)] for i in range(self.rows)]


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(m: IntMatrix) -> RationalMatrix:
    """Exact inverse over Q by Gauss-Jordan elimination on fractions."""
    if not m.is_square:
        raise NonSquare(f"inverse of a {m.rows}x{m.cols} matrix")
    n = m.rows
    x = [[Fraction(v) for v in m.row(i)] for i in range(n)]
    y = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    for i in range(n):
        pivot = next((r for r in range(i, n) if x[r][i] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"matrix {m} is singular")
        if pivot != i:
            x[i], x[pivot] = x[pivot], x[i]
            y[i], y[pivot] = y[pivot], y[i]
        p = x[i][i]
        x[i] = [v / p for v in x[i]]
        y[i] = [v / p for v in y[i]]
        for r in range(n):
            if r != i and x[r][i] != 0:
                f = x[r][i]
                x[r] = [a - f * b for a, b in zip(x[r], x[i])]
                y[r] = [a - f * b for a, b in zip(y[r], y[i])]
    return RationalMatrix.from_rows(y, n)


def integer_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix, which is again integral."""
    inv = rational_inverse(m)
    try:
        return inv.to_int()
    except ValueError:
        raise SingularMatrix(f"matrix {m} is not unimodular over Z") from None


def rank(m: IntMatrix) -> int:
    """Rank over Q, read off the Smith diagonal."""
    from abeltqft.algebra.snf import snf

    return sum(1 for x in snf(m).d.diagonal_entries() if x != 0)
