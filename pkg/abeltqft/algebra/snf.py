"""Smith normal form with transformation matrices.

For an integer matrix ``m`` find unimodular ``u``, ``v`` and a diagonal
``d`` with ``u @ m @ v == d``, the nonzero diagonal entries positive and
each dividing the next, zeros last.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from abeltqft.algebra.intmatrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfDecomposition:
    """D = U M V."""
    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    @property
    def invariant_factors(self) -> list[int]:
        """Diagonal of D, units and trailing zeros included."""
        return self.d.diagonal_entries()

    @property
    def rank(self) -> int:
        return sum(1 for x in self.invariant_factors if x != 0)


def _swap_rows(a: list[list[int]], u: list[list[int]], i: int, k: int):
    if i != k:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]


def _swap_cols(a: list[list[int]], v: list[list[int]], j: int, k: int):
    if j != k:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]


def _add_row(a: list[list[int]], u: list[list[int]], target: int, source: int, factor: int):
    """row[target] += factor * row[source] on both A and U."""
    a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
    u[target] = [x + factor * y for x, y in zip(u[target], u[source])]


def _add_col(a: list[list[int]], v: list[list[int]], target: int, source: int, factor: int):
    """col[target] += factor * col[source] on both A and V."""
    for row in a:
        row[target] += factor * row[source]
    for row in v:
        row[target] += factor * row[source]


def _min_nonzero(a: list[list[int]], t: int) -> Optional[tuple[int, int]]:
    """Position of the smallest nonzero |entry| in the block a[t:, t:]."""
    best = None
    best_abs = 0
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            x = abs(a[i][j])
            if x and (best is None or x < best_abs):
                best, best_abs = (i, j), x
                if x == 1:
                    return best
    return best


def _smallest_in(values: list[tuple[int, int]]) -> Optional[int]:
    """Index whose value has the smallest nonzero |value|, given (index, value) pairs."""
    nonzero = [(abs(x), idx) for idx, x in values if x]
    return min(nonzero)[1] if nonzero else None


def snf(m: IntMatrix) -> SnfDecomposition:
    rows, cols = m.rows, m.cols
    a = m.to_lists()
    u = IntMatrix.identity(rows).to_lists()
    v = IntMatrix.identity(cols).to_lists()

    for t in range(min(rows, cols)):
        pivot = _min_nonzero(a, t)
        if pivot is None:
            break
        _swap_rows(a, u, t, pivot[0])
        _swap_cols(a, v, t, pivot[1])

        while True:
            # clear column t below the pivot
            for i in range(t + 1, rows):
                if a[i][t]:
                    _add_row(a, u, i, t, -(a[i][t] // a[t][t]))
            k = _smallest_in([(i, a[i][t]) for i in range(t + 1, rows)])
            if k is not None:
                _swap_rows(a, u, t, k)
                continue

            # clear row t right of the pivot
            for j in range(t + 1, cols):
                if a[t][j]:
                    _add_col(a, v, j, t, -(a[t][j] // a[t][t]))
            k = _smallest_in([(j, a[t][j]) for j in range(t + 1, cols)])
            if k is not None:
                _swap_cols(a, v, t, k)
                continue

            # the pivot must divide the whole remaining block
            bad = next(
                (i for i in range(t + 1, rows)
                 if any(a[i][j] % a[t][t] for j in range(t + 1, cols))),
                None,
            )
            if bad is not None:
                _add_row(a, u, t, bad, 1)
                continue
            break

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    result = SnfDecomposition(
        u=IntMatrix.from_rows(u, rows),
        d=IntMatrix.from_rows(a, cols),
        v=IntMatrix.from_rows(v, cols),
    )
    logger.debug(f"[SNF] {rows}x{cols} -> invariant factors {result.invariant_factors}")
    return result
