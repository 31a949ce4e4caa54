"""Catalog of closed oriented 3-manifolds given by surgery linking matrices."""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Union

from abeltqft.algebra.intmatrix import IntMatrix
from abeltqft.errors import InvalidManifold, NonSymmetric, NotCoprime, ParseError

logger = logging.getLogger(__name__)

# E8 Dynkin tree: a chain 0-1-2-3-4-5-6 with node 7 hanging off node 4
E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]


@dataclass(frozen=True)
class Manifold:
    """Surgery presentation; ``orientation = -1`` negates the matrix on export."""
    name: str
    matrix: IntMatrix
    orientation: int = 1

    def __post_init__(self):
        if not self.name:
            raise InvalidManifold("manifold name must be nonempty")
        if self.orientation not in (1, -1):
            raise InvalidManifold(f"orientation must be +1 or -1, got {self.orientation}")
        if not self.matrix.is_symmetric():
            raise NonSymmetric(f"surgery presentation of {self.name} is not symmetric")

    @property
    def presentation(self) -> IntMatrix:
        return self.matrix if self.orientation == 1 else -self.matrix

    @property
    def display_name(self) -> str:
        return self.name if self.orientation == 1 else f"-{self.name}"

    def reversed(self) -> "Manifold":
        return replace(self, orientation=-self.orientation)

    def to_json(self) -> dict:
        return self.presentation.to_json()


def sphere3() -> Manifold:
    return Manifold("S3", IntMatrix.zeros(0, 0))


def s1_x_s2() -> Manifold:
    return Manifold("S1xS2", IntMatrix.from_rows([[0]]))


def continued_fraction(p: int, q: int) -> list[int]:
    """p/q = a1 - 1/(a2 - 1/(...)) with every a_i >= 2, for 0 < q < p."""
    coefficients = []
    while q:
        a = -(-p // q)
        coefficients.append(a)
        p, q = q, a * q - p
    return coefficients


def lens_space(p: int, q: int) -> Manifold:
    """L(p, q) as surgery on a chain link with framings from the continued fraction of p/q."""
    if p < 1:
        raise InvalidManifold(f"L({p},{q}): p must be >= 1")
    if math.gcd(p, q) != 1:
        raise NotCoprime(p, q)
    if p == 1:
        return Manifold("L(1,1)", IntMatrix.from_rows([[1]]))
    q %= p
    if p == 2:
        return Manifold("L(2,1)", IntMatrix.from_rows([[2]]))
    chain = continued_fraction(p, q)
    n = len(chain)
    data = [[0] * n for _ in range(n)]
    for i, a in enumerate(chain):
        data[i][i] = a
        if i + 1 < n:
            data[i][i + 1] = data[i + 1][i] = 1
    logger.debug(f"[Manifolds] L({p},{q}) continued fraction {chain}")
    return Manifold(f"L({p},{q})", IntMatrix.from_rows(data))


def connected_sum(a: Manifold, b: Manifold) -> Manifold:
    return Manifold(
        f"sum({a.display_name},{b.display_name})",
        IntMatrix.block_diagonal(a.presentation, b.presentation),
    )


def e8_matrix() -> IntMatrix:
    data = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in E8_EDGES:
        data[i][j] = data[j][i] = -1
    return IntMatrix.from_rows(data)


def poincare_sphere() -> Manifold:
    return Manifold("Poincare", e8_matrix())


def load_matrix_file(path: Union[str, Path]) -> Manifold:
    """Custom manifold from a matrix JSON file ({"rows", "cols", "entries"})."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise ParseError(f"cannot read matrix file {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"matrix file {path} is not valid JSON: {e.msg}", position=e.pos) from None
    return Manifold(f"@{path}", IntMatrix.from_json(data))


def save_matrix_file(manifold: Manifold, path: Union[str, Path]):
    path = Path(path)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(manifold.to_json(), f, sort_keys=True, indent=2)
        f.write("\n")
    logger.info(f"[Manifolds] wrote presentation of {manifold.display_name} to {path}")


# names accepted by the parser, with a representative for listings
CATALOG = {
    "S3": sphere3,
    "S1xS2": s1_x_s2,
    "Poincare": poincare_sphere,
}
