"""Finitely generated abelian groups and first homology of 3-manifolds.

H_1 of a surgered manifold is the cokernel of its linking matrix; a
chain complex gives H_1 = ker d1 / im d2. Both are read off Smith
normal forms and returned as free rank plus invariant factors.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Any, Iterator, Optional, Sequence

from abeltqft.algebra.intmatrix import IntMatrix
from abeltqft.algebra.snf import snf
from abeltqft.config import config
from abeltqft.errors import (
    BudgetExceeded,
    ComplexInvalid,
    DimensionMismatch,
    NonSquare,
    NonSymmetric,
    ParseError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/p_1 + ... + Z/p_n with p_i >= 2 and p_i | p_(i+1)."""
    free_rank: int = 0
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(int(p) for p in self.torsion_orders)
        object.__setattr__(self, "torsion_orders", orders)
        if self.free_rank < 0:
            raise ValueError(f"negative free rank {self.free_rank}")
        if any(p < 2 for p in orders):
            raise ValueError(f"torsion orders must be >= 2, got {orders}")
        if any(b % a for a, b in zip(orders, orders[1:])):
            raise ValueError(f"torsion orders {orders} do not form a divisibility chain")

    @classmethod
    def from_orders(cls, free_rank: int, orders: Sequence[int]) -> "AbelianGroup":
        """Normalize arbitrary cyclic orders (units dropped) to invariant factors."""
        orders = [abs(p) for p in orders if abs(p) != 1]
        free_rank += sum(1 for p in orders if p == 0)
        orders = [p for p in orders if p]
        factors = snf(IntMatrix.diagonal(orders)).invariant_factors
        return cls(free_rank, tuple(p for p in factors if p > 1))

    @property
    def torsion_order(self) -> int:
        """|T| = prod p_i."""
        return math.prod(self.torsion_orders)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_orders

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_orders(
            self.free_rank + other.free_rank, self.torsion_orders + other.torsion_orders
        )

    def zero(self) -> "TorsionElement":
        return TorsionElement(self.torsion_orders, (0,) * len(self.torsion_orders))

    def element(self, coefficients: Sequence[int]) -> "TorsionElement":
        return TorsionElement(self.torsion_orders, tuple(coefficients))

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion_orders)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{p}" for p in self.torsion_orders)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TorsionElement:
    """sum_i kappa_i e_i with kappa_i reduced mod p_i."""
    orders: tuple[int, ...]
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.orders) != len(self.coefficients):
            raise DimensionMismatch(
                f"{len(self.coefficients)} coefficients for torsion orders {self.orders}"
            )
        object.__setattr__(
            self, "coefficients", tuple(int(k) % p for k, p in zip(self.coefficients, self.orders))
        )

    def _check(self, other: "TorsionElement"):
        if self.orders != other.orders:
            raise DimensionMismatch(f"elements of different groups {self.orders} / {other.orders}")

    def __add__(self, other: "TorsionElement") -> "TorsionElement":
        self._check(other)
        return TorsionElement(self.orders, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "TorsionElement":
        return TorsionElement(self.orders, tuple(-a for a in self.coefficients))

    def __sub__(self, other: "TorsionElement") -> "TorsionElement":
        return self + (-other)

    def __mul__(self, n: int) -> "TorsionElement":
        return TorsionElement(self.orders, tuple(n * a for a in self.coefficients))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


@dataclass(frozen=True)
class ChainComplex:
    """C3 -d3-> C2 -d2-> C1 -d1-> C0."""
    d3: IntMatrix
    d2: IntMatrix
    d1: IntMatrix

    def validate(self):
        if self.d3.rows != self.d2.cols or self.d2.rows != self.d1.cols:
            raise ComplexInvalid(
                f"boundary shapes do not chain: d3 {self.d3.shape}, d2 {self.d2.shape}, d1 {self.d1.shape}"
            )
        if not (self.d2 @ self.d3).is_zero():
            raise ComplexInvalid("d2 . d3 != 0")
        if not (self.d1 @ self.d2).is_zero():
            raise ComplexInvalid("d1 . d2 != 0")

    def to_json(self) -> dict:
        return {"d3": self.d3.to_json(), "d2": self.d2.to_json(), "d1": self.d1.to_json()}

    @classmethod
    def from_json(cls, data: Any) -> "ChainComplex":
        if not isinstance(data, dict):
            raise ParseError("chain complex JSON must be an object with d3, d2, d1")
        try:
            return cls(
                d3=IntMatrix.from_json(data["d3"]),
                d2=IntMatrix.from_json(data["d2"]),
                d1=IntMatrix.from_json(data["d1"]),
            )
        except KeyError as e:
            raise ParseError(f"chain complex JSON is missing {e.args[0]!r}") from None


def group_from_presentation(l: IntMatrix, strict: bool = False) -> AbelianGroup:
    """coker(l) = Z^n / l Z^n for a square (surgery) matrix."""
    if not l.is_square:
        raise NonSquare(f"presentation matrix is {l.rows}x{l.cols}")
    if not l.is_symmetric():
        if strict:
            raise NonSymmetric(f"presentation matrix {l} is not symmetric")
        logger.warning(f"[Homology] presentation {l} is not symmetric; computing the cokernel only")
    factors = snf(l).invariant_factors
    free_rank = l.rows - sum(1 for x in factors if x != 0)
    group = AbelianGroup(free_rank, tuple(x for x in factors if x > 1))
    logger.debug(f"[Homology] coker of {l.rows}x{l.cols} presentation = {group}")
    return group


def homology_of_complex(c: ChainComplex, degree: int = 1) -> AbelianGroup:
    """H_1 = ker d1 / im d2."""
    if degree != 1:
        raise ValueError(f"only degree 1 homology is supported, got {degree}")
    c.validate()
    r1 = snf(c.d1).rank
    d2 = snf(c.d2)
    # ker d1 is a direct summand of C1 and contains im d2
    free_rank = (c.d1.cols - r1) - d2.rank
    return AbelianGroup(free_rank, tuple(x for x in d2.invariant_factors if x > 1))


def torsion_elements(g: AbelianGroup, budget: Optional[int] = None) -> Iterator[TorsionElement]:
    """All elements of the torsion subgroup, lexicographic, zero first.

    超出枚举上限时直接抛出 BudgetExceeded，不会部分枚举。
    """
    budget = config.enumeration_budget if budget is None else budget
    count = g.torsion_order
    if count > budget:
        raise BudgetExceeded(
            f"torsion subgroup of order {count} exceeds the enumeration budget {budget}",
            required=count,
            budget=budget,
        )
    return _enumerate(g.torsion_orders)


def _enumerate(orders: tuple[int, ...]) -> Iterator[TorsionElement]:
    for coefficients in itertools.product(*(range(p) for p in orders)):
        yield TorsionElement(orders, coefficients)
