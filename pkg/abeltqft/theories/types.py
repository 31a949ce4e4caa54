"""Data types for partition-function results."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from abeltqft.algebra.cyclotomic import CyclotomicNumber, GaussianApprox
from abeltqft.errors import NonIntegralLevel


class TheoryTag(Enum):
    """Which abelian theory a result belongs to."""
    CS = "CS"  # Chern-Simons, action 2 pi N (A * A)
    BF = "BF"  # BF, action 2 pi N (A * B)


class SumMethod(Enum):
    """How an exact value was obtained."""
    SUM = "sum"                  # single sum over the torsion group
    DOUBLE_SUM = "double_sum"    # sum over pairs of torsion elements
    CLOSED_FORM = "closed_form"  # prod gcd(p_i, N) p_i


@dataclass(frozen=True, order=True)
class Level:
    """The coupling N; only integers are admissible."""
    n: int

    def __post_init__(self):
        object.__setattr__(self, "n", self._integral(self.n))

    @staticmethod
    def _integral(value: Any) -> int:
        if isinstance(value, bool):
            raise NonIntegralLevel(f"level must be an integer, got {value!r}")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        if isinstance(value, str):
            try:
                return int(value.strip())
            except ValueError:
                pass
        raise NonIntegralLevel(f"level must be an integer, got {value!r}")

    @classmethod
    def of(cls, value: Any) -> "Level":
        return value if isinstance(value, Level) else cls(value)

    def __int__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return str(self.n)


@dataclass(frozen=True, eq=False)
class PartitionResult:
    """Z_CS_N or Z_BF_N, exact and numeric."""
    theory: TheoryTag
    level: Level
    torsion_orders: tuple[int, ...]
    exact: CyclotomicNumber
    numeric: GaussianApprox
    method: SumMethod = SumMethod.SUM

    def to_json(self) -> dict:
        return {
            "theory": self.theory.value,
            "level": self.level.n,
            "torsion": list(self.torsion_orders),
            "exact": self.exact.to_json(),
            "numeric": self.numeric.to_json(),
            "method": self.method.value,
        }


@dataclass(frozen=True, eq=False)
class CompareRecord:
    """|Z_CS_N|^2 against Z_BF_N, decided exactly."""
    level: Level
    torsion_orders: tuple[int, ...]
    abs_sq_cs: CyclotomicNumber
    bf: CyclotomicNumber
    equal: bool
    predicted_abs_sq: CyclotomicNumber

    def to_json(self) -> dict:
        return {
            "level": self.level.n,
            "torsion": list(self.torsion_orders),
            "abs_sq_cs": self.abs_sq_cs.to_json(),
            "bf": self.bf.to_json(),
            "equal": self.equal,
        }
