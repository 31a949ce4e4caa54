from typing import Optional, Union

from abeltqft.theories.base import BaseTheory
from abeltqft.theories.bf import BFTheory, z_bf_closed_form
from abeltqft.theories.chern_simons import ChernSimonsTheory
from abeltqft.theories.compare import compare_cs_bf, magnitude_law_abs_sq
from abeltqft.theories.types import CompareRecord, Level, PartitionResult, SumMethod, TheoryTag
from abeltqft.topology.linking import LinkingForm, linking_form_of_manifold
from abeltqft.topology.manifolds import Manifold

# 理论注册表，CLI 通过 tag 选择实现
THEORIES: dict[TheoryTag, type[BaseTheory]] = {
    TheoryTag.CS: ChernSimonsTheory,
    TheoryTag.BF: BFTheory,
}


def get_theory(tag: Union[TheoryTag, str]) -> BaseTheory:
    """Theory instance for a tag ("CS" / "BF", case-insensitive)."""
    if isinstance(tag, str):
        try:
            tag = TheoryTag(tag.upper())
        except ValueError:
            raise ValueError(f"unknown theory {tag!r}; expected one of {[t.value for t in TheoryTag]}") from None
    return THEORIES[tag]()


def z_cs(form: LinkingForm, level, budget: Optional[int] = None, precision: Optional[int] = None) -> PartitionResult:
    return ChernSimonsTheory().partition(form, Level.of(level), budget, precision)


def z_bf(form: LinkingForm, level, budget: Optional[int] = None, precision: Optional[int] = None) -> PartitionResult:
    return BFTheory().partition(form, Level.of(level), budget, precision)


def partition_for_manifold(
    manifold: Manifold,
    theory: Union[TheoryTag, str],
    level,
    budget: Optional[int] = None,
    precision: Optional[int] = None,
) -> PartitionResult:
    form = linking_form_of_manifold(manifold)
    return get_theory(theory).partition(form, Level.of(level), budget, precision)


__all__ = [
    "BaseTheory",
    "BFTheory",
    "ChernSimonsTheory",
    "CompareRecord",
    "Level",
    "PartitionResult",
    "SumMethod",
    "THEORIES",
    "TheoryTag",
    "compare_cs_bf",
    "get_theory",
    "magnitude_law_abs_sq",
    "partition_for_manifold",
    "z_bf",
    "z_bf_closed_form",
    "z_cs",
]
