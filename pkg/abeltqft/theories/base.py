from abc import ABC, abstractmethod
from typing import Optional

from abeltqft.config import config
from abeltqft.theories.types import Level, PartitionResult, TheoryTag
from abeltqft.topology.linking import LinkingForm


class BaseTheory(ABC):
    """理论基类：CS / BF 各自实现 partition()，按 tag 注册"""

    @abstractmethod
    def partition(
        self,
        form: LinkingForm,
        level: Level,
        budget: Optional[int] = None,
        precision: Optional[int] = None,
    ) -> PartitionResult:
        """Exact partition function on the manifold carrying ``form``."""
        pass

    @property
    @abstractmethod
    def tag(self) -> TheoryTag:
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Theory display name."""
        pass

    def terms_required(self, form: LinkingForm) -> int:
        """精确求和需要枚举的项数"""
        return form.group.torsion_order

    def is_enumerable(self, form: LinkingForm, budget: Optional[int] = None) -> bool:
        budget = config.enumeration_budget if budget is None else budget
        return self.terms_required(form) <= budget
