"""Abelian BF partition function.

Z_BF_N = sum_{a, b in T} exp(-2 pi i N Q(a, b)). Summing over b first
leaves |T| for every a with N Q(a, .) = 0, so the value is the integer
|T| * |{a : N a = 0}| = prod_i gcd(p_i, N) p_i.
"""
import logging
import math
from collections import Counter
from typing import Optional

from abeltqft.algebra.cyclotomic import CyclotomicNumber, counts_to_number
from abeltqft.config import config
from abeltqft.errors import BudgetExceeded
from abeltqft.theories.base import BaseTheory
from abeltqft.theories.types import Level, PartitionResult, SumMethod, TheoryTag
from abeltqft.topology.groups import AbelianGroup, torsion_elements
from abeltqft.topology.linking import LinkingForm

logger = logging.getLogger(__name__)


def _functional_counts(row: tuple[int, ...], orders: tuple[int, ...], d: int) -> Counter:
    """Histogram of sum_j row_j b_j mod d over b in Z/p_1 x ... x Z/p_n."""
    counts: Counter = Counter({0: 1})
    for r, p in zip(row, orders):
        step = Counter((r * b) % d for b in range(p))
        merged: Counter = Counter()
        for x, cx in counts.items():
            for y, cy in step.items():
                merged[(x + y) % d] += cx * cy
        counts = merged
    return counts


def z_bf_closed_form(group: AbelianGroup, level: Level) -> int:
    """prod_i gcd(p_i, |N|) * p_i; gcd(p, 0) = p, so N = 0 gives |T|^2."""
    n = abs(Level.of(level).n)
    return math.prod(math.gcd(p, n) * p for p in group.torsion_orders)


class BFTheory(BaseTheory):
    def __init__(self, pair_budget: Optional[int] = None, closed_form_fallback: Optional[bool] = None):
        self.pair_budget = pair_budget
        self.closed_form_fallback = closed_form_fallback

    @property
    def tag(self) -> TheoryTag:
        return TheoryTag.BF

    @property
    def name(self) -> str:
        return "U(1) BF"

    def terms_required(self, form: LinkingForm) -> int:
        return form.group.torsion_order ** 2

    def _pair_budget(self) -> int:
        return config.pair_budget if self.pair_budget is None else self.pair_budget

    def _over_budget(self, form: LinkingForm, budget: Optional[int]) -> Optional[tuple[int, int, str]]:
        """(required, budget, what) for the first cap the double sum would break, else None."""
        order = form.group.torsion_order
        budget = config.enumeration_budget if budget is None else budget
        if order > budget:
            return order, budget, "torsion elements"
        pairs = self.terms_required(form)
        pair_budget = self._pair_budget()
        if pairs > pair_budget:
            return pairs, pair_budget, "pairs"
        return None

    def _fallback(self) -> bool:
        if self.closed_form_fallback is None:
            return bool(config.get("limits.bf_closed_form_fallback", True))
        return self.closed_form_fallback

    def exponent_counts(self, form: LinkingForm, level: Level, budget: Optional[int] = None) -> Counter:
        """Histogram of D * (-N Q(a, b)) mod D over all pairs.

        For fixed a the inner sum over b is a linear functional on
        prod Z/p_j, so its histogram is a convolution of one small
        histogram per coordinate.
        """
        d = form.denominator
        n = level.n % d
        orders = form.torsion_orders
        numerators = form.numerators
        inner: dict[tuple[int, ...], Counter] = {}
        counts: Counter = Counter()
        for k in torsion_elements(form.group, budget):
            a = k.coefficients
            # row functional b -> -N D Q(a, b)
            row = tuple((-n * sum(ai * numerators[i][j] for i, ai in enumerate(a))) % d for j in range(len(a)))
            if row not in inner:
                inner[row] = _functional_counts(row, orders, d)
            counts.update(inner[row])
        return counts

    def partition(
        self,
        form: LinkingForm,
        level: Level,
        budget: Optional[int] = None,
        precision: Optional[int] = None,
    ) -> PartitionResult:
        level = Level.of(level)
        over = self._over_budget(form, budget)

        if over is not None:
            required, cap, what = over
            if not self._fallback():
                raise BudgetExceeded(
                    f"BF double sum needs {required} {what}, over the budget {cap}",
                    required=required,
                    budget=cap,
                )
            # 超出上限时改用 gcd 闭式，结果里用 method 标记
            value = z_bf_closed_form(form.group, level)
            logger.warning(f"[BF] {required} {what} over budget {cap}; using the closed form {value}")
            exact = CyclotomicNumber.from_int(value)
            method = SumMethod.CLOSED_FORM
        else:
            counts = self.exponent_counts(form, level, budget)
            exact = counts_to_number(form.denominator, counts)
            method = SumMethod.DOUBLE_SUM
            logger.info(f"[BF] N={level.n} torsion={form.torsion_orders}: {self.terms_required(form)} pairs")

        return PartitionResult(
            theory=self.tag,
            level=level,
            torsion_orders=form.torsion_orders,
            exact=exact,
            numeric=exact.numeric(precision),
            method=method,
        )
