"""Abelian Chern-Simons partition function.

Only the torsion origins contribute; each carries the phase
exp(2 pi i N A0_k . A0_k) = exp(-2 pi i N Q(k, k)), so

    Z_CS_N = sum_{k in T} exp(-2 pi i N Q(k, k)).
"""
import logging
from collections import Counter
from typing import Optional

from abeltqft.algebra.cyclotomic import counts_to_number
from abeltqft.theories.base import BaseTheory
from abeltqft.theories.types import Level, PartitionResult, SumMethod, TheoryTag
from abeltqft.topology.groups import torsion_elements
from abeltqft.topology.linking import LinkingForm

logger = logging.getLogger(__name__)


class ChernSimonsTheory(BaseTheory):
    @property
    def tag(self) -> TheoryTag:
        return TheoryTag.CS

    @property
    def name(self) -> str:
        return "U(1) Chern-Simons"

    def exponent_counts(self, form: LinkingForm, level: Level, budget: Optional[int] = None) -> Counter:
        """Histogram of D * (-N Q(k, k)) mod D over the torsion group, D = form.denominator."""
        d = form.denominator
        n = level.n % d
        counts: Counter = Counter()
        for k in torsion_elements(form.group, budget):
            c = k.coefficients
            counts[(-n * form.numerator_of(c, c)) % d] += 1
        return counts

    def partition(
        self,
        form: LinkingForm,
        level: Level,
        budget: Optional[int] = None,
        precision: Optional[int] = None,
    ) -> PartitionResult:
        level = Level.of(level)
        counts = self.exponent_counts(form, level, budget)
        exact = counts_to_number(form.denominator, counts)
        logger.info(
            f"[CS] N={level.n} torsion={form.torsion_orders}: "
            f"{sum(counts.values())} terms over {len(counts)} distinct phases"
        )
        return PartitionResult(
            theory=self.tag,
            level=level,
            torsion_orders=form.torsion_orders,
            exact=exact,
            numeric=exact.numeric(precision),
            method=SumMethod.SUM,
        )
