"""cs / bf / compare at a single level."""

import logging

from abeltqft.handlers.base import BaseCommandHandler, Command, Report, RunConfig
from abeltqft.theories import compare_cs_bf, get_theory
from abeltqft.theories.types import Level, TheoryTag
from abeltqft.topology.linking import linking_form_of_manifold

logger = logging.getLogger(__name__)


class PartitionHandler(BaseCommandHandler):
    """单个 level 的配分函数 (cs / bf 共用)"""

    def __init__(self, tag: TheoryTag):
        self.tag = tag
        self.command = Command.CS if tag is TheoryTag.CS else Command.BF

    def handle(self, run: RunConfig) -> Report:
        manifold = self._resolve_manifold(run)
        form = linking_form_of_manifold(manifold)
        theory = get_theory(self.tag)
        result = theory.partition(form, Level.of(run.level), run.effective_budget, run.effective_precision)

        # JSON 键名固定为英文，只有表头走 i18n
        payload = {"manifold": manifold.display_name}
        payload.update(result.to_json())
        return Report(
            command=self.command,
            payload=payload,
            columns=["theory", "N", "torsion", "exact", "numeric", "method"],
            rows=[[
                result.theory.value,
                result.level.n,
                list(result.torsion_orders),
                result.exact,
                str(result.numeric),
                result.method.value,
            ]],
            title=f"{theory.name} on {manifold.display_name}",
        )


class CompareHandler(BaseCommandHandler):
    command = Command.COMPARE

    def handle(self, run: RunConfig) -> Report:
        manifold = self._resolve_manifold(run)
        form = linking_form_of_manifold(manifold)
        record = compare_cs_bf(form, Level.of(run.level), run.effective_budget, run.effective_precision)
        if not record.abs_sq_cs.equals(record.predicted_abs_sq):
            # both sides are exact
            logger.error(
                f"[Compare] |Z_CS|^2 = {record.abs_sq_cs} disagrees with the magnitude law {record.predicted_abs_sq}"
            )

        payload = {"manifold": manifold.display_name}
        payload.update(record.to_json())
        return Report(
            command=self.command,
            payload=payload,
            columns=["N", "torsion", "abs_sq_cs", "bf", "equal"],
            rows=[[record.level.n, list(record.torsion_orders), record.abs_sq_cs, record.bf, record.equal]],
            title=manifold.display_name,
        )
