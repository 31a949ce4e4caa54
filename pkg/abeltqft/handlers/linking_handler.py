import logging

from abeltqft.handlers.base import BaseCommandHandler, Command, Report, RunConfig
from abeltqft.topology.linking import linking_form_of_manifold

logger = logging.getLogger(__name__)


class LinkingFormHandler(BaseCommandHandler):
    """Torsion linking form Q(e_i, e_j) on the Smith generators."""

    command = Command.LINKING_FORM

    def handle(self, run: RunConfig) -> Report:
        manifold = self._resolve_manifold(run)
        form = linking_form_of_manifold(manifold)
        orders = form.torsion_orders
        nondegenerate = form.is_nondegenerate(run.effective_budget)
        if not nondegenerate:
            logger.warning(f"[Linking] form on {manifold.display_name} is degenerate")

        rows = []
        for i in range(len(orders)):
            for j in range(i, len(orders)):
                q = form.q[i, j]
                rows.append([i, j, orders[i], orders[j], f"{q.numerator}/{q.denominator}"])

        return Report(
            command=self.command,
            payload={
                "manifold": manifold.display_name,
                "homology": form.group.to_json(),
                "linking_form": form.to_json(),
                "nondegenerate": nondegenerate,
            },
            columns=["i", "j", "p_i", "p_j", "Q"],
            rows=rows,
            title=f"{manifold.display_name}: H1 = {form.group}",
        )
