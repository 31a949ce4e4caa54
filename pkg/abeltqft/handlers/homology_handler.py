import logging

from abeltqft.handlers.base import BaseCommandHandler, Command, Report, RunConfig
from abeltqft.topology.groups import group_from_presentation

logger = logging.getLogger(__name__)


class HomologyHandler(BaseCommandHandler):
    """H_1 of the manifold: free rank and invariant factors.

    不要求矩阵对称，非对称输入只记录警告。
    """

    command = Command.HOMOLOGY

    def handle(self, run: RunConfig) -> Report:
        manifold = self._resolve_manifold(run)
        group = group_from_presentation(manifold.presentation)
        return Report(
            command=self.command,
            payload={
                "manifold": manifold.display_name,
                "homology": group.to_json(),
                "presentation": manifold.to_json(),
            },
            columns=["manifold", "H1", "free_rank", "torsion"],
            rows=[[manifold.display_name, str(group), group.free_rank, list(group.torsion_orders)]],
        )
