import logging

from abeltqft.handlers.base import BaseCommandHandler, Command, Report, RunConfig
from abeltqft.topology.groups import group_from_presentation
from abeltqft.topology.spec_parser import parse_manifold

logger = logging.getLogger(__name__)

# one representative per accepted form of specification
EXAMPLE_SPECS = [
    "S3",
    "S1xS2",
    "Poincare",
    "L(2,1)",
    "L(5,2)",
    "-L(5,2)",
    "sum(L(2,1),L(3,1))",
    "sum(L(2,1),S1xS2)",
]


class ManifoldsHandler(BaseCommandHandler):
    command = Command.MANIFOLDS

    def handle(self, run: RunConfig) -> Report:
        entries = []
        rows = []
        for spec in EXAMPLE_SPECS:
            manifold = parse_manifold(spec)
            group = group_from_presentation(manifold.presentation)
            entries.append({
                "spec": spec,
                "name": manifold.display_name,
                "components": manifold.matrix.rows,
                "homology": group.to_json(),
            })
            rows.append([spec, manifold.matrix.rows, str(group)])
        return Report(
            command=self.command,
            payload={"manifolds": entries},
            columns=["spec", "components", "H1"],
            rows=rows,
        )
