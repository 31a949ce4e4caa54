from abeltqft.handlers.base import (
    BaseCommandHandler,
    Command,
    OutputFormat,
    Report,
    RunConfig,
    parse_level_range,
)
from abeltqft.handlers.homology_handler import HomologyHandler
from abeltqft.handlers.linking_handler import LinkingFormHandler
from abeltqft.handlers.manifolds_handler import ManifoldsHandler
from abeltqft.handlers.partition_handler import CompareHandler, PartitionHandler
from abeltqft.handlers.sweep_handler import SweepHandler
from abeltqft.theories.types import TheoryTag


def get_handler(command: Command) -> BaseCommandHandler:
    """根据子命令创建处理器"""
    if command is Command.HOMOLOGY:
        return HomologyHandler()
    if command is Command.LINKING_FORM:
        return LinkingFormHandler()
    if command is Command.CS:
        return PartitionHandler(TheoryTag.CS)
    if command is Command.BF:
        return PartitionHandler(TheoryTag.BF)
    if command is Command.COMPARE:
        return CompareHandler()
    if command is Command.SWEEP:
        return SweepHandler()
    return ManifoldsHandler()


__all__ = [
    "BaseCommandHandler",
    "Command",
    "CompareHandler",
    "HomologyHandler",
    "LinkingFormHandler",
    "ManifoldsHandler",
    "OutputFormat",
    "PartitionHandler",
    "Report",
    "RunConfig",
    "SweepHandler",
    "get_handler",
    "parse_level_range",
]
