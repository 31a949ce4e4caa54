"""Run configuration and the shared handler base."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from abeltqft.config import config
from abeltqft.errors import ParseError
from abeltqft.topology.manifolds import Manifold, load_matrix_file, save_matrix_file
from abeltqft.topology.spec_parser import parse_manifold

logger = logging.getLogger(__name__)


class Command(Enum):
    HOMOLOGY = "homology"
    LINKING_FORM = "linking-form"
    CS = "cs"
    BF = "bf"
    COMPARE = "compare"
    SWEEP = "sweep"
    MANIFOLDS = "manifolds"


class OutputFormat(Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


LEVEL_COMMANDS = (Command.CS, Command.BF, Command.COMPARE)


def parse_level_range(text: str) -> tuple[int, int]:
    """``"a..b"`` -> (a, b), inclusive."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ParseError(f"level range {text!r} must look like a..b")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise ParseError(f"level range {text!r} has non-integer bounds") from None
    if a > b:
        raise ParseError(f"empty level range {text!r}")
    return a, b


@dataclass
class RunConfig:
    command: Command
    manifold: Optional[str] = None
    matrix_file: Optional[str] = None
    level: Optional[int] = None
    levels: Optional[tuple[int, int]] = None
    output_format: OutputFormat = OutputFormat.TABLE
    budget: Optional[int] = None
    precision: Optional[int] = None
    workers: Optional[int] = None
    export_matrix: Optional[str] = None

    def validate(self):
        if self.command in LEVEL_COMMANDS and self.level is None:
            raise ParseError(f"{self.command.value} needs --level")
        if self.command is Command.SWEEP and self.levels is None:
            raise ParseError("sweep needs --levels a..b")
        if self.command is not Command.MANIFOLDS and not (self.manifold or self.matrix_file):
            raise ParseError(f"{self.command.value} needs --manifold or --matrix-file")
        if self.manifold and self.matrix_file:
            raise ParseError("--manifold and --matrix-file are mutually exclusive")
        if self.budget is not None and self.budget < 1:
            raise ParseError(f"--budget must be >= 1, got {self.budget}")
        if self.precision is not None and self.precision < 1:
            raise ParseError(f"--precision must be >= 1, got {self.precision}")
        if self.workers is not None and self.workers < 1:
            raise ParseError(f"--workers must be >= 1, got {self.workers}")

    @property
    def effective_budget(self) -> int:
        return config.enumeration_budget if self.budget is None else self.budget

    @property
    def effective_precision(self) -> int:
        return config.precision if self.precision is None else self.precision


@dataclass
class Report:
    """What a command produced, before formatting.

    ``payload`` is the JSON document; ``columns``/``rows`` are the
    tabular view shared by table and csv output.
    """
    command: Command
    payload: dict[str, Any]
    columns: list[str] = field(default_factory=list)
    rows: list[list[Any]] = field(default_factory=list)
    title: str = ""


class BaseCommandHandler:
    """命令处理器基类

    负责解析流形参数和可选的矩阵导出，子类实现 handle()。
    """

    command: Command

    def handle(self, run: RunConfig) -> Report:
        """执行命令 - 子类实现"""
        raise NotImplementedError

    def _resolve_manifold(self, run: RunConfig) -> Manifold:
        if run.matrix_file:
            manifold = load_matrix_file(run.matrix_file)
        elif run.manifold:
            manifold = parse_manifold(run.manifold)
        else:
            raise ParseError("no manifold given")
        logger.info(f"[CLI] {run.command.value}: manifold {manifold.display_name}, {manifold.matrix.rows} components")
        if run.export_matrix:
            save_matrix_file(manifold, run.export_matrix)
        return manifold
