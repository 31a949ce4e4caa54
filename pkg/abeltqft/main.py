"""Command-line entry point: ``abeltqft <command> [options]``."""
import argparse
import logging
import sys
import traceback
from dataclasses import dataclass
from typing import Optional, Sequence

from abeltqft import __version__
from abeltqft.config import config
from abeltqft.errors import EXIT_INTERNAL, EXIT_OK, AbelTqftError, ParseError
from abeltqft.handlers import Command, OutputFormat, RunConfig, get_handler, parse_level_range
from abeltqft.i18n import i18n, t
from abeltqft.paths import get_log_path
from abeltqft.report import render
from abeltqft.theories.types import Level

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_installed_handlers: list[logging.Handler] = []


def setup_logging(verbose: bool = False):
    """File handler at DEBUG plus a stderr handler; safe to call more than once."""
    root = logging.getLogger()
    for handler in _installed_handlers:
        root.removeHandler(handler)
        handler.close()
    _installed_handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT)

    if config.get("logging.file", True):
        try:
            log_file = get_log_path() / "abeltqft.log"
            file_handler = logging.FileHandler(str(log_file), encoding="utf-8")
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            _installed_handlers.append(file_handler)
        except OSError:
            pass  # 日志目录不可写时只输出到控制台

    # stderr 可能为 None (pythonw)
    if sys.stderr is not None:
        console_handler = logging.StreamHandler(sys.stderr)
        level = "DEBUG" if verbose else str(config.get("logging.console_level", "WARNING")).upper()
        console_handler.setLevel(getattr(logging, level, logging.WARNING))
        console_handler.setFormatter(formatter)
        _installed_handlers.append(console_handler)

    for handler in _installed_handlers:
        root.addHandler(handler)
    root.setLevel(logging.DEBUG)


def global_exception_handler(exctype, value, tb):
    logger.error("Uncaught exception:")
    logger.error("".join(traceback.format_exception(exctype, value, tb)))
    if sys.stderr is not None:
        sys.__excepthook__(exctype, value, tb)


@dataclass
class RunOutcome:
    exit_code: int
    output: str = ""
    diagnostic: str = ""


def diagnostic_for(error: AbelTqftError) -> str:
    details = {k: v for k, v in error.details.items() if v is not None}
    return t(error.message_key, detail=str(error), **details)


def run(run_config: RunConfig) -> RunOutcome:
    """Execute one command; never raises."""
    try:
        run_config.validate()
        report = get_handler(run_config.command).handle(run_config)
        return RunOutcome(EXIT_OK, render(report, run_config.output_format))
    except AbelTqftError as e:
        logger.warning(f"[CLI] {type(e).__name__}: {e}")
        return RunOutcome(e.exit_code, diagnostic=diagnostic_for(e))
    except Exception as e:
        logger.error(f"[CLI] internal error in {run_config.command.value}: {e}", exc_info=True)
        return RunOutcome(EXIT_INTERNAL, diagnostic=t("error_internal", detail=str(e)))


def _add_common_options(parser: argparse.ArgumentParser, needs_manifold: bool = True):
    if needs_manifold:
        parser.add_argument("--manifold", "-m", help=t("help_manifold"))
        parser.add_argument("--matrix-file", help=t("help_matrix_file"))
        parser.add_argument("--export-matrix", metavar="PATH", help=t("help_export_matrix"))
    parser.add_argument(
        "--format", "-f",
        choices=[f.value for f in OutputFormat],
        default=None,
        help=t("help_format"),
    )
    parser.add_argument("--budget", type=int, help=t("help_budget"))
    parser.add_argument("--precision", type=int, help=t("help_precision"))
    parser.add_argument("--verbose", "-v", action="store_true", help=t("help_verbose"))
    parser.add_argument("--lang", choices=["auto", "en", "zh"], help=t("help_lang"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abeltqft",
        description=t("help_description"),
        epilog=t("help_exit_codes"),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    for command in Command:
        p = sub.add_parser(
            command.value,
            help=t(f"help_cmd_{command.value.replace('-', '_')}"),
            epilog=t("help_exit_codes"),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        _add_common_options(p, needs_manifold=command is not Command.MANIFOLDS)
        if command in (Command.CS, Command.BF, Command.COMPARE):
            p.add_argument("--level", "-N", required=True, help=t("help_level"))
        if command is Command.SWEEP:
            p.add_argument("--levels", required=True, metavar="A..B", help=t("help_levels"))
            p.add_argument("--workers", type=int, help=t("help_workers"))
    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    output_format = args.format or config.get("output.format", "table")
    if output_format not in {f.value for f in OutputFormat}:
        raise ParseError(f"unknown output format {output_format!r} in configuration")
    return RunConfig(
        command=command,
        manifold=getattr(args, "manifold", None),
        matrix_file=getattr(args, "matrix_file", None),
        level=Level.of(args.level).n if getattr(args, "level", None) is not None else None,
        levels=parse_level_range(args.levels) if getattr(args, "levels", None) else None,
        output_format=OutputFormat(output_format),
        budget=args.budget,
        precision=args.precision,
        workers=getattr(args, "workers", None),
        export_matrix=getattr(args, "export_matrix", None),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    i18n.set_language(config.get("ui.language", "auto"))
    args = build_parser().parse_args(argv)
    if args.lang:
        i18n.set_language(args.lang)

    setup_logging(args.verbose)
    sys.excepthook = global_exception_handler

    try:
        run_config = run_config_from_args(args)
    except AbelTqftError as e:
        outcome = RunOutcome(e.exit_code, diagnostic=diagnostic_for(e))
    else:
        outcome = run(run_config)

    if outcome.output:
        sys.stdout.write(outcome.output)
    if outcome.diagnostic:
        print(outcome.diagnostic, file=sys.stderr)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
