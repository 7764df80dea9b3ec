"""
Lifted CTL checker - command-line entry point
Verifies CTL properties of featured transition systems for all configurations at once
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .commands import COMMANDS
from .utils.config import EXIT_INTERNAL_ERROR, EXIT_USAGE_ERROR, get_settings
from .utils.error_messages import get_formula_error, get_internal_error, get_io_error, get_model_error
from .utils.errors import (
    FeatureExprError,
    FormulaSyntaxError,
    InvalidArgumentError,
    InvariantViolation,
    MalformedGameError,
    ModelError,
)
from .utils.logging_config import get_logger, setup_logging

logger = get_logger('lifted_ctl.cli')


def _logging_parent() -> argparse.ArgumentParser:
    settings = get_settings()
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--log-level", default=settings.log_level, help="DEBUG, INFO, WARNING or ERROR")
    parent.add_argument("--log-format", choices=("json", "text"), default=settings.log_format)
    parent.add_argument("--log-dir", type=Path, default=settings.log_dir, help="Also log to a daily file here")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lifted-ctl",
        description="Lifted CTL model checking of featured transition systems",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    parents = [_logging_parent()]
    for command in COMMANDS:
        command.register(subparsers, parents)
    return parser


def _report(message: str) -> int:
    sys.stderr.write(message)
    return EXIT_USAGE_ERROR


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    try:
        setup_logging(args.log_level, args.log_format, args.log_dir)
    except ValueError as e:
        return _report(f"Error: {e}\n")
    debug = logging.getLogger('lifted_ctl').isEnabledFor(logging.DEBUG)
    model = getattr(args, "model", "<model>")

    try:
        return args.func(args)
    except FormulaSyntaxError as e:
        return _report(get_formula_error(e.text, e.position, e.reason))
    except ModelError as e:
        return _report(get_model_error(e.path or model, e.reason, e.line))
    except FeatureExprError as e:
        return _report(get_model_error(model, str(e)))
    except InvalidArgumentError as e:
        return _report(f"Error: {e}\n")
    except OSError as e:
        return _report(get_io_error(e.filename or model, e.strerror or str(e)))
    except (MalformedGameError, InvariantViolation) as e:
        if debug:
            logger.exception("Internal error")
        sys.stderr.write(get_internal_error(type(e).__name__, str(e)))
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
