"""Map exceptions raised by a command to exit codes."""

import logging
import sys
from collections.abc import Callable

import pydantic

from localfactor.application.errors.app_errors import ApplicationError
from localfactor.domain.errors.domain_errors import DomainError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_FAILED = 3


def format_error(e: BaseException) -> str:
    """`error: <ErrorClassName>: <message>`."""
    return f"error: {type(e).__name__}: {e}"


def run_guarded(command: Callable[[], object]) -> int:
    """Run a command; print named errors to stderr and return the exit status."""
    try:
        command()
    except pydantic.ValidationError as e:
        print(f"error: invalid arguments: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ApplicationError) as e:
        logger.debug(f"Command failed: {e!r}")
        print(format_error(e), file=sys.stderr)
        return EXIT_FAILED
    except Exception as e:
        logger.exception(f"Unhandled exception: {e}")
        print(format_error(e), file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK
