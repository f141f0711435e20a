import sys

import structlog

from sumprod.errors import CapExhaustedError, PreconditionError, UserError

logger = structlog.get_logger(__name__)

EXIT_USAGE = 2
EXIT_CAP_EXHAUSTED = 3
EXIT_PRECONDITION = 4
EXIT_INTERNAL = 70


def exit_code_for(exc: UserError) -> int:
    """Map a user-facing error to its documented exit status."""
    if isinstance(exc, CapExhaustedError):
        return EXIT_CAP_EXHAUSTED
    if isinstance(exc, PreconditionError):
        return EXIT_PRECONDITION
    # ValidationError and any other malformed input
    return EXIT_USAGE


def handle_error(exc: Exception) -> int:
    """Report an error on stderr and return the exit status."""
    if isinstance(exc, UserError):
        sys.stderr.write(f"error: {exc}\n")
        return exit_code_for(exc)
    logger.exception("unexpected_error", error=str(exc))
    sys.stderr.write("error: An unexpected error occurred.\n")
    return EXIT_INTERNAL
