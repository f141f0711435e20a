import os
import sys
from collections.abc import Sequence

from sumprod.app import App
from sumprod.cli.error_handlers import handle_error
from sumprod.cli.parser import build_parser, protect_negative_rationals
from sumprod.logging import bind_command, setup_logging

EXIT_INTERRUPTED = 130


def run_cli(app: App, argv: Sequence[str]) -> int:
    """Parse argv, dispatch to the command handler and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(protect_negative_rationals(list(argv)))
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 after --help
        return exc.code if isinstance(exc.code, int) else 2
    if args.debug:
        setup_logging(debug=True)
    bind_command(args.command)

    try:
        return int(args.handler(app, args))
    except KeyboardInterrupt:
        return EXIT_INTERRUPTED
    except BrokenPipeError:
        # the reader went away (e.g. `sumprod solve ... | head`); silence the final flush
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except Exception as exc:
        return handle_error(exc)
