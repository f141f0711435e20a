"""Command-line entry point for sumprod."""

import sys

from sumprod.app import App
from sumprod.cli.runner import run_cli
from sumprod.config import Config
from sumprod.logging import setup_logging


def main() -> None:
    config = Config()
    setup_logging(config.debug)
    app = App(config)
    sys.exit(run_cli(app, sys.argv[1:]))


if __name__ == "__main__":
    main()
