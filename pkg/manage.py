#!/usr/bin/env python
"""revbound's command-line utility."""
import sys


def main():
    """Run the harness command line."""
    from revbound.cli import app

    app(prog_name="revbound")


if __name__ == "__main__":
    sys.exit(main())
