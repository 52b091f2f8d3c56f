"""Entry point for `python -m cfrac`."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
