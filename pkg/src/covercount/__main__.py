"""Module entry point so that ``python -m covercount`` works."""

import sys

from .cli import main

sys.exit(main())
