"""Allow ``python -m symtoric ...``."""

import sys

from .cli import main

sys.exit(main())
