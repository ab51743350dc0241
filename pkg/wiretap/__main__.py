"""Allow `python -m wiretap RUN_CONFIG.json`."""

import sys

from wiretap.cli.app import main

sys.exit(main())
