"""Runtime toggles, read from the environment once at import.

DEBUG turns on redundant cross-checks (the root-form membership route,
Fedder agreement for a single equation). The test suite enables it; the
CLI leaves it to the FSTABLE_DEBUG environment variable.
"""

import os

DEBUG = os.environ.get("FSTABLE_DEBUG", "") in ("1", "true", "yes")
