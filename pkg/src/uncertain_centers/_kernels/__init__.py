"""Search kernels: compiled extension with a pure-Python fallback.

The two hot loops of the package live here: the pinwheel schedulability
reachability search and the minimax search for the offline optimal query
schedule.  `active` points at the compiled module when it was built and
imports cleanly, otherwise at the pure implementation.  Setting the
environment variable UNCERTAIN_CENTERS_FORCE_PURE to a non-empty value
forces the fallback (used by the benchmark and the parity tests).
"""

import os

from . import _pure as pure

try:
    from . import _native as native  # type: ignore[attr-defined]
except ImportError:
    native = None

if os.environ.get("UNCERTAIN_CENTERS_FORCE_PURE"):
    active = pure
else:
    active = native if native is not None else pure


def backend_name() -> str:
    return "native" if active is native else "pure"
