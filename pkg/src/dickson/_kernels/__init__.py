"""Backend selection for the prime-field kernels.

The compiled extension (_ckernels, Cython) is preferred when it built;
the pure-Python twin (_pykernels) is the fallback and the reference.
Setting the environment variable DICKSON_PURE to a nonempty value forces
the pure backend.  Both expose the same functions; tests assert they
agree, and `dickson bench --compare-backends` times them side by side.
"""

import os

from . import _pykernels

_compiled = None
if not os.environ.get("DICKSON_PURE"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

ACTIVE = _compiled if _compiled is not None else _pykernels
BACKEND = ACTIVE.BACKEND


def backends() -> dict:
    """Importable kernel backends by name (pure is always present)."""
    found = {"pure": _pykernels}
    try:
        from . import _ckernels

        found["compiled"] = _ckernels
    except ImportError:
        pass
    return found
