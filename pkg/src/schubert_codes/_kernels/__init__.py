"""Hot loops of the brute-force searches.

The compiled ``_core`` extension is used when it was built; otherwise the
pure-Python ``_pycore`` twin is selected. Set ``SCHUBERT_CODES_PURE=1`` to
force the fallback.
"""

import os

from . import _pycore

if os.environ.get("SCHUBERT_CODES_PURE"):
    _impl = _pycore
else:
    try:
        from . import _core as _impl
    except ImportError:  # extension not built
        _impl = _pycore

BACKEND = _impl.BACKEND
popcounts = _impl.popcounts
max_section = _impl.max_section


def available_backends():
    out = {"python": _pycore}
    try:
        from . import _core
    except ImportError:
        pass
    else:
        out["cython"] = _core
    return out
