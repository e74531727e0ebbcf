"""Backend selection for the hot loops.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure Python versions in ``_pykernels``.  Setting ``STURMIAN_APR_PURE=1``
forces the fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("STURMIAN_APR_PURE"):
        raise ImportError("pure backend requested")
    from . import _speedups as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

orbit_bits = _impl.orbit_bits
scan_prefix = _impl.scan_prefix


def available_backends():
    """Map backend name to module for every backend that imports."""
    found = {"python": _pykernels}
    try:
        from . import _speedups
        found["cython"] = _speedups
    except ImportError:
        pass
    return found
