"""Selects the kernel implementation at import time.

The compiled kernels are used when the extension was built; otherwise, or
when ``SYMPLECTIC_INDEX_PURE_PYTHON`` is set to a non-empty value, the
pure-Python fallback is used.
"""
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_AVAILABLE = {"python": _pykernels}
if _ckernels is not None:
    _AVAILABLE["cython"] = _ckernels

if _ckernels is not None and not os.environ.get("SYMPLECTIC_INDEX_PURE_PYTHON"):
    kernels = _ckernels
else:
    kernels = _pykernels


def available_backends():
    return sorted(_AVAILABLE)


def get_backend():
    return kernels.NAME


def set_backend(name):
    """Switch the kernel implementation used by every module; returns the previous name."""
    global kernels
    try:
        new = _AVAILABLE[name]
    except KeyError:
        raise ValueError(
            f"unknown or unavailable backend {name!r}; available: {available_backends()}"
        ) from None
    old, kernels = kernels.NAME, new
    return old
