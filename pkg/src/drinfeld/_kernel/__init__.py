"""Arithmetic kernel selection.

Two interchangeable implementations of the hot polynomial kernels exist:
``ckernel`` (Cython extension) and ``pykernel`` (pure Python).  The compiled
one is preferred when importable; set ``DRINFELD_KERNEL=python`` or
``DRINFELD_KERNEL=c`` to force a choice (forcing ``c`` raises if the
extension was not built).
"""
import os

from . import pykernel

_requested = os.environ.get("DRINFELD_KERNEL", "auto").strip().lower()

ckernel = None
if _requested in ("auto", "c", "compiled"):
    try:
        from . import ckernel  # type: ignore[no-redef]
    except ImportError:
        if _requested != "auto":
            raise
if _requested in ("py", "python", "pure"):
    default_kernel = pykernel
elif _requested in ("auto", "c", "compiled"):
    default_kernel = ckernel if ckernel is not None else pykernel
else:
    raise ValueError(f"DRINFELD_KERNEL={_requested!r} not recognized (use auto, c or python)")

BACKEND = default_kernel.NAME

_BY_NAME = {"python": pykernel}
if ckernel is not None:
    _BY_NAME["c"] = ckernel


def available_backends():
    return sorted(_BY_NAME)


def get_kernel(name=None):
    """Resolve a backend name ('c', 'python' or None for the default)."""
    if name is None:
        return default_kernel
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} not available; have {available_backends()}") from None
