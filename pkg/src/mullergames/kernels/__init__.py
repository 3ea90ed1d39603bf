"""Backend selection for the hot bitmask kernels.

Two interchangeable modules expose ``partition``, ``max_one_trap`` and
``subarena_table``: a numba-compiled scalar one and a vectorised numpy one.
numba is used when importable unless ``MULLERGAMES_DISABLE_NUMBA`` is set
to a non-empty value other than ``0``.
"""

import importlib
import os

from . import _numpy

DISABLE_ENV = "MULLERGAMES_DISABLE_NUMBA"
BACKENDS = ("numba", "numpy")

_loaded = {"numpy": _numpy}


def numba_disabled() -> bool:
    return os.environ.get(DISABLE_ENV, "") not in ("", "0")


def numba_available() -> bool:
    try:
        get_backend("numba")
    except ImportError:
        return False
    return True


def get_backend(name=None):
    """Return the kernel module called ``name`` (default: env-selected)."""
    if name is None:
        name = default_backend()
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choose from {BACKENDS}")
    if name not in _loaded:
        _loaded[name] = importlib.import_module(f"{__name__}._{name}")
    return _loaded[name]


def default_backend() -> str:
    if numba_disabled():
        return "numpy"
    try:
        get_backend("numba")
    except ImportError:
        return "numpy"
    return "numba"
