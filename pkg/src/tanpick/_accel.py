"""Backend selection for the hot kernels.

Numba is used when it is importable and ``TANPICK_DISABLE_NUMBA`` is unset
(or set to ``0``). Setting ``TANPICK_DISABLE_NUMBA=1`` forces the pure numpy
path. The flag is read once, at import time.
"""

import os

_FALSEY = ("", "0", "false", "no", "off")

try:
    from numba import njit as _numba_njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    _numba_njit = None
    HAVE_NUMBA = False

DISABLED_BY_ENV = os.environ.get("TANPICK_DISABLE_NUMBA", "").strip().lower() not in _FALSEY
USE_NUMBA = HAVE_NUMBA and not DISABLED_BY_ENV


def njit(*args, **kwargs):
    """``numba.njit`` when numba is installed, otherwise ``None`` for every kernel.

    Compilation is lazy, so decorating costs nothing when the numpy path is
    selected. Kernels compiled here are still reachable for benchmarking.
    """
    if not HAVE_NUMBA:
        def _missing(func):
            return None
        return _missing
    kwargs.setdefault("cache", True)
    return _numba_njit(*args, **kwargs)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
