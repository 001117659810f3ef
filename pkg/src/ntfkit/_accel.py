"""Numba switch.

Set ``NTFKIT_DISABLE_NUMBA=1`` to force the pure-numpy kernels, e.g. to
compare timings or to run where numba is unavailable.
"""
import os

_disabled = os.environ.get("NTFKIT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    from numba import njit

    USE_NUMBA = True
except ImportError:
    USE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
