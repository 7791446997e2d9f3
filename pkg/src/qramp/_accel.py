"""Backend selection for the hot kernels.

Kernels are compiled with numba when it is importable and the environment
variable ``QRAMP_DISABLE_NUMBA`` is unset (or ``0``).  Otherwise every kernel
falls back to a pure numpy implementation with identical results.
"""
import os

_DISABLED = os.environ.get("QRAMP_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by QRAMP_DISABLE_NUMBA")
    from numba import njit as _njit

    HAS_NUMBA = True
except ImportError:
    _njit = None
    HAS_NUMBA = False


def jit(func):
    """Compile ``func`` in nopython mode when numba is active, else return it unchanged."""
    if HAS_NUMBA:
        return _njit(cache=True, nogil=True)(func)
    return func


def backend():
    return "numba" if HAS_NUMBA else "numpy"
