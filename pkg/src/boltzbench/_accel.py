"""Numba availability switch.

Hot kernels have two implementations: jitted loops (``_kernels_numba``) and
vectorized numpy (``_kernels_numpy``).  Setting ``BOLTZBENCH_DISABLE_NUMBA=1``
selects the numpy path even when numba is installed; ``BOLTZBENCH_THREADS``
caps the numba thread count.
"""
import os

_DISABLE = os.environ.get("BOLTZBENCH_DISABLE_NUMBA", "").strip().lower() in (
    "1", "true", "yes", "on",
)

NUMBA_AVAILABLE = False
if not _DISABLE:
    try:
        import numba  # noqa: F401

        NUMBA_AVAILABLE = True
        _threads = os.environ.get("BOLTZBENCH_THREADS", "").strip()
        if _threads:
            numba.set_num_threads(max(1, int(_threads)))
    except ImportError:
        NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
