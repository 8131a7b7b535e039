"""Optional numba acceleration for the hot kernels.

Set RANDDEHN_NUMBA=0 (or "off"/"false") before import to run every kernel as
plain Python/numpy.  The fallback executes the identical source, so results
are bit-for-bit the same, just slower; `benchmarks/bench_kernels.py` compares
the two modes.
"""

import os

_flag = os.environ.get("RANDDEHN_NUMBA", "1").strip().lower()
NUMBA_ENABLED = _flag not in ("0", "off", "false", "no")

if NUMBA_ENABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    def maybe_njit(*args, **kwargs):
        kwargs.setdefault("cache", True)
        return _njit(*args, **kwargs)
else:
    def maybe_njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(fn):
            return fn

        return deco
