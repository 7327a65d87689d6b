"""Kernel backend selection: compiled extension with pure-Python fallback.

The compiled module ``spreadmax._native`` and the fallback
``spreadmax._pure`` expose the same functions and produce bit-identical
results.  Selection happens once at import time; set
``SPREADMAX_BACKEND=pure`` (or ``native``) to override the default
``auto`` behaviour.
"""

from __future__ import annotations

import os
import warnings

from . import _pure

_requested = os.environ.get("SPREADMAX_BACKEND", "auto").strip().lower()

if _requested not in ("auto", "native", "pure"):
    raise ImportError(
        f"SPREADMAX_BACKEND must be auto, native or pure, got {_requested!r}"
    )

if _requested == "pure":
    _impl = _pure
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError as exc:
        if _requested == "native":
            raise ImportError(
                "SPREADMAX_BACKEND=native but the compiled extension is "
                f"missing ({exc}); build it or drop the override"
            ) from exc
        warnings.warn(
            "spreadmax compiled extension unavailable; falling back to the "
            "pure-Python kernels (correct but much slower)",
            RuntimeWarning,
            stacklevel=2,
        )
        _impl = _pure

jacobi_full = _impl.jacobi_full
spread_of = _impl.spread_of
spread_batch = _impl.spread_batch
search_chunk = _impl.search_chunk

MAX_SWEEPS = _impl.MAX_SWEEPS
OFF_REL_TOL = _impl.OFF_REL_TOL
SIGN_EPS = _impl.SIGN_EPS


def backend_name() -> str:
    """Name of the active kernel backend: ``"native"`` or ``"pure"``."""
    return _impl.BACKEND_NAME
