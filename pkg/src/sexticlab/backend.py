"""Kernel backend selection: compiled extension when available, else pure Python.

Both backends implement identical algorithms, so results are bit-for-bit the
same; the compiled one is only valid for moduli below 2**31 (coefficient
products must fit in 64-bit intermediates) and the dispatcher enforces that.
Set SEXTICLAB_BACKEND=py or SEXTICLAB_BACKEND=c to force a side.
"""

from __future__ import annotations

import os

from . import _modp_py

try:
    from . import _modp_cy  # type: ignore[attr-defined]
except ImportError:
    _modp_cy = None

_COMPILED_LIMIT = 1 << 31

_forced = os.environ.get("SEXTICLAB_BACKEND", "auto").strip().lower() or "auto"
if _forced in ("auto",):
    _fast = _modp_cy
elif _forced in ("py", "python", "pure"):
    _fast = None
elif _forced in ("c", "cy", "compiled"):
    if _modp_cy is None:
        raise ImportError(
            "SEXTICLAB_BACKEND=c requested but the compiled kernels are not built"
        )
    _fast = _modp_cy
else:
    raise ValueError(f"unrecognized SEXTICLAB_BACKEND value: {_forced!r}")


def kernel(p: int):
    """Return the kernel module to use for modulus p."""
    if _fast is not None and p < _COMPILED_LIMIT:
        return _fast
    return _modp_py


def backend_name() -> str:
    return "compiled" if _fast is not None else "pure-python"


def compiled_available() -> bool:
    return _modp_cy is not None
