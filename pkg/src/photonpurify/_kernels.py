"""Permanent-kernel selection: compiled extension with pure-Python fallback.

The compiled kernel (``photonpurify._ryser``, Cython) is preferred when it
imported; otherwise the pure-Python twin takes over transparently. Set
PHOTON_PURIFY_BACKEND=python or =cython to force a choice; forcing an
unavailable backend fails loudly rather than silently falling back.
"""

from __future__ import annotations

import os
from typing import Callable

from . import _ryser_py

_BACKENDS: dict[str, Callable] = {"python": _ryser_py.permanent}

try:
    from . import _ryser  # type: ignore[attr-defined]

    _BACKENDS["cython"] = _ryser.permanent
except ImportError:
    _ryser = None

_forced = os.environ.get("PHOTON_PURIFY_BACKEND")
if _forced:
    if _forced not in _BACKENDS:
        raise ImportError(
            f"PHOTON_PURIFY_BACKEND={_forced!r} requested but only "
            f"{sorted(_BACKENDS)} are available"
        )
    BACKEND = _forced
else:
    BACKEND = "cython" if "cython" in _BACKENDS else "python"

#: The permanent kernel in use for matrices the wrapper does not shortcut.
permanent_kernel = _BACKENDS[BACKEND]


def backends() -> dict[str, Callable]:
    """All importable kernels by name; used by tests and the benchmark."""
    return dict(_BACKENDS)
