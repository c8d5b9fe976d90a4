"""Kernel backend selection: compiled extension when built, numpy fallback.

Set ROMANOFF_BACKEND=pure (or =cython) to force a lane; anything else is an
error so typos fail loudly.
"""

from __future__ import annotations

import os

_ENV_VAR = "ROMANOFF_BACKEND"


def load_backend(name: str):
    """Import a lane by name ("pure" or "cython")."""
    if name == "pure":
        from . import pure

        return pure
    if name == "cython":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r}")


def _select():
    forced = os.environ.get(_ENV_VAR, "").strip().lower()
    if forced:
        return load_backend(forced)
    try:
        return load_backend("cython")
    except ImportError:
        return load_backend("pure")


kernels = _select()
backend_name: str = kernels.BACKEND_NAME
