"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

``BACKEND`` names the active implementation (``"cython"`` or ``"python"``).
Set ``ECCENERGY_PURE_PYTHON=1`` before import to force the fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

if os.environ.get("ECCENERGY_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"


def apsp_bfs(adj: np.ndarray) -> np.ndarray:
    """All-pairs hop distances of a dense 0/1 adjacency matrix (-1 = unreachable)."""
    return _impl.apsp_bfs(np.ascontiguousarray(adj, dtype=np.uint8))


def ecc_mask(dist: np.ndarray, ecc: np.ndarray) -> np.ndarray:
    """Eccentricity-matrix entries from distances and eccentricities."""
    return _impl.ecc_mask(
        np.ascontiguousarray(dist, dtype=np.int32),
        np.ascontiguousarray(ecc, dtype=np.int32),
    )
