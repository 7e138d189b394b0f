"""Pure-Python twins of the compiled kernels in ``_kernels.pyx``.

Same signatures and outputs; used when the extension is not built or when
``ECCENERGY_PURE_PYTHON=1`` is set.
"""

from __future__ import annotations

from collections import deque

import numpy as np


def apsp_bfs(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int32)
    nbrs = [np.flatnonzero(adj[u]).tolist() for u in range(n)]
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for v in nbrs[u]:
                if row[v] < 0:
                    row[v] = du
                    queue.append(v)
        dist[s] = row
    return dist


def ecc_mask(dist: np.ndarray, ecc: np.ndarray) -> np.ndarray:
    m = np.minimum.outer(ecc, ecc)
    out = np.where(dist == m, dist, 0).astype(np.int64)
    np.fill_diagonal(out, 0)
    return out
