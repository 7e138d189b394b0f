# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: BFS all-pairs distances and eccentricity-matrix masking."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def apsp_bfs(const unsigned char[:, ::1] adj):
    """Hop distances from every vertex; -1 marks unreachable pairs."""
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t s, u, v, head, tail, i, deg
    dist_arr = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] dist = dist_arr
    # CSR neighbour lists
    cdef cnp.ndarray[cnp.intp_t, ndim=1] ptr_arr = np.zeros(n + 1, dtype=np.intp)
    cdef Py_ssize_t[::1] ptr = ptr_arr
    for u in range(n):
        deg = 0
        for v in range(n):
            if adj[u, v]:
                deg += 1
        ptr[u + 1] = ptr[u] + deg
    nbr_arr = np.empty(ptr[n], dtype=np.intp)
    cdef Py_ssize_t[::1] nbr = nbr_arr
    for u in range(n):
        i = ptr[u]
        for v in range(n):
            if adj[u, v]:
                nbr[i] = v
                i += 1
    queue_arr = np.empty(max(n, 1), dtype=np.intp)
    cdef Py_ssize_t[::1] queue = queue_arr
    cdef int du
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u]
            for i in range(ptr[u], ptr[u + 1]):
                v = nbr[i]
                if dist[s, v] < 0:
                    dist[s, v] = du + 1
                    queue[tail] = v
                    tail += 1
    return dist_arr


def ecc_mask(const int[:, ::1] dist, const int[::1] ecc):
    """Keep dist[i, j] where it equals min(ecc[i], ecc[j]); zero elsewhere."""
    cdef Py_ssize_t n = dist.shape[0]
    cdef Py_ssize_t i, j
    cdef int m
    out_arr = np.zeros((n, n), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            m = ecc[i] if ecc[i] < ecc[j] else ecc[j]
            if dist[i, j] == m:
                out[i, j] = m
    return out_arr
