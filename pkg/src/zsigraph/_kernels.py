"""Hot graph kernels, numba-compiled with numpy fallbacks.

Backend selection happens once at import time: numba is used when it is
importable unless the environment variable ``ZSIGRAPH_NO_NUMBA`` is set to
1/true/yes/on.  The BFS-style sweeps (all-pairs distances, girth) have a
vectorized boolean-matrix numpy fallback; the two-disjoint-paths flow kernel
falls back to the same loop code running uncompiled.

All kernels are pure functions of immutable arrays and safe to call
concurrently.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "ZSIGRAPH_NO_NUMBA"

#: cost "infinity" for the flow kernel; fits comfortably in int32
_INF32 = 1 << 28


def _numba_requested() -> bool:
    if os.environ.get(ENV_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _numba_requested()
BACKEND = "numba" if NUMBA_ENABLED else "numpy"


# ---------------------------------------------------------------------------
# loop implementations (njit-compatible; also runnable uncompiled)
# ---------------------------------------------------------------------------

def _all_pairs_bfs_loops(n, indptr, indices):
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        drow = dist[s]
        drow[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = drow[u]
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if drow[w] < 0:
                    drow[w] = du + 1
                    queue[tail] = w
                    tail += 1
    return dist


def _girth_loops(n, indptr, indices):
    # BFS from every root; a same-level edge at depth d witnesses a closed
    # walk of length 2d+1, a doubly-reached vertex at depth d+1 one of 2d+2.
    # Closed walks always contain a cycle no longer than themselves, and the
    # walk found from a root lying on a shortest cycle is that cycle, so the
    # minimum over roots is exact.
    best = -1
    dist = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        alive = True
        while head < tail and alive:
            u = queue[head]
            head += 1
            du = dist[u]
            if best > 0 and 2 * du + 1 >= best:
                break
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                dw = dist[w]
                if dw < 0:
                    dist[w] = du + 1
                    queue[tail] = w
                    tail += 1
                elif dw == du:
                    c = 2 * du + 1
                    if best < 0 or c < best:
                        best = c
                    alive = False
                    break
                elif dw == du + 1:
                    c = 2 * du + 2
                    if best < 0 or c < best:
                        best = c
                    # keep scanning: a same-level edge later in this level
                    # would still improve the candidate by one
    return best


def _two_paths_loops(nn, aptr, ato, arev, acost, cap0, src, snk):
    # Min-cost flow of value 2 on a vertex-split digraph: two successive
    # shortest augmenting paths found by SPFA (reverse arcs carry cost -1,
    # so plain BFS is not enough after the first augmentation).  Returns the
    # total arc cost, i.e. the minimum combined length of two internally
    # vertex-disjoint paths, or -1 when no such pair of paths exists.
    cap = cap0.copy()
    dist = np.empty(nn, dtype=np.int32)
    inq = np.zeros(nn, dtype=np.uint8)
    pred = np.empty(nn, dtype=np.int64)
    queue = np.empty(nn + 1, dtype=np.int64)
    total = 0
    for _ in range(2):
        for i in range(nn):
            dist[i] = _INF32
            pred[i] = -1
            inq[i] = 0
        dist[src] = 0
        qh = 0
        qt = 0
        queue[qt] = src
        qt = (qt + 1) % (nn + 1)
        inq[src] = 1
        while qh != qt:
            u = queue[qh]
            qh = (qh + 1) % (nn + 1)
            inq[u] = 0
            du = dist[u]
            for a in range(aptr[u], aptr[u + 1]):
                if cap[a] > 0:
                    v = ato[a]
                    nd = du + acost[a]
                    if nd < dist[v]:
                        dist[v] = nd
                        pred[v] = a
                        if inq[v] == 0:
                            inq[v] = 1
                            queue[qt] = v
                            qt = (qt + 1) % (nn + 1)
        if dist[snk] >= _INF32:
            return -1
        total += dist[snk]
        v = snk
        while v != src:
            a = pred[v]
            cap[a] -= 1
            cap[arev[a]] += 1
            v = ato[arev[a]]
    return total


# ---------------------------------------------------------------------------
# vectorized numpy fallbacks for the BFS sweeps
# ---------------------------------------------------------------------------

def all_pairs_distances_np(n, adj):
    """All-pairs BFS as boolean-matrix frontier expansion."""
    dist = np.full((n, n), -1, dtype=np.int32)
    if n == 0:
        return dist
    np.fill_diagonal(dist, 0)
    adj_f = adj.astype(np.float32)
    frontier = np.eye(n, dtype=bool)
    visited = frontier.copy()
    d = 0
    while frontier.any():
        d += 1
        reach = (frontier.astype(np.float32) @ adj_f) > 0
        frontier = reach & ~visited
        dist[frontier] = d
        visited |= frontier
    return dist


def girth_np(n, adj):
    """Per-root level BFS with vectorized candidate detection."""
    best = -1
    for s in range(n):
        frontier = np.zeros(n, dtype=bool)
        frontier[s] = True
        visited = frontier.copy()
        d = 0
        while True:
            if best > 0 and 2 * d + 1 >= best:
                break
            level = np.flatnonzero(frontier)
            if level.size == 0:
                break
            if adj[np.ix_(level, level)].any():
                c = 2 * d + 1
                best = c if best < 0 else min(best, c)
                break
            counts = adj[level, :].sum(axis=0)
            newf = (counts > 0) & ~visited
            if not newf.any():
                break
            if (counts[newf] >= 2).any():
                c = 2 * d + 2
                best = c if best < 0 else min(best, c)
                break
            visited |= newf
            frontier = newf
            d += 1
    return best


# ---------------------------------------------------------------------------
# backend dispatch
# ---------------------------------------------------------------------------

two_paths_length_py = _two_paths_loops

if NUMBA_ENABLED:
    from numba import njit

    _all_pairs_bfs_nb = njit(cache=True)(_all_pairs_bfs_loops)
    _girth_nb = njit(cache=True)(_girth_loops)
    two_paths_length_nb = njit(cache=True)(_two_paths_loops)

    def all_pairs_distances(n, indptr, indices, adj):
        return _all_pairs_bfs_nb(n, indptr, indices)

    def girth_value(n, indptr, indices, adj):
        return int(_girth_nb(n, indptr, indices))

    two_paths_length = two_paths_length_nb
else:
    two_paths_length_nb = None

    def all_pairs_distances(n, indptr, indices, adj):
        return all_pairs_distances_np(n, adj)

    def girth_value(n, indptr, indices, adj):
        return girth_np(n, adj)

    two_paths_length = two_paths_length_py
