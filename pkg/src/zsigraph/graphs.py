"""Immutable simple graphs and exact invariant computation.

Every nontrivial algorithm here has an independent brute-force oracle
(`naive_girth`, `naive_cycle_through_pair`, `naive_chordal`) used by the test
suite as ground truth on small graphs.  Graphs are immutable after
construction; all operations are pure reads and safe to run concurrently.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

INF = math.inf

#: hard size cap for the exhaustive enumeration oracles
NAIVE_CAP = 14


class Graph:
    """Simple undirected graph with labeled vertices and optional payloads.

    Vertices are ``0..n-1``.  ``labels`` are display strings; ``data`` is an
    optional per-vertex payload tuple (model graphs attach their function
    vertices there).  Instances are immutable once built.
    """

    __slots__ = ("n", "labels", "data", "_edges", "_indptr", "_indices",
                 "_adj", "_dist", "_common", "_flow")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[str] | None = None,
                 data: tuple | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canonical = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            canonical.add((u, v) if u < v else (v, u))
        edge_arr = np.array(sorted(canonical), dtype=np.int64).reshape(-1, 2)

        if labels is None:
            labels = tuple(f"v{i}" for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal vertex count")
        if data is not None and len(data) != n:
            raise ValueError("data length must equal vertex count")

        self.n = n
        self.labels = labels
        self.data = data
        self._edges = edge_arr

        both = np.concatenate([edge_arr, edge_arr[:, ::-1]], axis=0)
        order = np.lexsort((both[:, 1], both[:, 0]))
        both = both[order]
        deg = np.bincount(both[:, 0], minlength=n)
        self._indptr = np.concatenate([[0], np.cumsum(deg)]).astype(np.int64)
        self._indices = both[:, 1].copy()

        adj = np.zeros((n, n), dtype=bool)
        if len(edge_arr):
            adj[edge_arr[:, 0], edge_arr[:, 1]] = True
            adj[edge_arr[:, 1], edge_arr[:, 0]] = True
        self._adj = adj

        self._dist = None
        self._common = None
        self._flow = None

    # -- basic queries ------------------------------------------------------

    @property
    def edge_array(self) -> np.ndarray:
        return self._edges

    def edges(self) -> list[tuple[int, int]]:
        return [tuple(e) for e in self._edges]

    def number_of_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._indptr[v + 1] - self._indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u, v])

    def adjacency_matrix(self) -> np.ndarray:
        return self._adj

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v]

    def _check_vertex(self, v) -> None:
        if not isinstance(v, (int, np.integer)) or not (0 <= v < self.n):
            raise ValueError(f"unknown vertex id {v!r} (graph has {self.n} vertices)")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.number_of_edges()})"


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs BFS distances; -1 marks unreachable pairs.  Cached."""
    if g._dist is None:
        g._dist = _kernels.all_pairs_distances(g.n, g._indptr, g._indices, g._adj)
        g._dist.setflags(write=False)
    return g._dist


def distance(g: Graph, u: int, v: int) -> int | float:
    g._check_vertex(u)
    g._check_vertex(v)
    d = int(distance_matrix(g)[u, v])
    return INF if d < 0 else d


def eccentricity(g: Graph, u: int) -> int | float:
    g._check_vertex(u)
    row = distance_matrix(g)[u]
    return INF if (row < 0).any() else int(row.max())


def diameter(g: Graph) -> int | float:
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    dm = distance_matrix(g)
    return INF if (dm < 0).any() else int(dm.max())


def radius(g: Graph) -> int | float:
    if g.n == 0:
        raise ValueError("radius of the empty graph is undefined")
    dm = distance_matrix(g)
    eccs = np.where((dm < 0).any(axis=1), -1, dm.max(axis=1))
    return INF if (eccs < 0).all() else int(eccs[eccs >= 0].min())


def shortest_path(g: Graph, u: int, v: int) -> list[int] | None:
    """Deterministic BFS path from u to v (smallest-index tie-break)."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return [u]
    parent = np.full(g.n, -1, dtype=np.int64)
    parent[u] = u
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for w in g.neighbors(x):
                if parent[w] < 0:
                    parent[w] = x
                    if w == v:
                        path = [int(v)]
                        while path[-1] != u:
                            path.append(int(parent[path[-1]]))
                        return path[::-1]
                    nxt.append(int(w))
        frontier = nxt
    return None


def connected_components(g: Graph) -> list[list[int]]:
    """BFS partition of the vertex set, components in index order."""
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        head = 0
        while head < len(comp):
            for w in g.neighbors(comp[head]):
                if not seen[w]:
                    seen[w] = True
                    comp.append(int(w))
            head += 1
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------

def girth(g: Graph) -> int | float:
    res = _kernels.girth_value(g.n, g._indptr, g._indices, g._adj)
    return INF if res < 0 else int(res)


def _flow_arcs(g: Graph):
    """Static vertex-split digraph for two-disjoint-path queries.  Cached.

    Nodes: in(v)=2v, out(v)=2v+1.  Split arcs in(v)->out(v) have capacity 1
    and cost 0; each undirected edge contributes out(a)->in(b) and
    out(b)->in(a) with capacity 1 and cost 1.  Reverse arcs carry cost -1.
    Queries run from out(s) to in(t), so endpoint capacities never bind.
    """
    if g._flow is not None:
        return g._flow
    n = g.n
    e = g._edges
    n_pairs = n + 2 * len(e)
    tail = np.empty(2 * n_pairs, dtype=np.int64)
    head = np.empty(2 * n_pairs, dtype=np.int64)
    cost = np.empty(2 * n_pairs, dtype=np.int32)
    cap = np.empty(2 * n_pairs, dtype=np.int32)

    def put(i, t, h, c, cp):
        tail[i], head[i], cost[i], cap[i] = t, h, c, cp

    k = 0
    for v in range(n):
        put(k, 2 * v, 2 * v + 1, 0, 1)
        put(k + 1, 2 * v + 1, 2 * v, 0, 0)
        k += 2
    for a, b in e:
        put(k, 2 * a + 1, 2 * b, 1, 1)
        put(k + 1, 2 * b, 2 * a + 1, -1, 0)
        put(k + 2, 2 * b + 1, 2 * a, 1, 1)
        put(k + 3, 2 * a, 2 * b + 1, -1, 0)
        k += 4

    order = np.argsort(tail, kind="stable")
    pos = np.empty(2 * n_pairs, dtype=np.int64)
    pos[order] = np.arange(2 * n_pairs)
    arev = pos[(order ^ 1)]
    aptr = np.concatenate(
        [[0], np.cumsum(np.bincount(tail[order], minlength=2 * n))]
    ).astype(np.int64)
    g._flow = (2 * n, aptr, head[order].copy(), arev, cost[order].copy(),
               cap[order].copy())
    return g._flow


def cycle_through_pair_length(g: Graph, u: int, v: int) -> int | float:
    """Length of the smallest cycle containing both u and v (kernel path)."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("cycle-through-pair requires two distinct vertices")
    nn, aptr, ato, arev, acost, cap0 = _flow_arcs(g)
    res = _kernels.two_paths_length(nn, aptr, ato, arev, acost, cap0,
                                    2 * u + 1, 2 * v)
    return INF if res < 0 else int(res)


def cycle_length_matrix(g: Graph) -> np.ndarray:
    """c(u,v) for every vertex pair; -1 marks pairs on no common cycle."""
    n = g.n
    out = np.full((n, n), -1, dtype=np.int32)
    if n == 0:
        return out
    nn, aptr, ato, arev, acost, cap0 = _flow_arcs(g)
    two_paths = _kernels.two_paths_length
    for u in range(n):
        for v in range(u + 1, n):
            res = two_paths(nn, aptr, ato, arev, acost, cap0, 2 * u + 1, 2 * v)
            out[u, v] = res
            out[v, u] = res
    return out


def smallest_cycle_through_pair(g: Graph, u: int, v: int):
    """Smallest cycle through u and v with an explicit cycle witness.

    Returns ``(length, cycle)`` where ``cycle`` is a vertex sequence, or
    ``(inf, None)`` when u and v lie on no common cycle.  Runs the same
    successive-shortest-path flow as the kernel, in Python, so the witness
    (and its tie-breaking) is deterministic.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("cycle-through-pair requires two distinct vertices")
    nn, aptr, ato, arev, acost, cap0 = _flow_arcs(g)
    src, snk = 2 * u + 1, 2 * v
    cap = cap0.copy()
    total = 0
    for _ in range(2):
        dist = np.full(nn, _kernels._INF32, dtype=np.int64)
        pred = np.full(nn, -1, dtype=np.int64)
        dist[src] = 0
        inq = np.zeros(nn, dtype=bool)
        queue = [src]
        inq[src] = True
        while queue:
            x = queue.pop(0)
            inq[x] = False
            dx = dist[x]
            for a in range(aptr[x], aptr[x + 1]):
                if cap[a] > 0:
                    y = ato[a]
                    nd = dx + acost[a]
                    if nd < dist[y]:
                        dist[y] = nd
                        pred[y] = a
                        if not inq[y]:
                            inq[y] = True
                            queue.append(int(y))
        if dist[snk] >= _kernels._INF32:
            return INF, None
        total += int(dist[snk])
        y = snk
        while y != src:
            a = pred[y]
            cap[a] -= 1
            cap[arev[a]] += 1
            y = ato[arev[a]]

    # decompose the 2-unit flow into two vertex walks from u to v
    flow = cap0 - cap
    paths = []
    for _ in range(2):
        walk = [u]
        x = src
        while x != snk:
            for a in range(aptr[x], aptr[x + 1]):
                if flow[a] > 0 and acost[a] >= 0:
                    flow[a] -= 1
                    x = int(ato[a])
                    if x % 2 == 0:  # arrived at in(w)
                        walk.append(x // 2)
                    break
            else:
                raise AssertionError("flow decomposition failed")
        paths.append(walk)
    first, second = paths
    cycle = first[:-1] + second[::-1][:-1]
    return total, cycle


# ---------------------------------------------------------------------------
# triangles, orthogonality, domination
# ---------------------------------------------------------------------------

def common_neighbor_matrix(g: Graph) -> np.ndarray:
    """Number of common neighbors for every vertex pair.  Cached."""
    if g._common is None:
        a = g._adj.astype(np.float32)
        g._common = (a @ a).astype(np.int32)
        g._common.setflags(write=False)
    return g._common


def is_triangulated(g: Graph):
    """Every vertex lies on a triangle; returns (ok, first failing vertex)."""
    c = common_neighbor_matrix(g)
    on_triangle = (g._adj & (c > 0)).any(axis=1)
    if on_triangle.all():
        return True, None
    return False, int(np.flatnonzero(~on_triangle)[0])


def is_hypertriangulated(g: Graph):
    """Every edge lies on a triangle; returns (ok, first failing edge)."""
    c = common_neighbor_matrix(g)
    for a, b in g._edges:
        if c[a, b] == 0:
            return False, (int(a), int(b))
    return True, None


def triangle_through(g: Graph, u: int, v: int) -> list[int] | None:
    """First triangle containing edge (u,v), if any."""
    if not g.has_edge(u, v):
        return None
    both = g._adj[u] & g._adj[v]
    idx = np.flatnonzero(both)
    if idx.size == 0:
        return None
    return [int(u), int(v), int(idx[0])]


def orthogonal(g: Graph, u: int, v: int) -> bool:
    """Adjacent with no common neighbor."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("orthogonality requires two distinct vertices")
    return bool(g._adj[u, v]) and int(common_neighbor_matrix(g)[u, v]) == 0


def is_complemented(g: Graph):
    """Every vertex has an orthogonal partner; returns (ok, first failing)."""
    partner = g._adj & (common_neighbor_matrix(g) == 0)
    has = partner.any(axis=1)
    if g.n == 0 or has.all():
        return True, None
    return False, int(np.flatnonzero(~has)[0])


def dominates(g: Graph, vertices: Iterable[int]) -> bool:
    """True when every vertex outside the set has a neighbor inside it."""
    vs = list(vertices)
    for v in vs:
        g._check_vertex(v)
    cover = np.zeros(g.n, dtype=bool)
    for v in vs:
        cover[v] = True
        cover |= g._adj[v]
    return bool(cover.all())


def domination_number(g: Graph, max_k: int = 3):
    """Exact minimum dominating set up to size max_k.

    Searches subset sizes 1..max_k in deterministic lexicographic order and
    returns ``(k, witness)`` for the first dominating set found, or
    ``(None, None)`` when every set of size <= max_k fails.
    """
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    from itertools import combinations

    for k in range(1, max_k + 1):
        for combo in combinations(range(g.n), k):
            if dominates(g, combo):
                return k, combo
    return None, None


# ---------------------------------------------------------------------------
# chordality (lexicographic BFS + perfect elimination ordering)
# ---------------------------------------------------------------------------

def _lexbfs_order(g: Graph) -> list[int]:
    n = g.n
    lex_labels: list[list[int]] = [[] for _ in range(n)]
    pos = np.full(n, -1, dtype=np.int64)
    order = []
    for step in range(n):
        best = -1
        for v in range(n):
            if pos[v] < 0 and (best < 0 or lex_labels[v] > lex_labels[best]):
                best = v
        pos[best] = step
        order.append(best)
        stamp = n - step
        for w in g.neighbors(best):
            if pos[w] < 0:
                lex_labels[w].append(stamp)
    return order


def _peo_violation(g: Graph, order: list[int]):
    """First (v, p, w) violating the elimination property, else None."""
    pos = np.empty(g.n, dtype=np.int64)
    for i, v in enumerate(order):
        pos[v] = i
    adj = g._adj
    for v in order:
        nbrs = g.neighbors(v)
        earlier = nbrs[pos[nbrs] < pos[v]]
        if earlier.size <= 1:
            continue
        p = earlier[np.argmax(pos[earlier])]
        others = earlier[earlier != p]
        bad = others[~adj[p, others]]
        if bad.size:
            return int(v), int(p), int(bad[0])
    return None


def _chordless_cycle(g: Graph, v: int, a: int, b: int) -> list[int] | None:
    """Chordless cycle through v from non-adjacent neighbors a, b of v.

    A shortest a-b path avoiding N[v] \\ {a, b} is induced, its interior
    avoids v's neighborhood, and a-b is a non-edge, so prepending v yields a
    chordless cycle of length >= 4.
    """
    blocked = np.zeros(g.n, dtype=bool)
    blocked[g.neighbors(v)] = True
    blocked[v] = True
    blocked[a] = False
    blocked[b] = False
    parent = np.full(g.n, -1, dtype=np.int64)
    parent[a] = a
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            for w in g.neighbors(x):
                if blocked[w] or parent[w] >= 0:
                    continue
                parent[w] = x
                if w == b:
                    path = [int(b)]
                    while path[-1] != a:
                        path.append(int(parent[path[-1]]))
                    return [int(v)] + path[::-1]
                nxt.append(int(w))
        frontier = nxt
    return None


def is_chordal(g: Graph):
    """Chordality via LexBFS; returns (ok, witness).

    The witness is a perfect elimination ordering when chordal and a
    chordless cycle of length >= 4 otherwise.
    """
    order = _lexbfs_order(g)
    violation = _peo_violation(g, order)
    if violation is None:
        return True, list(reversed(order))
    v, p, w = violation
    cycle = _chordless_cycle(g, v, p, w)
    if cycle is None:
        # fall back to scanning all non-adjacent neighbor pairs
        for x in range(g.n):
            nbrs = g.neighbors(x)
            for i in range(len(nbrs)):
                for j in range(i + 1, len(nbrs)):
                    a, b = int(nbrs[i]), int(nbrs[j])
                    if not g._adj[a, b]:
                        cycle = _chordless_cycle(g, x, a, b)
                        if cycle is not None:
                            return False, cycle
        raise AssertionError("PEO violation without extractable chordless cycle")
    return False, cycle


# ---------------------------------------------------------------------------
# witness validation
# ---------------------------------------------------------------------------

def validate_path(g: Graph, seq: Sequence[int]) -> bool:
    if len(seq) == 0 or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def validate_cycle(g: Graph, seq: Sequence[int]) -> bool:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    closed = list(seq) + [seq[0]]
    return all(g.has_edge(a, b) for a, b in zip(closed, closed[1:]))


def validate_chordless_cycle(g: Graph, seq: Sequence[int]) -> bool:
    if len(seq) < 4 or not validate_cycle(g, seq):
        return False
    k = len(seq)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(seq[i], seq[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# brute-force oracles
# ---------------------------------------------------------------------------

def _naive_guard(g: Graph) -> None:
    if g.n > NAIVE_CAP:
        raise ValueError(
            f"naive oracle capped at {NAIVE_CAP} vertices (got {g.n})")


def naive_girth(g: Graph) -> int | float:
    """Shortest cycle by exhaustive DFS enumeration of simple cycles."""
    _naive_guard(g)
    best = [None]

    def extend(path, on_path):
        if best[0] is not None and len(path) >= best[0]:
            return
        root, last = path[0], path[-1]
        for w in g.neighbors(last):
            w = int(w)
            if w == root and len(path) >= 3:
                if best[0] is None or len(path) < best[0]:
                    best[0] = len(path)
            elif w > root and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for r in range(g.n):
        extend([r], {r})
    return INF if best[0] is None else best[0]


def naive_cycle_through_pair(g: Graph, u: int, v: int) -> int | float:
    """Smallest cycle containing u and v by exhaustive cycle enumeration."""
    _naive_guard(g)
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("cycle-through-pair requires two distinct vertices")
    best = [None]

    def extend(path, on_path):
        if best[0] is not None and len(path) >= best[0]:
            return
        last = path[-1]
        for w in g.neighbors(last):
            w = int(w)
            if w == u and len(path) >= 3 and v in on_path:
                if best[0] is None or len(path) < best[0]:
                    best[0] = len(path)
            elif w != u and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    extend([u], {u})
    return INF if best[0] is None else best[0]


def naive_chordal(g: Graph) -> bool:
    """Chordality by exhaustive induced-cycle enumeration."""
    _naive_guard(g)
    adj = g._adj

    def extend(path, on_path):
        # extend an induced path; a new vertex may touch only the last
        # vertex, except for the closing edge back to the root
        root, last = path[0], path[-1]
        for w in g.neighbors(last):
            w = int(w)
            if w <= root or w in on_path:
                continue
            mid = path[1:-1]
            if any(adj[w, x] for x in mid):
                continue
            if len(path) >= 2 and adj[w, root]:
                if len(path) >= 3:
                    return True  # induced cycle of length len(path)+1 >= 4
                continue  # closing now gives a triangle; extending adds a chord
            path.append(w)
            on_path.add(w)
            if extend(path, on_path):
                return True
            on_path.discard(w)
            path.pop()
        return False

    for r in range(g.n):
        if extend([r], {r}):
            return False
    return True
