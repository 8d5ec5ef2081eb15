"""Line graph construction with a back-mapping to the base graph.

Vertices of L(G) are the edges of G; two are adjacent exactly when the
underlying edges share an endpoint.  Edge vertices are canonicalized as
(smaller base id, larger base id) and labeled "[u-label|v-label]".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .model import FunctionVertex, zero_set_masks


@dataclass(frozen=True)
class EdgeVertex:
    """Unordered pair of adjacent base vertices, stored with u < v."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("an edge joins two distinct vertices")
        if self.u > self.v:
            lo, hi = self.v, self.u
            object.__setattr__(self, "u", lo)
            object.__setattr__(self, "v", hi)

    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class LineGraph:
    """L(G) together with the base graph it came from."""

    graph: Graph
    base: Graph

    @property
    def edge_vertices(self) -> tuple[EdgeVertex, ...]:
        return self.graph.data


def shares_endpoint(e1: EdgeVertex, e2: EdgeVertex) -> bool:
    """Adjacency test in the line graph."""
    if e1 == e2:
        raise ValueError("shares_endpoint requires two distinct edges")
    return e1.u in (e2.u, e2.v) or e1.v in (e2.u, e2.v)


def build_line_graph(base: Graph) -> LineGraph:
    """Materialize L(base) with deterministic vertex order.

    Line-graph vertices follow the base edge order; deg_L([u,v]) equals
    deg(u) + deg(v) - 2.
    """
    base_edges = base.edges()
    ev = tuple(EdgeVertex(u, v) for u, v in base_edges)

    incident: list[list[int]] = [[] for _ in range(base.n)]
    for i, (u, v) in enumerate(base_edges):
        incident[u].append(i)
        incident[v].append(i)

    l_edges = set()
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                i, j = ids[a], ids[b]
                l_edges.add((i, j) if i < j else (j, i))

    labels = [f"[{base.labels[u]}|{base.labels[v]}]" for u, v in base_edges]
    graph = Graph(len(base_edges), sorted(l_edges), labels=labels, data=ev)
    assert graph.n == base.number_of_edges()
    return LineGraph(graph=graph, base=base)


def cross_zero_pattern(base: Graph, e1: EdgeVertex, e2: EdgeVertex) -> np.ndarray:
    """2x2 matrix of zero-set intersections between two model edges.

    Entry (i, j) is True when the zero sets of e1's i-th and e2's j-th
    endpoint meet.  Requires a model base graph (raises TypeError otherwise);
    this pattern drives the line-graph distance and cycle case analysis.
    """
    if base.data is None or not all(isinstance(d, FunctionVertex) for d in base.data):
        raise TypeError("cross_zero_pattern needs a zero-set model base graph")
    masks = zero_set_masks(base)
    out = np.zeros((2, 2), dtype=bool)
    for i, a in enumerate(e1.endpoints()):
        for j, b in enumerate(e2.endpoints()):
            out[i, j] = (masks[a] & masks[b]) != 0
    return out


def endpoint_mask_arrays(line: LineGraph) -> tuple[np.ndarray, np.ndarray]:
    """Zero-set masks of each line-graph vertex's two endpoints."""
    masks = zero_set_masks(line.base)
    ev = line.edge_vertices
    m1 = np.array([masks[e.u] for e in ev], dtype=np.int64)
    m2 = np.array([masks[e.v] for e in ev], dtype=np.int64)
    return m1, m2
