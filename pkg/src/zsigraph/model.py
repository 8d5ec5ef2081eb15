"""Finite faithful model of the zero-set intersection graph of C(X).

For an n-point discrete space X, a continuous function is determined up to
adjacency by its zero set, so the graph is modeled on (zero-set class, copy)
pairs: every nonempty proper subset of X contributes ``m`` copies (standing
in for the scalar multiples f, 2f, 3f, ... that share one zero set), and the
constant zero function - the one vertex with zero set X - is included only
on request.  Two vertices are adjacent exactly when their zero sets meet.

Vertex order is deterministic (subsets by bitmask value, then copy index),
so exports and witnesses are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class FiniteSpace:
    """Discrete space on points 0..n-1."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a space needs at least one point")

    @property
    def points(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class ZeroSet:
    """Nonempty subset of an n-point space, stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a space needs at least one point")
        if self.mask <= 0 or self.mask > (1 << self.n) - 1:
            raise ValueError(
                f"zero set must be a nonempty subset of {self.n} points")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.n) if self.mask >> p & 1)

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def intersects(self, other: "ZeroSet") -> bool:
        self._check_space(other)
        return (self.mask & other.mask) != 0

    def union_covers_space(self, other: "ZeroSet") -> bool:
        self._check_space(other)
        return (self.mask | other.mask) == (1 << self.n) - 1

    def label(self) -> str:
        return ",".join(str(p) for p in self.members)

    def _check_space(self, other: "ZeroSet") -> None:
        if self.n != other.n:
            raise ValueError("zero sets live in different spaces")


def complement_class(s: ZeroSet) -> ZeroSet | None:
    """Zero-set class of the complement indicator, or None for Z = X.

    The function that is 1 on Z(f) and 0 elsewhere is continuous on a
    discrete space and vanishes exactly on X \\ Z(f); it degenerates (no
    vertex) only for the constant zero function.
    """
    comp = ((1 << s.n) - 1) ^ s.mask
    return None if comp == 0 else ZeroSet(comp, s.n)


@dataclass(frozen=True)
class FunctionVertex:
    """One function of the model: a zero-set class plus a copy index."""

    zero_set: ZeroSet
    copy: int

    def __post_init__(self):
        if self.copy < 1:
            raise ValueError("copy index starts at 1")
        if self.zero_set.is_full and self.copy != 1:
            raise ValueError(
                "only the constant zero function has zero set X; it has one copy")

    @property
    def label(self) -> str:
        return f"{self.zero_set.label()}:{self.copy}"


@dataclass(frozen=True)
class ModelConfig:
    """Model parameters: space size, class multiplicity, zero-vertex mode.

    ``m`` defaults to 4: four same-class copies are enough to realize every
    copy-consuming construction the checks validate (triangles through 2f
    and 3f, the four-copy chordless square in the line graph).  The zero
    vertex is excluded by default; including it is a first-class mode whose
    deviations the verifier reports as anomalies rather than hiding.
    """

    n: int
    m: int = 4
    include_zero: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("space size n must be >= 1")
        if self.m < 1:
            raise ValueError("class multiplicity m must be >= 1")

    @property
    def space(self) -> FiniteSpace:
        return FiniteSpace(self.n)

    @property
    def vertex_count(self) -> int:
        return (2 ** self.n - 2) * self.m + (1 if self.include_zero else 0)

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "include_zero": self.include_zero}


def enumerate_vertices(config: ModelConfig) -> list[FunctionVertex]:
    """All model vertices in deterministic (bitmask, copy) order."""
    n = config.n
    full = (1 << n) - 1
    out = []
    for mask in range(1, full):
        zs = ZeroSet(mask, n)
        for k in range(1, config.m + 1):
            out.append(FunctionVertex(zs, k))
    if config.include_zero:
        out.append(FunctionVertex(ZeroSet(full, n), 1))
    return out


def adjacent(u: FunctionVertex, v: FunctionVertex) -> bool:
    """Distinct functions whose zero sets meet."""
    if u.zero_set.n != v.zero_set.n:
        raise ValueError("vertices drawn from different models")
    return u != v and u.zero_set.intersects(v.zero_set)


def build_gamma(config: ModelConfig) -> Graph:
    """The zero-set intersection graph for the given configuration."""
    verts = enumerate_vertices(config)
    nv = len(verts)
    masks = np.array([v.zero_set.mask for v in verts], dtype=np.int64)
    adj = (masks[:, None] & masks[None, :]) != 0
    np.fill_diagonal(adj, False)
    iu, ju = np.triu_indices(nv, k=1)
    sel = adj[iu, ju]
    edges = list(zip(iu[sel].tolist(), ju[sel].tolist()))
    labels = [v.label for v in verts]
    return Graph(nv, edges, labels=labels, data=tuple(verts))


def vertex_index(config: ModelConfig, mask: int, copy: int = 1) -> int:
    """Index of (class, copy) in the deterministic vertex order."""
    full = (1 << config.n) - 1
    if mask == full:
        if not config.include_zero:
            raise ValueError("zero vertex not present in this configuration")
        if copy != 1:
            raise ValueError("the zero class has a single copy")
        return (2 ** config.n - 2) * config.m
    if not (0 < mask < full):
        raise ValueError(f"mask {mask} is not a proper nonempty subset")
    if not (1 <= copy <= config.m):
        raise ValueError(f"copy {copy} outside 1..{config.m}")
    return (mask - 1) * config.m + (copy - 1)


def zero_set_masks(g: Graph) -> np.ndarray:
    """Per-vertex zero-set bitmasks of a model graph."""
    if g.data is None or not all(isinstance(d, FunctionVertex) for d in g.data):
        raise TypeError("not a zero-set model graph")
    return np.array([d.zero_set.mask for d in g.data], dtype=np.int64)


def parse_vertex_label(label: str, n: int) -> tuple[int, int]:
    """Parse "0,2:3" into (mask, copy)."""
    try:
        points_part, copy_part = label.rsplit(":", 1)
        copy = int(copy_part)
        points = [int(p) for p in points_part.split(",")]
    except (ValueError, AttributeError) as exc:
        raise ValueError(f"malformed vertex label {label!r}") from exc
    mask = 0
    for p in points:
        if not (0 <= p < n):
            raise ValueError(f"point {p} outside 0..{n - 1} in {label!r}")
        mask |= 1 << p
    if mask == 0:
        raise ValueError(f"empty zero set in {label!r}")
    return mask, copy
