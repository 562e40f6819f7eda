"""Edge-replacement transforms.

The quadrilateral transform replaces every edge uv by parallel paths of
lengths 1 and 3 (a 4-cycle through two new path vertices); the pentagonal
transform uses lengths 1 and 4 (a 5-cycle through three).  New vertices are
grouped by position along the detour path and indexed by the edge they came
from, which fixes a flat id layout on the transformed graph:

    Original k  ->  k
    Path1 i     ->  n + i          (attached to the tail u_i)
    Path2 i     ->  n + m + i
    Path3 i     ->  n + 2m + i     (pentagonal only, attached side of v_i)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph

_QUAD_SCALE = 3.0 / 4.0
_PENT_SCALE = 4.0 / 5.0


class TransformKind(enum.Enum):
    QUADRILATERAL = "quad"
    PENTAGONAL = "pent"

    @property
    def path_vertices(self) -> int:
        """New vertices added per edge."""
        return 2 if self is TransformKind.QUADRILATERAL else 3

    @property
    def resistance_scale(self) -> float:
        """Factor by which original-pair resistances shrink (3/4 or 4/5)."""
        return _QUAD_SCALE if self is TransformKind.QUADRILATERAL else _PENT_SCALE

    def vertex_count(self, n: int, m: int) -> int:
        return n + self.path_vertices * m

    def edge_count(self, m: int) -> int:
        return (self.path_vertices + 2) * m


class VertexRole(enum.Enum):
    ORIGINAL = "original"
    PATH1 = "path1"
    PATH2 = "path2"
    PATH3 = "path3"


@dataclass(frozen=True)
class VertexClass:
    """A transformed-graph vertex named by role and index.

    Original vertices are indexed by their id in the factor graph; path
    vertices are indexed by the edge that spawned them.
    """

    role: VertexRole
    index: int


def original(k: int) -> VertexClass:
    return VertexClass(VertexRole.ORIGINAL, k)


def path1(i: int) -> VertexClass:
    return VertexClass(VertexRole.PATH1, i)


def path2(i: int) -> VertexClass:
    return VertexClass(VertexRole.PATH2, i)


def path3(i: int) -> VertexClass:
    return VertexClass(VertexRole.PATH3, i)


_ROLE_SLOT = {
    VertexRole.ORIGINAL: -1,
    VertexRole.PATH1: 0,
    VertexRole.PATH2: 1,
    VertexRole.PATH3: 2,
}


def flat_id(c: VertexClass, n: int, m: int, kind: TransformKind) -> int:
    """Map a VertexClass to its flat id in the transformed graph."""
    slot = _ROLE_SLOT[c.role]
    if slot < 0:
        if not 0 <= c.index < n:
            raise ValueError(f"original index {c.index} out of range for n={n}")
        return c.index
    if slot >= kind.path_vertices:
        raise ValueError(f"{c.role.value} is not a vertex class of {kind.value}")
    if not 0 <= c.index < m:
        raise ValueError(f"edge index {c.index} out of range for m={m}")
    return n + slot * m + c.index


def classify(idx: int, n: int, m: int, kind: TransformKind) -> VertexClass:
    """Inverse of flat_id."""
    total = kind.vertex_count(n, m)
    if not 0 <= idx < total:
        raise ValueError(f"vertex id {idx} out of range for {kind.value} ({total})")
    if idx < n:
        return VertexClass(VertexRole.ORIGINAL, idx)
    slot, index = divmod(idx - n, m)
    role = (VertexRole.PATH1, VertexRole.PATH2, VertexRole.PATH3)[slot]
    return VertexClass(role, index)


def quadrilateral(g: Graph) -> Graph:
    """Quadrilateral transform: each edge becomes a 4-cycle.

    Edge i = (u, v) contributes, in order: (u, v), (u, Path1 i),
    (Path1 i, Path2 i), (Path2 i, v).  Result: n + 2m vertices, 4m edges.
    """
    n, m = g.n, g.m
    edges: list[tuple[int, int]] = []
    for i, (u, v) in enumerate(g.edges):
        p1 = n + i
        p2 = n + m + i
        edges.extend([(u, v), (u, p1), (p1, p2), (p2, v)])
    return Graph(n + 2 * m, tuple(edges))


def pentagonal(g: Graph) -> Graph:
    """Pentagonal transform: each edge becomes a 5-cycle.

    Edge i = (u, v) contributes, in order: (u, v), (u, Path1 i),
    (Path1 i, Path2 i), (Path2 i, Path3 i), (Path3 i, v).  Result: n + 3m
    vertices, 5m edges.
    """
    n, m = g.n, g.m
    edges: list[tuple[int, int]] = []
    for i, (u, v) in enumerate(g.edges):
        p1 = n + i
        p2 = n + m + i
        p3 = n + 2 * m + i
        edges.extend([(u, v), (u, p1), (p1, p2), (p2, p3), (p3, v)])
    return Graph(n + 3 * m, tuple(edges))


def apply_transform(g: Graph, kind: TransformKind) -> Graph:
    if kind is TransformKind.QUADRILATERAL:
        return quadrilateral(g)
    return pentagonal(g)
