"""Structured {1}-inverse of a transformed graph's Laplacian.

Everything is computed from the factor graph alone; the transformed graph is
never materialized here.  Ordered by the flat id layout, the transform's
Laplacian has the block shape [[A, B], [B^T, D]] with

    A = 2 deg - adj              (n x n, over the factor graph)
    B = [-b1, -b2]               (quadrilateral)   or
        [-b1, 0, -b2]            (pentagonal)
    D = path-chain Laplacian-plus-identity blocks, kron(T_k, I_m) with
        T_2 = [[2,-1],[-1,2]],  T_3 = [[2,-1,0],[-1,2,-1],[0,-1,2]].

The Schur complement A - B D^{-1} B^T collapses, via the incidence split
identities, to a scalar multiple of the factor Laplacian: (4/3) L for the
quadrilateral transform and (5/4) L for the pentagonal one.  Its group
inverse is therefore the matching scalar multiple of L^#, so the whole block
{1}-inverse costs one group inverse of L plus one small LU solve for D.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DisconnectedGraphError, Graph, incidence_split, is_connected, laplacian
from .linalg import all_ones_sum, group_inverse_laplacian, invert, trace
from .transforms import TransformKind, VertexClass, flat_id

_PATH_CHAIN = {
    2: np.array([[2.0, -1.0], [-1.0, 2.0]]),
    3: np.array([[2.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 2.0]]),
}


@dataclass(frozen=True)
class StructuredOneInverse:
    """Block {1}-inverse of a transform's Laplacian, plus its ingredients.

    ``full`` is the assembled symmetric matrix

        [[ top_left_scale * lg_sharp,  corner ],
         [ corner^T,                   lower  ]]

    indexed by the flat id layout of :mod:`kirchlab.transforms`.
    """

    kind: TransformKind
    n: int
    m: int
    lg_sharp: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    corner: np.ndarray
    lower: np.ndarray
    top_left_scale: float
    full: np.ndarray

    @property
    def total_vertices(self) -> int:
        return self.kind.vertex_count(self.n, self.m)


def build_structured_inverse(g: Graph, kind: TransformKind) -> StructuredOneInverse:
    """Build the structured {1}-inverse from factor-graph data only.

    Requires a connected factor graph with at least one edge.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("factor graph must be connected")
    if g.m == 0:
        raise ValueError("factor graph must have at least one edge")

    n, m = g.n, g.m
    split = incidence_split(g)
    b1 = split.b1.astype(np.float64)
    b2 = split.b2.astype(np.float64)

    lg_sharp = group_inverse_laplacian(laplacian(g))
    scale = kind.resistance_scale
    h_sharp = scale * lg_sharp

    k = kind.path_vertices
    if k == 2:
        b_blk = np.hstack([-b1, -b2])
    else:
        b_blk = np.hstack([-b1, np.zeros((n, m)), -b2])
    d_blk = np.kron(_PATH_CHAIN[k], np.eye(m))
    d_inv = invert(d_blk)

    corner = -h_sharp @ b_blk @ d_inv
    lower = d_inv + d_inv @ b_blk.T @ h_sharp @ b_blk @ d_inv
    full = np.block([[h_sharp, corner], [corner.T, lower]])

    for arr in (lg_sharp, corner, lower, full):
        arr.flags.writeable = False
    return StructuredOneInverse(
        kind=kind,
        n=n,
        m=m,
        lg_sharp=lg_sharp,
        b1=split.b1,
        b2=split.b2,
        corner=corner,
        lower=lower,
        top_left_scale=scale,
        full=full,
    )


def resistance(x: StructuredOneInverse, i: VertexClass, j: VertexClass) -> float:
    """Resistance distance between two transformed-graph vertices.

    For any {1}-inverse X of the Laplacian, r_ij = X_ii + X_jj - X_ij - X_ji.
    """
    fi = flat_id(i, x.n, x.m, x.kind)
    fj = flat_id(j, x.n, x.m, x.kind)
    full = x.full
    return float(full[fi, fi] + full[fj, fj] - full[fi, fj] - full[fj, fi])


def resistance_matrix(x: StructuredOneInverse) -> np.ndarray:
    """All-pairs resistance distances, indexed by flat id."""
    full = x.full
    d = np.diag(full)
    return d[:, None] + d[None, :] - full - full.T


def kirchhoff(x: StructuredOneInverse) -> float:
    """Kirchhoff index: N * tr(X) - 1^T X 1 over the N transformed vertices."""
    return x.total_vertices * trace(x.full) - all_ones_sum(x.full)
