"""Undirected simple graphs over dense integer vertex ids."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, InputError


@dataclass(eq=False)
class Graph:
    """Immutable undirected simple graph.

    ``edges`` is an (m, 2) int64 array in canonical form: each row (u, v) has
    u < v and rows are sorted lexicographically. ``indptr``/``indices`` form a
    CSR adjacency whose neighbor lists are sorted ascending. Instances are
    treated as read-only after construction and are safe to share across
    workers.
    """

    num_vertices: int
    edges: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]


def build_graph(num_vertices: int, edge_list) -> Graph:
    """Build a simple graph from a vertex count and (u, v) pairs.

    Duplicate edges (in either orientation) collapse to a single edge.
    Self-loops and endpoints outside 0..num_vertices-1 raise InputError
    naming the offending pair.
    """
    if num_vertices < 0:
        raise InputError(f"vertex count must be nonnegative, got {num_vertices}")
    arr = np.asarray(edge_list, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InputError(f"edge list must be pairs of vertex ids, got shape {arr.shape}")
    out_of_range = (arr < 0) | (arr >= num_vertices)
    if out_of_range.any():
        i = int(np.nonzero(out_of_range.any(axis=1))[0][0])
        raise InputError(
            f"edge ({arr[i, 0]}, {arr[i, 1]}): endpoint out of range for "
            f"{num_vertices} vertices")
    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        i = int(np.nonzero(loops)[0][0])
        raise InputError(f"edge ({arr[i, 0]}, {arr[i, 1]}): self-loops are not allowed")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    edges = np.unique(np.column_stack([lo, hi]), axis=0)
    indptr, indices = _adjacency(num_vertices, edges)
    return Graph(num_vertices, edges, indptr, indices)


def _adjacency(n: int, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    heads = np.concatenate([edges[:, 0], edges[:, 1]])
    tails = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((tails, heads))
    counts = np.bincount(heads, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, tails[order]


def as_scalar_field(graph: Graph, values) -> np.ndarray:
    """Validate per-vertex scalar values against a graph; returns float64."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.shape != (graph.num_vertices,):
        raise DomainError(
            f"scalar field has {arr.size} values for {graph.num_vertices} vertices")
    return arr


def vertex_order(field) -> np.ndarray:
    """Vertex ids sorted ascending by (value, id).

    The id tiebreak makes this a strict total order even when values collide,
    and the stable sort makes it identical across runs and platforms.
    """
    values = np.asarray(field, dtype=np.float64)
    if values.ndim != 1:
        raise DomainError(f"scalar field must be 1-d, got shape {values.shape}")
    return np.argsort(values, kind="stable")


def connected_components(graph: Graph) -> np.ndarray:
    """Label vertices by connected component.

    Labels are 0..k-1 ordered by the smallest vertex id each component
    contains.
    """
    n = graph.num_vertices
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    parent = np.arange(n, dtype=np.int64)
    if graph.num_edges:
        kernels.union_min_roots(graph.edges[:, 0], graph.edges[:, 1], parent)
    _, labels = np.unique(parent, return_inverse=True)
    return labels.astype(np.int64)
