"""Undirected PageRank by power iteration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError
from .graph import Graph, as_scalar_field


@dataclass(frozen=True)
class PageRankConfig:
    """Power-iteration parameters.

    damping: probability of following an edge rather than teleporting.
    tolerance: L1 change between successive iterates that counts as converged.
    max_iterations: iteration cap; reaching it yields converged=False.
    """

    damping: float = 0.85
    tolerance: float = 1e-10
    max_iterations: int = 1000

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise DomainError(f"damping must be in (0, 1), got {self.damping}")
        if self.tolerance <= 0.0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise DomainError(f"max_iterations must be >= 1, got {self.max_iterations}")


@dataclass
class PageRankResult:
    """PageRank vector plus iteration diagnostics.

    values sums to 1 (degree-0 vertices hand their mass back uniformly each
    iteration). A non-converged result is still returned; the caller decides
    whether to use it.
    """

    values: np.ndarray
    iterations: int
    converged: bool


def pagerank(graph: Graph, config: PageRankConfig | None = None) -> PageRankResult:
    """PageRank scores of every vertex, starting from the uniform vector.

    Neighbor contributions are accumulated in ascending neighbor-id order, so
    identical input and config give bit-identical output.
    """
    if graph.num_vertices == 0:
        raise DomainError("PageRank is undefined on the empty graph")
    cfg = config if config is not None else PageRankConfig()
    deg = graph.degrees()
    inv_degree = np.zeros(graph.num_vertices)
    np.divide(1.0, deg, out=inv_degree, where=deg > 0)
    x, iterations, converged = kernels.pagerank_power(
        graph.indptr, graph.indices, inv_degree,
        cfg.damping, cfg.tolerance, cfg.max_iterations)
    return PageRankResult(values=x, iterations=int(iterations), converged=bool(converged))


def edge_values(graph: Graph, field) -> np.ndarray:
    """Extend a vertex field to edges: each edge takes the max endpoint value.

    The result is aligned with graph.edges rows.
    """
    values = as_scalar_field(graph, field)
    if graph.num_edges == 0:
        return np.zeros(0)
    return np.maximum(values[graph.edges[:, 0]], values[graph.edges[:, 1]])
