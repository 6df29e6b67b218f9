"""Descriptor timing across graph sizes and kernel backends."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError
from .graph import Graph
from .pagerank import PageRankConfig
from .persistence import edge_filtration_order, run_merge
from .synthetic import random_geometric_graph_by_edges


@dataclass
class StageTiming:
    num_vertices: int
    num_edges: int
    stage: str
    backend: str
    seconds: float


_STAGES = ("pagerank", "edge_sort", "union_find", "total")


def _backend_kernels(backend: str):
    if backend == "numba":
        if kernels.pagerank_power_numba is None:
            raise DomainError("numba backend unavailable "
                              "(PRPD_DISABLE_NUMBA set or numba not installed)")
        return kernels.pagerank_power_numba, kernels.merge_pairs_numba
    if backend == "numpy":
        return kernels.pagerank_power_numpy, kernels.merge_pairs_python
    raise DomainError(f"unknown backend {backend!r}")


def descriptor_stage_times(graph: Graph, config: PageRankConfig | None = None,
                           backend: str | None = None) -> dict[str, float]:
    """Time each descriptor stage once on the given graph.

    Stages: pagerank power iteration, edge filtration sort, union-find merge
    pass, and their total. Uses the module's active backend unless one is
    named explicitly.
    """
    backend = backend or kernels.BACKEND
    pagerank_kernel, merge_kernel = _backend_kernels(backend)
    cfg = config if config is not None else PageRankConfig()
    deg = graph.degrees()
    inv_degree = np.zeros(graph.num_vertices)
    np.divide(1.0, deg, out=inv_degree, where=deg > 0)

    t0 = time.perf_counter()
    values, _, _ = pagerank_kernel(graph.indptr, graph.indices, inv_degree,
                                   cfg.damping, cfg.tolerance, cfg.max_iterations)
    t1 = time.perf_counter()
    eu_s, ev_s, death_s, rank = edge_filtration_order(graph, values)
    t2 = time.perf_counter()
    run_merge(graph, values, eu_s, ev_s, death_s, rank, merge_kernel)
    t3 = time.perf_counter()
    return {"pagerank": t1 - t0, "edge_sort": t2 - t1,
            "union_find": t3 - t2, "total": t3 - t0}


def run_bench(edge_targets: list[int], seed: int = 0,
              config: PageRankConfig | None = None,
              compare_backends: bool = False, repeat: int = 1) -> list[StageTiming]:
    """Benchmark the descriptor on seeded geometric graphs of growing size.

    Times the best of `repeat` runs per stage. With compare_backends, the
    numpy fallback is timed next to the active numba kernels. JIT compilation
    is triggered beforehand so it never lands in a measurement.
    """
    if repeat < 1:
        raise DomainError(f"repeat must be >= 1, got {repeat}")
    backends = [kernels.BACKEND]
    if compare_backends and kernels.BACKEND == "numba":
        backends.append("numpy")
    kernels.warmup()
    rows: list[StageTiming] = []
    for target in edge_targets:
        graph = random_geometric_graph_by_edges(target, seed)
        for backend in backends:
            best: dict[str, float] = {}
            for _ in range(repeat):
                stages = descriptor_stage_times(graph, config, backend)
                for stage, seconds in stages.items():
                    if stage not in best or seconds < best[stage]:
                        best[stage] = seconds
            for stage in _STAGES:
                rows.append(StageTiming(graph.num_vertices, graph.num_edges,
                                        stage, backend, best[stage]))
    return rows


def write_timings(rows: list[StageTiming], dest) -> None:
    """CSV timing table: num_vertices,num_edges,stage,backend,seconds."""
    lines = ["num_vertices,num_edges,stage,backend,seconds"]
    lines += [f"{r.num_vertices},{r.num_edges},{r.stage},{r.backend},{r.seconds:.6f}"
              for r in rows]
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as f:
            f.write(text)
