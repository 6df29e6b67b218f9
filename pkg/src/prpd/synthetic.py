"""Seeded synthetic graphs, meshes, and corpora for tests and benchmarks."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np
from scipy.spatial import cKDTree

from .errors import DomainError
from .graph import Graph, build_graph


def random_geometric_graph(num_vertices: int, radius: float, seed: int) -> Graph:
    """Uniform points in the unit square, edges between pairs within radius."""
    rng = np.random.default_rng(seed)
    points = rng.random((num_vertices, 2))
    pairs = cKDTree(points).query_pairs(radius, output_type="ndarray")
    return build_graph(num_vertices, pairs.reshape(-1, 2))


def random_geometric_graph_by_edges(num_edges: int, seed: int,
                                    mean_degree: float = 10.0) -> Graph:
    """Geometric graph sized so the expected edge count is near num_edges."""
    if num_edges <= 0:
        raise DomainError(f"edge target must be positive, got {num_edges}")
    n = max(2, int(round(2.0 * num_edges / mean_degree)))
    radius = math.sqrt(mean_degree / (math.pi * n))
    return random_geometric_graph(n, radius, seed)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def double_star(leaves_a: int, leaves_b: int) -> Graph:
    """Two adjacent hubs (ids 0 and 1), each with its own set of leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(leaves_a)]
    edges += [(1, 2 + leaves_a + i) for i in range(leaves_b)]
    return build_graph(2 + leaves_a + leaves_b, edges)


def add_random_edges(graph: Graph, count: int, seed: int) -> Graph:
    """Copy of the graph with `count` extra random non-duplicate edges."""
    rng = np.random.default_rng(seed)
    n = graph.num_vertices
    existing = {(int(u), int(v)) for u, v in graph.edges}
    extra: list[tuple[int, int]] = []
    attempts = 0
    while len(extra) < count:
        attempts += 1
        if attempts > 1000 * (count + 1):
            raise DomainError("graph too dense to add the requested edges")
        u, v = rng.integers(0, n, size=2)
        u, v = int(min(u, v)), int(max(u, v))
        if u == v or (u, v) in existing:
            continue
        existing.add((u, v))
        extra.append((u, v))
    all_edges = np.vstack([graph.edges, np.array(extra, dtype=np.int64).reshape(-1, 2)])
    return build_graph(n, all_edges)


def grid_mesh_off(rows: int, cols: int, flip_fraction: float = 0.0, seed: int = 0) -> str:
    """ASCII OFF text for a triangulated rows x cols grid of quads.

    Each quad splits along one diagonal; a seeded fraction of quads flips its
    diagonal, perturbing the 1-skeleton without changing the vertex set.
    """
    rng = np.random.default_rng(seed)
    nv = (rows + 1) * (cols + 1)

    def vid(r: int, c: int) -> int:
        return r * (cols + 1) + c

    faces: list[tuple[int, int, int]] = []
    for r in range(rows):
        for c in range(cols):
            a = vid(r, c)
            b = vid(r, c + 1)
            d = vid(r + 1, c)
            e = vid(r + 1, c + 1)
            if rng.random() < flip_fraction:
                faces += [(a, b, d), (b, e, d)]
            else:
                faces += [(a, b, e), (a, e, d)]
    lines = ["OFF", f"{nv} {len(faces)} 0"]
    for r in range(rows + 1):
        for c in range(cols + 1):
            lines.append(f"{c} {r} 0")
    for f in faces:
        lines.append(f"3 {f[0]} {f[1]} {f[2]}")
    return "\n".join(lines) + "\n"


def edge_list_text(graph: Graph) -> str:
    """Plain 'u v' edge-list text for a graph (isolated vertices are dropped)."""
    return "".join(f"{u} {v}\n" for u, v in graph.edges)


def two_class_corpus(directory, per_class: int = 20, seed: int = 0) -> Path:
    """Materialize a labeled two-class corpus; returns the manifest path.

    Class 'ring': cycles with a few random chords; PageRank stays nearly
    uniform, so finite persistence is small. Class 'star': double stars with
    random leaf-to-leaf chords; hub/leaf contrast yields high-persistence
    pairs. Instance sizes and chords vary per seeded instance.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    rows = ["path,label"]
    for i in range(per_class):
        n = int(rng.integers(48, 72))
        g = add_random_edges(cycle_graph(n), int(rng.integers(2, 5)),
                             seed=int(rng.integers(2**31)))
        name = f"ring_{i:02d}.edges"
        (directory / name).write_text(edge_list_text(g), encoding="utf-8")
        rows.append(f"{name},ring")
    for i in range(per_class):
        leaves = int(rng.integers(12, 20))
        g = add_random_edges(double_star(leaves, leaves), int(rng.integers(2, 5)),
                             seed=int(rng.integers(2**31)))
        name = f"star_{i:02d}.edges"
        (directory / name).write_text(edge_list_text(g), encoding="utf-8")
        rows.append(f"{name},star")
    manifest = directory / "manifest.csv"
    manifest.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return manifest
