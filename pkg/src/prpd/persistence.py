"""0-dimensional persistence of lower-star filtrations on graphs.

A scalar field on the vertices induces a filtration where each vertex enters
at its own value and each edge at the max of its endpoints. Sweeping simplices
in ascending order, connected components appear at local minima and merge at
edges; each merge kills the younger of the two components (elder rule). The
resulting multiset of (birth, death) pairs, plus one never-dying birth per
connected component, is the descriptor this package computes and compares.

Ties in the field are broken by vertex id, giving a strict total order on
vertices (and from it, on edges), so the diagram is deterministic even on
symmetric graphs where PageRank values collide.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, InputError
from .graph import Graph, as_scalar_field, vertex_order
from .pagerank import PageRankConfig, pagerank


@dataclass(eq=False)
class PersistenceDiagram:
    """Finite (birth, death) pairs plus essential births, as sorted arrays.

    Construction canonicalizes: finite rows sorted by (birth, death),
    essential births sorted ascending, zero-persistence pairs (birth == death)
    dropped. Two diagrams are equal iff they are equal as multisets.
    """

    finite: np.ndarray
    essential: np.ndarray

    def __post_init__(self):
        fin = np.asarray(self.finite, dtype=np.float64).reshape(-1, 2)
        ess = np.asarray(self.essential, dtype=np.float64).ravel()
        if not (np.isfinite(fin).all() and np.isfinite(ess).all()):
            raise DomainError("diagram values must be finite reals")
        if np.any(fin[:, 0] > fin[:, 1]):
            raise DomainError("persistence pair with birth > death")
        fin = fin[fin[:, 0] < fin[:, 1]]
        order = np.lexsort((fin[:, 1], fin[:, 0]))
        self.finite = fin[order]
        self.essential = np.sort(ess)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return (np.array_equal(self.finite, other.finite)
                and np.array_equal(self.essential, other.essential))

    def __len__(self) -> int:
        return self.finite.shape[0] + self.essential.shape[0]


def lower_star_diagram(graph: Graph, field) -> PersistenceDiagram:
    """0-dimensional persistence diagram of the lower-star filtration.

    Union-find sweep over edges in ascending filtration order; near-linear in
    the number of edges after the sort.
    """
    values = as_scalar_field(graph, field)
    n = graph.num_vertices
    if n == 0:
        return PersistenceDiagram(np.zeros((0, 2)), np.zeros(0))
    if graph.num_edges == 0:
        return PersistenceDiagram(np.zeros((0, 2)), values.copy())
    eu_s, ev_s, death_s, rank = edge_filtration_order(graph, values)
    finite, essential = run_merge(graph, values, eu_s, ev_s, death_s, rank,
                                  kernels.merge_pairs)
    return PersistenceDiagram(finite, essential)


def edge_filtration_order(graph: Graph, values: np.ndarray):
    """Edges reordered ascending by (edge value, max endpoint key, min endpoint key).

    Endpoint keys are positions in the (value, id) vertex total order, and an
    edge's value equals the value of its later endpoint, so sorting by
    (later rank, earlier rank) realizes exactly that order. Returns the
    reordered endpoint arrays, per-edge death values, and the vertex ranks.
    """
    n = graph.num_vertices
    order = vertex_order(values)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n, dtype=np.int64)
    eu = graph.edges[:, 0]
    ev = graph.edges[:, 1]
    ru = rank[eu]
    rv = rank[ev]
    key = np.maximum(ru, rv) * np.int64(n) + np.minimum(ru, rv)
    esort = np.argsort(key)
    eu_s = eu[esort]
    ev_s = ev[esort]
    death_s = np.maximum(values[eu_s], values[ev_s])
    return eu_s, ev_s, death_s, rank


def run_merge(graph: Graph, values, eu_s, ev_s, death_s, rank, merge_kernel):
    """Run the union-find merge pass; returns (finite pairs, essential births)."""
    n = graph.num_vertices
    parent = np.arange(n, dtype=np.int64)
    cap = min(eu_s.size, max(n - 1, 0))
    births = np.empty(cap)
    deaths = np.empty(cap)
    count = int(merge_kernel(eu_s, ev_s, death_s, rank, values, parent, births, deaths))
    finite = np.column_stack([births[:count], deaths[:count]])
    essential = values[parent == np.arange(n)]
    return finite, essential


def pagerank_diagram(graph: Graph, config: PageRankConfig | None = None) -> PersistenceDiagram:
    """The full descriptor: diagram of the PageRank lower-star filtration."""
    result = pagerank(graph, config)
    return lower_star_diagram(graph, result.values)


def local_minimum_count(graph: Graph, field) -> int:
    """Count vertices with no neighbor earlier in the (value, id) order.

    Components are born exactly at these vertices. For fields without value
    ties the count equals len(diagram.finite) + len(diagram.essential); a tied
    minimum may instead produce a zero-persistence pair, which diagrams drop.
    """
    values = as_scalar_field(graph, field)
    n = graph.num_vertices
    is_min = np.ones(n, dtype=bool)
    if graph.num_edges:
        order = vertex_order(values)
        rank = np.empty(n, dtype=np.int64)
        rank[order] = np.arange(n, dtype=np.int64)
        eu = graph.edges[:, 0]
        ev = graph.edges[:, 1]
        later = np.where(rank[eu] > rank[ev], eu, ev)
        is_min[later] = False
    return int(is_min.sum())


def lower_star_diagram_bruteforce(graph: Graph, field) -> PersistenceDiagram:
    """Reference diagram built by re-examining every sublevel subgraph.

    Adds vertices one at a time in (value, id) order, recomputes connected
    components of the induced subgraph from scratch, and reads births and
    deaths off the component changes. Quadratic; intended for small graphs
    in tests.
    """
    values = as_scalar_field(graph, field)
    n = graph.num_vertices
    order = vertex_order(values)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n, dtype=np.int64)
    present = np.zeros(n, dtype=bool)
    finite: list[tuple[float, float]] = []
    prev_comps: list[set[int]] = []
    for v in order:
        v = int(v)
        present[v] = True
        comps = _induced_components(graph, present)
        for comp in comps:
            merged = [c for c in prev_comps if c & comp]
            if len(merged) > 1:
                birth_ranks = sorted(min(int(rank[u]) for u in c) for c in merged)
                for br in birth_ranks[1:]:
                    birth = float(values[order[br]])
                    death = float(values[v])
                    if birth != death:
                        finite.append((birth, death))
        prev_comps = comps
    essential = [float(values[min(c, key=lambda u: rank[u])]) for c in prev_comps]
    return PersistenceDiagram(np.array(finite, dtype=np.float64).reshape(-1, 2),
                              np.array(essential, dtype=np.float64))


def _induced_components(graph: Graph, present: np.ndarray) -> list[set[int]]:
    seen: set[int] = set()
    comps: list[set[int]] = []
    for start in range(graph.num_vertices):
        if not present[start] or start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in graph.neighbors(u):
                w = int(w)
                if present[w] and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


# --------------------------------------------------------------------------
# Diagram files: one "birth,death" line per point, essential births written
# with the literal death "inf". 17 significant digits round-trip float64
# exactly.


def write_diagram(diagram: PersistenceDiagram, dest) -> None:
    """Write a diagram as CSV to a path or text stream."""
    lines = [f"{b:.17g},{d:.17g}" for b, d in diagram.finite]
    lines += [f"{b:.17g},inf" for b in diagram.essential]
    text = "\n".join(lines) + ("\n" if lines else "")
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as f:
            f.write(text)


def read_diagram(source) -> PersistenceDiagram:
    """Read a diagram written by write_diagram from a path or text stream."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as exc:
            raise InputError(f"{source}: {exc.strerror or exc}") from exc
    finite: list[tuple[float, float]] = []
    essential: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise InputError(f"diagram line {lineno}: expected 'birth,death', got {line!r}")
        try:
            birth = float(parts[0])
            death = float(parts[1])
        except ValueError:
            raise InputError(f"diagram line {lineno}: bad number in {line!r}") from None
        if not np.isfinite(birth):
            raise InputError(f"diagram line {lineno}: birth must be finite, got {parts[0]!r}")
        if np.isinf(death) and death > 0:
            essential.append(birth)
        elif np.isfinite(death):
            finite.append((birth, death))
        else:
            raise InputError(f"diagram line {lineno}: bad death value {parts[1]!r}")
    return PersistenceDiagram(np.array(finite, dtype=np.float64).reshape(-1, 2),
                              np.array(essential, dtype=np.float64))
