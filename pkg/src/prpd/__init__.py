"""PageRank persistence descriptors for graph and mesh similarity.

Computes, for an undirected graph, the 0-dimensional persistence diagram of
the lower-star filtration induced by the graph's PageRank vector, and compares
such descriptors with the exact bottleneck distance. Includes corpus tooling
(pairwise distance matrices, nearest-neighbor evaluation) and a CLI.
"""

from .bottleneck import bottleneck_distance, bottleneck_distance_bruteforce
from .errors import DomainError, InputError, PrpdError
from .graph import Graph, build_graph, connected_components, vertex_order
from .ingest import (CorpusManifest, ManifestEntry, load_graph, load_manifest,
                     parse_edge_list, parse_off)
from .pagerank import PageRankConfig, PageRankResult, edge_values, pagerank
from .persistence import (PersistenceDiagram, local_minimum_count,
                          lower_star_diagram, lower_star_diagram_bruteforce,
                          pagerank_diagram, read_diagram, write_diagram)
from .pipeline import (DistanceMatrix, EvalReport, corpus_diagrams,
                       distance_matrix, evaluate, read_distance_matrix,
                       write_distance_matrix)

__version__ = "0.1.0"

__all__ = [
    "PrpdError", "InputError", "DomainError",
    "Graph", "build_graph", "vertex_order", "connected_components",
    "CorpusManifest", "ManifestEntry", "parse_edge_list", "parse_off",
    "load_graph", "load_manifest",
    "PageRankConfig", "PageRankResult", "pagerank", "edge_values",
    "PersistenceDiagram", "lower_star_diagram", "lower_star_diagram_bruteforce",
    "pagerank_diagram", "local_minimum_count", "read_diagram", "write_diagram",
    "bottleneck_distance", "bottleneck_distance_bruteforce",
    "DistanceMatrix", "EvalReport", "corpus_diagrams", "distance_matrix",
    "evaluate", "read_distance_matrix", "write_distance_matrix",
    "__version__",
]
