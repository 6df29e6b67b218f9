"""Corpus-level machinery: descriptor batches, distance matrices, evaluation."""

from __future__ import annotations

import csv
import io
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .bottleneck import bottleneck_distance
from .errors import DomainError, InputError
from .ingest import CorpusManifest, load_graph
from .pagerank import PageRankConfig, pagerank
from .persistence import PersistenceDiagram, lower_star_diagram


@dataclass(eq=False)
class DistanceMatrix:
    """Named symmetric matrix of pairwise distances with zero diagonal."""

    names: list[str]
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        n = len(self.names)
        if vals.shape != (n, n):
            raise DomainError(f"matrix shape {vals.shape} does not match {n} names")
        finite = np.isfinite(vals)
        if not np.allclose(vals[finite], vals.T[finite], rtol=0.0, atol=1e-15) \
                or not np.array_equal(finite, finite.T):
            raise DomainError("distance matrix must be symmetric")
        if np.any(np.diag(vals) != 0.0):
            raise DomainError("distance matrix must have a zero diagonal")
        self.values = vals


def corpus_diagrams(manifest: CorpusManifest, config: PageRankConfig | None = None,
                    fmt: str | None = None, base_dir=None,
                    ) -> list[tuple[str, PersistenceDiagram]]:
    """One descriptor per manifest entry, computed once and kept in memory.

    Relative manifest paths resolve against base_dir. Any entry that fails to
    parse or compute aborts the whole batch with an error naming its path.
    """
    base = Path(base_dir) if base_dir is not None else None
    out: list[tuple[str, PersistenceDiagram]] = []
    for entry in manifest.entries:
        path = Path(entry.path)
        if base is not None and not path.is_absolute():
            path = base / path
        graph = load_graph(path, fmt)
        if graph.num_vertices == 0:
            raise DomainError(f"{path}: empty graph has no descriptor")
        result = pagerank(graph, config)
        if not result.converged:
            warnings.warn(f"{path}: PageRank did not converge in "
                          f"{result.iterations} iterations", stacklevel=2)
        out.append((entry.path, lower_star_diagram(graph, result.values)))
    return out


def _pair_distance(task) -> float:
    x, y, include_essential = task
    return bottleneck_distance(x, y, include_essential)


def distance_matrix(diagrams: list[tuple[str, PersistenceDiagram]],
                    include_essential: bool = False, jobs: int = 1) -> DistanceMatrix:
    """All-pairs bottleneck distances; each unordered pair computed once.

    jobs > 1 spreads pairs over worker processes; results are assembled by
    pair index, so the output is identical to a sequential run.
    """
    names = [name for name, _ in diagrams]
    ds = [d for _, d in diagrams]
    n = len(ds)
    values = np.zeros((n, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if jobs > 1 and len(pairs) > 1:
        tasks = [(ds[i], ds[j], include_essential) for i, j in pairs]
        chunk = max(1, len(tasks) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_pair_distance, tasks, chunksize=chunk))
    else:
        results = [bottleneck_distance(ds[i], ds[j], include_essential)
                   for i, j in pairs]
    for (i, j), dist in zip(pairs, results):
        values[i, j] = values[j, i] = dist
    return DistanceMatrix(names, values)


def write_distance_matrix(matrix: DistanceMatrix, dest) -> None:
    """CSV with a header row of names, then one row of distances per item."""
    if hasattr(dest, "write"):
        _write_matrix_rows(matrix, dest)
    else:
        with open(dest, "w", encoding="utf-8", newline="") as f:
            _write_matrix_rows(matrix, f)


def _write_matrix_rows(matrix: DistanceMatrix, f) -> None:
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(matrix.names)
    for row in matrix.values:
        writer.writerow([f"{x:.17g}" for x in row])


def read_distance_matrix(source) -> DistanceMatrix:
    """Read a matrix written by write_distance_matrix (path or text stream)."""
    if hasattr(source, "read"):
        stream = source
    else:
        try:
            stream = io.StringIO(Path(source).read_text(encoding="utf-8"))
        except OSError as exc:
            raise InputError(f"{source}: {exc.strerror or exc}") from exc
    rows = [row for row in csv.reader(stream) if row]
    if not rows:
        raise InputError("distance matrix file is empty")
    names = rows[0]
    n = len(names)
    if len(rows) - 1 != n:
        raise InputError(f"distance matrix has {len(rows) - 1} rows for {n} names")
    try:
        values = np.array([[float(x) for x in row] for row in rows[1:]])
    except ValueError as exc:
        raise InputError(f"bad value in distance matrix: {exc}") from None
    if values.shape != (n, n):
        raise InputError(f"distance matrix rows have wrong width for {n} names")
    return DistanceMatrix(names, values)


@dataclass
class ItemResult:
    name: str
    label: str
    nearest: str
    nearest_label: str
    distance: float


@dataclass
class EvalReport:
    """Corpus clustering quality derived from a labeled distance matrix."""

    nn_accuracy: float
    inter_class_mean: float
    intra_class_mean: dict[str, float]
    items: list[ItemResult]

    def to_json_dict(self) -> dict:
        return asdict(self)


def evaluate(labels: list[str], matrix: DistanceMatrix) -> EvalReport:
    """Leave-one-out 1-NN accuracy and intra/inter class distance means.

    Nearest-neighbor ties break toward the earlier item. Requires at least
    two classes and at least two items per class.
    """
    n = len(labels)
    if n != len(matrix.names):
        raise DomainError(f"{len(labels)} labels for {n} matrix rows")
    distinct = sorted(set(labels))
    if len(distinct) < 2:
        raise DomainError("evaluation needs at least 2 classes")
    for label in distinct:
        if labels.count(label) < 2:
            raise DomainError(f"class {label!r} has a single item; "
                              f"1-NN needs at least 2 per class")
    vals = matrix.values
    labels_arr = np.array(labels)
    same = labels_arr[:, None] == labels_arr[None, :]
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    inter_mean = float(vals[upper & ~same].mean())
    intra_means = {
        label: float(vals[upper & same & (labels_arr[:, None] == label)].mean())
        for label in distinct
    }
    masked = vals.copy()
    np.fill_diagonal(masked, np.inf)
    items: list[ItemResult] = []
    hits = 0
    for i in range(n):
        j = int(np.argmin(masked[i]))
        items.append(ItemResult(name=matrix.names[i], label=labels[i],
                                nearest=matrix.names[j], nearest_label=labels[j],
                                distance=float(vals[i, j])))
        hits += labels[j] == labels[i]
    return EvalReport(nn_accuracy=hits / n, inter_class_mean=inter_mean,
                      intra_class_mean=intra_means, items=items)


def format_report(report: EvalReport) -> str:
    lines = [f"1-NN accuracy (leave-one-out): {report.nn_accuracy:.4f}",
             f"mean inter-class distance: {report.inter_class_mean:.6g}"]
    for label in sorted(report.intra_class_mean):
        lines.append(f"mean intra-class distance [{label}]: "
                     f"{report.intra_class_mean[label]:.6g}")
    lines.append("")
    for it in report.items:
        marker = "" if it.label == it.nearest_label else "  <- mismatch"
        lines.append(f"{it.name} [{it.label}] -> {it.nearest} "
                     f"[{it.nearest_label}] d={it.distance:.6g}{marker}")
    return "\n".join(lines)
