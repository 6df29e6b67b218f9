"""Parsers for edge lists, ASCII OFF meshes, and corpus manifests.

Parsers are pure functions of their input text (a str or a readable text
stream) and raise InputError with a line/row number on malformed input.
Only connectivity matters downstream, so OFF geometry is validated and
discarded and meshes reduce to their 1-skeleton.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .graph import Graph, build_graph


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    label: str


@dataclass
class CorpusManifest:
    """Ordered (path, label) entries driving batch runs."""

    entries: list[ManifestEntry]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def labels(self) -> list[str]:
        return [e.label for e in self.entries]

    def paths(self) -> list[str]:
        return [e.path for e in self.entries]


def _line_stream(source):
    return io.StringIO(source) if isinstance(source, str) else source


def parse_edge_list(source) -> Graph:
    """Graph from "token token" lines.

    Tokens are arbitrary strings mapped to dense vertex ids in order of first
    appearance. Blank lines and lines starting with '#' are ignored. Empty
    input yields the empty graph.
    """
    ids: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(_line_stream(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: expected 2 vertex tokens, got {len(tokens)}")
        a, b = tokens
        if a == b:
            raise InputError(f"line {lineno}: self-loop edge ({a!r}, {b!r})")
        ia = ids.setdefault(a, len(ids))
        ib = ids.setdefault(b, len(ids))
        pairs.append((ia, ib))
    return build_graph(len(ids), pairs)


def parse_off(source) -> Graph:
    """1-skeleton of an ASCII OFF mesh.

    The header line must be exactly "OFF", followed by a counts line
    "nv nf ne" (ne is ignored). Coordinates are checked to be three numbers
    and discarded. Each face contributes the cycle of edges between its
    consecutive vertices; shared edges deduplicate. Variants carrying extra
    per-vertex or per-face data are rejected, naming the unexpected token.
    """
    lines = [(i, raw.strip()) for i, raw in enumerate(_line_stream(source), start=1)]
    content = [(i, line.split()) for i, line in lines if line and not line.startswith("#")]
    pos = 0

    def next_line(what: str):
        nonlocal pos
        if pos >= len(content):
            last = lines[-1][0] if lines else 0
            raise InputError(f"line {last}: unexpected end of file, expected {what}")
        item = content[pos]
        pos += 1
        return item

    lineno, tokens = next_line("header 'OFF'")
    if tokens != ["OFF"]:
        raise InputError(f"line {lineno}: expected header 'OFF', got {' '.join(tokens)!r}")
    lineno, tokens = next_line("counts 'nv nf ne'")
    if len(tokens) != 3:
        raise InputError(f"line {lineno}: expected 3 counts (vertices faces edges), "
                         f"got {len(tokens)} tokens")
    try:
        nv, nf, _ne = (int(t) for t in tokens)
    except ValueError:
        raise InputError(f"line {lineno}: counts must be integers, got {' '.join(tokens)!r}") from None
    if nv < 0 or nf < 0:
        raise InputError(f"line {lineno}: counts must be nonnegative")

    for _ in range(nv):
        lineno, tokens = next_line("a vertex coordinate line")
        if len(tokens) > 3:
            raise InputError(f"line {lineno}: vertex line has unexpected token {tokens[3]!r} "
                             f"(only plain 'x y z' OFF is supported)")
        if len(tokens) < 3:
            raise InputError(f"line {lineno}: expected 3 coordinates, got {len(tokens)}")
        for t in tokens:
            try:
                float(t)
            except ValueError:
                raise InputError(f"line {lineno}: bad coordinate {t!r}") from None

    edges: list[tuple[int, int]] = []
    for _ in range(nf):
        lineno, tokens = next_line("a face line")
        try:
            k = int(tokens[0])
        except ValueError:
            raise InputError(f"line {lineno}: face vertex count must be an integer, "
                             f"got {tokens[0]!r}") from None
        if k < 3:
            raise InputError(f"line {lineno}: face needs at least 3 vertices, got {k}")
        if len(tokens) > k + 1:
            raise InputError(f"line {lineno}: face line has unexpected token {tokens[k + 1]!r}")
        if len(tokens) < k + 1:
            raise InputError(f"line {lineno}: face lists {len(tokens) - 1} of {k} vertices")
        try:
            face = [int(t) for t in tokens[1:]]
        except ValueError:
            raise InputError(f"line {lineno}: face indices must be integers") from None
        for idx in face:
            if not 0 <= idx < nv:
                raise InputError(f"line {lineno}: face index {idx} out of range "
                                 f"(mesh has {nv} vertices)")
        for a, b in zip(face, face[1:] + face[:1]):
            if a == b:
                raise InputError(f"line {lineno}: degenerate face repeats vertex {a}")
            edges.append((a, b))

    if pos < len(content):
        lineno = content[pos][0]
        raise InputError(f"line {lineno}: unexpected content after {nf} faces")
    return build_graph(nv, edges)


def load_manifest(source) -> CorpusManifest:
    """CSV manifest "path,label"; a literal "path,label" header row is skipped."""
    reader = csv.reader(_line_stream(source))
    entries: list[ManifestEntry] = []
    seen: set[str] = set()
    for rowno, row in enumerate(reader, start=1):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if rowno == 1 and [c.strip() for c in row] == ["path", "label"]:
            continue
        if len(row) != 2:
            raise InputError(f"manifest row {rowno}: expected 'path,label', "
                             f"got {len(row)} fields")
        path, label = row[0].strip(), row[1].strip()
        if not path:
            raise InputError(f"manifest row {rowno}: empty path")
        if not label:
            raise InputError(f"manifest row {rowno}: empty label")
        if path in seen:
            raise InputError(f"manifest row {rowno}: duplicate path {path!r}")
        seen.add(path)
        entries.append(ManifestEntry(path, label))
    return CorpusManifest(entries)


def load_graph(path, fmt: str | None = None) -> Graph:
    """Read a graph file; fmt is 'edgelist' or 'off', default by .off extension."""
    p = Path(path)
    if fmt is None:
        fmt = "off" if p.suffix.lower() == ".off" else "edgelist"
    if fmt not in ("edgelist", "off"):
        raise InputError(f"unknown format {fmt!r} (expected 'edgelist' or 'off')")
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    try:
        return parse_off(text) if fmt == "off" else parse_edge_list(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from exc
