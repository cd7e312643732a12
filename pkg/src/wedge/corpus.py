"""Small-graph corpora: native generation, graph6 ingestion, and polygon dissections."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import graph as gr
from .graph import Graph, GraphError, SizeLimitError, bits

NATIVE_LIMIT = 8
# classes closed under vertex deletion prune the search tree enough to go further
HEREDITARY_LIMIT = 10
FILE_LIMIT = 12

KNOWN_FILTERS = (
    "connected",
    "biconnected",
    "bipartite",
    "outerplanar",
    "exactly-one-triangle",
    "triangle-free",
)
_GIRTH = re.compile(r"girth>=(\d+)$")


def _check_filters(filters: Iterable[str]) -> None:
    for f in filters:
        if f not in KNOWN_FILTERS and not _GIRTH.match(f):
            raise GraphError(f"unknown corpus filter {f!r}")


@dataclass(frozen=True)
class CorpusSpec:
    n: int
    source: str = "native"  # or "graph6-file"
    filters: frozenset[str] = field(default_factory=frozenset)
    path: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "filters", frozenset(self.filters))
        _check_filters(self.filters)
        if self.source == "native":
            limit = HEREDITARY_LIMIT if _hereditary_key(self.filters) else NATIVE_LIMIT
            if not 0 <= self.n <= limit:
                raise SizeLimitError(f"native corpus for these filters limited to n <= {limit}")
        elif self.source == "graph6-file":
            if self.path is None:
                raise GraphError("graph6-file corpus needs a path")
            if not 0 <= self.n <= FILE_LIMIT:
                raise SizeLimitError(f"file corpus limited to n <= {FILE_LIMIT}")
        else:
            raise GraphError(f"unknown corpus source {self.source!r}")


# filters --------------------------------------------------------------------------


def _hereditary_key(filters: frozenset[str]) -> tuple[str, ...]:
    """Filters whose classes are closed under vertex deletion."""
    key = []
    for f in sorted(filters):
        if f in ("bipartite", "outerplanar", "triangle-free") or _GIRTH.match(f):
            key.append(f)
        elif f == "exactly-one-triangle":
            key.append("at-most-one-triangle")
    return tuple(key)


def _hereditary_ok(g: Graph, key: tuple[str, ...]) -> bool:
    for f in key:
        if f == "bipartite":
            if not gr.is_bipartite(g):
                return False
        elif f == "triangle-free":
            if gr.triangle_count(g, stop_after=0):
                return False
        elif f == "at-most-one-triangle":
            if gr.triangle_count(g, stop_after=1) > 1:
                return False
        elif f == "outerplanar":
            if not gr.is_outerplanar(g):
                return False
        else:
            if gr.girth(g) < int(_GIRTH.match(f).group(1)):
                return False
    return True


def passes(g: Graph, filters: Iterable[str]) -> bool:
    for f in filters:
        if f == "connected":
            ok = gr.is_connected(g)
        elif f == "biconnected":
            ok = gr.is_biconnected(g)
        elif f == "bipartite":
            ok = gr.is_bipartite(g)
        elif f == "outerplanar":
            ok = gr.is_outerplanar(g)
        elif f == "exactly-one-triangle":
            ok = gr.triangle_count(g, stop_after=1) == 1
        elif f == "triangle-free":
            ok = gr.triangle_count(g, stop_after=0) == 0
        else:
            m = _GIRTH.match(f)
            if m is None:
                raise GraphError(f"unknown corpus filter {f!r}")
            ok = gr.girth(g) >= int(m.group(1))
        if not ok:
            return False
    return True


# native generation ----------------------------------------------------------------


def _accept(adj: list[int], n: int, connected: bool) -> bool:
    """Exact pruning of the vertex-augmentation tree.

    Every graph in a hereditary class has an admissible deletable vertex (any
    vertex, or a non-cut vertex when connectivity is required).  We only keep
    children whose new vertex has the smallest degree among admissible ones,
    which still produces each class member from at least one parent.
    """
    new = n - 1
    d = adj[new].bit_count()
    if connected and d == 0:
        return False
    for v in range(new):
        if adj[v].bit_count() < d:
            if not connected:
                return False
            g = Graph(n, adj)
            if len(gr.component_masks(g, g.all_vertices & ~(1 << v))) == 1:
                return False
    return True


@lru_cache(maxsize=None)
def _level(n: int, connected: bool, key: tuple[str, ...]) -> tuple[Graph, ...]:
    """Canonical representatives of the class at order ``n``, sorted by graph6."""
    if n == 0:
        return () if connected else (Graph(0, []),)
    if n == 1:
        return (Graph(1, [0]),)
    reps: dict[bytes, Graph] = {}
    new_bit = 1 << (n - 1)
    for parent in _level(n - 1, connected, key):
        base = list(parent.adj) + [0]
        for s in range(1 if connected else 0, 1 << (n - 1)):
            adj = base[:]
            adj[n - 1] = s
            for v in bits(s):
                adj[v] |= new_bit
            if not _accept(adj, n, connected):
                continue
            child = Graph(n, adj)
            if key and not _hereditary_ok(child, key):
                continue
            form = gr.canonical_form(child)
            if form not in reps:
                reps[form] = child
    return tuple(gr.parse_graph6(form) for form in sorted(reps))


def _read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield gr.parse_graph6(line)
            except GraphError as exc:
                raise gr.GraphFormatError(f"{path}:{lineno}: {exc}") from None


def enumerate_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    """Every isomorphism class of order ``spec.n`` passing the filters, once each."""
    filters = spec.filters
    if spec.source == "native":
        connected = bool(filters & {"connected", "biconnected"})
        key = _hereditary_key(filters)
        for g in _level(spec.n, connected, key):
            if passes(g, filters):
                yield g
        return
    seen: set[bytes] = set()
    for g in _read_graph6_file(spec.path):
        if g.n != spec.n or not passes(g, filters):
            continue
        form = gr.canonical_form(g)
        if form in seen:
            continue
        seen.add(form)
        yield gr.parse_graph6(form)


# biconnected outerplanar graphs -------------------------------------------------------


def _dissections(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    chords = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]

    def crosses(a: tuple[int, int], b: tuple[int, int]) -> bool:
        (i, j), (k, l) = a, b
        return i < k < j < l or k < i < l < j

    def rec(start: int, chosen: list[tuple[int, int]]) -> Iterator[tuple[tuple[int, int], ...]]:
        yield tuple(chosen)
        for idx in range(start, len(chords)):
            c = chords[idx]
            if all(not crosses(c, d) for d in chosen):
                chosen.append(c)
                yield from rec(idx + 1, chosen)
                chosen.pop()

    yield from rec(0, [])


def _dihedral_key(n: int, chords: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    best = None
    for r in range(n):
        for flip in (False, True):
            img = []
            for i, j in chords:
                a, b = ((r - i) % n, (r - j) % n) if flip else ((i + r) % n, (j + r) % n)
                img.append((a, b) if a < b else (b, a))
            img.sort()
            t = tuple(img)
            if best is None or t < best:
                best = t
    return best


def biconnected_outerplanar_graphs(n: int) -> list[Graph]:
    """All 2-connected outerplanar graphs of order ``n``, one per isomorphism class.

    Such a graph is its unique Hamiltonian outer cycle plus non-crossing chords,
    so isomorphism classes are polygon dissections up to rotation and reflection.
    """
    if not 3 <= n <= FILE_LIMIT:
        raise SizeLimitError(f"dissection generator supports 3 <= n <= {FILE_LIMIT}")
    keys = {_dihedral_key(n, d) for d in _dissections(n)}
    cycle = [(i, (i + 1) % n) for i in range(n)]
    graphs = [gr.from_edge_list(n, cycle + list(k)) for k in keys]
    return sorted((gr.canonical_graph(g) for g in graphs), key=gr.serialize_graph6)


def corpus_for(
    orders: Iterable[int],
    filters: Iterable[str],
    corpus_file: str | None = None,
) -> list[Graph]:
    """Graphs of the given orders; orders beyond the native range come from ``corpus_file``."""
    out: list[Graph] = []
    filters = frozenset(filters)
    for n in orders:
        limit = HEREDITARY_LIMIT if _hereditary_key(filters) else NATIVE_LIMIT
        if n <= limit:
            out.extend(enumerate_graphs(CorpusSpec(n, "native", filters)))
        elif corpus_file is not None:
            out.extend(enumerate_graphs(CorpusSpec(n, "graph6-file", filters, corpus_file)))
        else:
            raise SizeLimitError(f"order {n} needs --corpus FILE")
    return out


def count_by(graphs: Iterable[Graph], key: Callable[[Graph], object]) -> dict[object, int]:
    out: dict[object, int] = {}
    for g in graphs:
        k = key(g)
        out[k] = out.get(k, 0) + 1
    return out
