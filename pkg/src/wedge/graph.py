"""Immutable simple graphs on bit masks, graph6 / edge-list I/O and structure queries.

Vertices are ``0 .. n-1``.  ``adj[v]`` is the neighbour set of ``v`` as an int
bit mask, and edges are indexed in lexicographic order of ``(u, v)`` with
``u < v`` so that edge sets can themselves be bit masks.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62
SEARCH_LIMIT = 12

INFINITY = math.inf


class GraphError(ValueError):
    """Invalid graph construction or query argument."""


class GraphFormatError(GraphError):
    """Malformed graph6 or edge-list input."""


class SizeLimitError(GraphError):
    """Graph too large for an exhaustive routine."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph.  Instances are immutable and hashable."""

    __slots__ = ("n", "adj", "edges", "_index", "_incident", "_edge_nbhd")

    def __init__(self, n: int, adj: Sequence[int]):
        # Trusted constructor: callers guarantee a symmetric, loop-free adj.
        self.n = n
        self.adj = tuple(adj)
        edges = []
        for u in range(n):
            for v in bits(self.adj[u] >> (u + 1)):
                edges.append((u, u + 1 + v))
        self.edges = tuple(edges)
        self._index = {e: i for i, e in enumerate(edges)}
        incident = [0] * n
        for i, (u, v) in enumerate(edges):
            incident[u] |= 1 << i
            incident[v] |= 1 << i
        self._incident = tuple(incident)
        self._edge_nbhd = tuple(incident[u] | incident[v] for u, v in edges)

    # basic accessors -------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def all_edges(self) -> int:
        return (1 << len(self.edges)) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._index[(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def incident_edges(self, v: int) -> int:
        """Mask of edge indices incident to ``v``."""
        return self._incident[v]

    def edge_neighborhood(self, i: int) -> int:
        """Mask of the closed edge neighbourhood of edge ``i``."""
        return self._edge_nbhd[i]

    def edge_mask(self, pairs: Iterable[tuple[int, int]]) -> int:
        m = 0
        for u, v in pairs:
            m |= 1 << self.edge_index(u, v)
        return m

    def edges_of(self, mask: int) -> list[tuple[int, int]]:
        return [self.edges[i] for i in bits(mask)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from vertex pairs, rejecting loops and duplicates."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if adj[u] >> v & 1:
            raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


# graph6 ------------------------------------------------------------------


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is accepted)."""
    if isinstance(text, str):
        try:
            data = text.strip().encode("ascii")
        except UnicodeEncodeError:
            raise GraphFormatError("graph6 must be ASCII") from None
    else:
        data = bytes(text).strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphFormatError("empty graph6 record")
    for b in data:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b!r} outside 63..126")
    n = data[0] - 63
    if n > MAX_ORDER:
        # 126 introduces the multi-byte size prefix
        raise GraphFormatError("graphs with more than 62 vertices are not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise GraphFormatError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    value = 0
    for b in body:
        value = value << 6 | (b - 63)
    value >>= nbytes * 6 - nbits
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, adj)


def _upper_triangle_code(n: int, adj: Sequence[int]) -> int:
    # graph6 bit order (0,1),(0,2),(1,2),(0,3),... as a big-endian integer
    code = 0
    for j in range(1, n):
        col = adj[j] & ((1 << j) - 1)
        for i in range(j):
            code = code << 1 | (col >> i & 1)
    return code


def _encode(n: int, code: int) -> bytes:
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    code <<= nbytes * 6 - nbits
    out = bytearray([n + 63])
    for k in range(nbytes - 1, -1, -1):
        out.append((code >> (6 * k) & 63) + 63)
    return bytes(out)


def serialize_graph6(g: Graph) -> bytes:
    return _encode(g.n, _upper_triangle_code(g.n, g.adj))


def to_graph6(g: Graph) -> str:
    return serialize_graph6(g).decode("ascii")


# plain edge list ------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    tokens = text.split()
    try:
        nums = [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError("edge list must contain integers only") from None
    if len(nums) < 2:
        raise GraphFormatError("edge list header 'n m' missing")
    n, m = nums[0], nums[1]
    rest = nums[2:]
    if m < 0 or len(rest) != 2 * m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rest) / 2:g}")
    try:
        return from_edge_list(n, zip(rest[0::2], rest[1::2]))
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# connectivity ----------------------------------------------------------------


def component_mask(g: Graph, start: int, within: int | None = None) -> int:
    """Vertices reachable from ``start`` inside the vertex mask ``within``."""
    if within is None:
        within = g.all_vertices
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    if within is None:
        within = g.all_vertices
    comps = []
    rest = within
    while rest:
        v = (rest & -rest).bit_length() - 1
        c = component_mask(g, v, within)
        comps.append(c)
        rest &= ~c
    return comps


def connected_components(g: Graph) -> list[set[int]]:
    return [set(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    # the null graph counts as connected
    return g.n == 0 or component_mask(g, 0) == g.all_vertices


def cut_vertices(g: Graph) -> set[int]:
    """Vertices whose removal increases the number of components."""
    base = len(component_masks(g))
    full = g.all_vertices
    out = set()
    for v in range(g.n):
        if g.adj[v] and len(component_masks(g, full & ~(1 << v))) > base:
            out.add(v)
    return out


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def blocks(g: Graph) -> list[int]:
    """Vertex masks of the biconnected blocks (bridges count as blocks)."""
    # Hopcroft-Tarjan with an explicit stack of edges
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(bits(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = 0
                    while True:
                        a, b = edge_stack.pop()
                        block |= 1 << a | 1 << b
                        if (a, b) == (parent, v):
                            break
                    out.append(block)
    return out


# bipartiteness ---------------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]

    def __post_init__(self):
        if self.side_a & self.side_b:
            raise GraphError("bipartition sides overlap")
        if len(self.side_a) > len(self.side_b):
            a, b = self.side_a, self.side_b
            object.__setattr__(self, "side_a", b)
            object.__setattr__(self, "side_b", a)

    @property
    def balanced(self) -> bool:
        return len(self.side_a) == len(self.side_b)

    def validate(self, g: Graph) -> None:
        if self.side_a | self.side_b != frozenset(range(g.n)):
            raise GraphError("bipartition does not cover the vertex set")
        a = mask_of(self.side_a)
        b = mask_of(self.side_b)
        for v in self.side_a:
            if g.adj[v] & a:
                raise GraphError(f"edge inside side A at vertex {v}")
        for v in self.side_b:
            if g.adj[v] & b:
                raise GraphError(f"edge inside side B at vertex {v}")


def two_coloring(g: Graph) -> list[int] | None:
    """Colour each component with its smallest vertex on colour 0."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def bipartition(g: Graph) -> Bipartition | None:
    """Normalised 2-colouring, or None for non-bipartite graphs.

    Components are oriented one at a time (in order of smallest vertex) so that
    each contributes its smaller class to A; on a tie the class holding the
    component's smallest vertex goes to A.
    """
    color = two_coloring(g)
    if color is None:
        return None
    side_a: set[int] = set()
    side_b: set[int] = set()
    for comp in component_masks(g):
        first = [v for v in bits(comp) if color[v] == 0]
        second = [v for v in bits(comp) if color[v] == 1]
        if len(first) <= len(second):
            side_a.update(first)
            side_b.update(second)
        else:
            side_a.update(second)
            side_b.update(first)
    return Bipartition(frozenset(side_a), frozenset(side_b))


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


# cycles ------------------------------------------------------------------------


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] >> (u + 1)):
            v += u + 1
            for w in bits((adj[u] & adj[v]) >> (v + 1)):
                out.append((u, v, v + 1 + w))
    return out


def triangle_count(g: Graph, stop_after: int | None = None) -> int:
    count = 0
    adj = g.adj
    for u in range(g.n):
        for v in bits(adj[u] >> (u + 1)):
            v += u + 1
            count += ((adj[u] & adj[v]) >> (v + 1)).bit_count()
            if stop_after is not None and count > stop_after:
                return count
    return count


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = INFINITY
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in bits(g.adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def support_vertices(g: Graph) -> set[int]:
    """Vertices adjacent to a leaf."""
    out = set()
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            out.add(g.adj[v].bit_length() - 1)
    return out


def leaves(g: Graph) -> set[int]:
    return {v for v in range(g.n) if g.adj[v].bit_count() == 1}


# derived graphs ------------------------------------------------------------------


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph induced on ``keep``; new vertex ``i`` is old vertex ``keep[i]``."""
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        a = 0
        for w in bits(g.adj[v]):
            if w in pos:
                a |= 1 << pos[w]
        adj.append(a)
    return Graph(len(keep), adj)


def induced_delete(g: Graph, remove: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete a vertex set; returns the new graph and the old -> new index map."""
    drop = set(remove)
    for v in drop:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    keep = [v for v in range(g.n) if v not in drop]
    return induced_subgraph(g, keep), {v: i for i, v in enumerate(keep)}


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_delete(g, [v])[0]


def identify_vertices(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` with ``v1`` and ``v2`` merged.

    ``g1`` keeps its labels; the vertices of ``g2`` other than ``v2`` follow in
    their original order, and ``v2`` becomes ``v1``.
    """
    if not (0 <= v1 < g1.n and 0 <= v2 < g2.n):
        raise GraphError("identified vertex out of range")
    relabel = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == v2:
            relabel[v] = v1
        else:
            relabel[v] = nxt
            nxt += 1
    pairs = list(g1.edges) + [(relabel[u], relabel[v]) for u, v in g2.edges]
    return from_edge_list(g1.n + g2.n - 1, pairs)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return from_edge_list(g1.n + g2.n, list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges])


def remove_edges(g: Graph, mask: int) -> Graph:
    """Same vertex set, edges in ``mask`` removed (isolated vertices stay)."""
    adj = list(g.adj)
    for i in bits(mask):
        u, v = g.edges[i]
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``g``'s vertex ``order[i]``."""
    return induced_subgraph(g, order)


# canonical form ------------------------------------------------------------------


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; cell splits are ordered by invariant counts."""
    changed = True
    while changed:
        changed = False
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        cells = out
    return cells


def _code_for_order(n: int, adj: Sequence[int], order: Sequence[int]) -> int:
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    new_adj = [0] * n
    for i, v in enumerate(order):
        a = 0
        for w in bits(adj[v]):
            a |= 1 << pos[w]
        new_adj[i] = a
    return _upper_triangle_code(n, new_adj)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order that yields the canonical graph6 string.

    Individualisation-refinement search from the degree partition; the code
    minimised is the graph6 bit string, so the result is the smallest graph6
    encoding among orders compatible with the refined partitions.  Twin
    vertices inside the branching cell are explored only once, because swapping
    twins is an automorphism fixing the partition.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return []
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(adj[v].bit_count(), []).append(v)
    cells = _refine(adj, [by_deg[d] for d in sorted(by_deg)])
    best_code = -1
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            order = [c[0] for c in cells]
            code = _code_for_order(n, adj, order)
            if best_code < 0 or code < best_code:
                best_code = code
                best_order = order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            bv = 1 << v
            if any((adj[v] & ~(1 << u)) == (adj[u] & ~bv) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(cells)
    return best_order


def canonical_form(g: Graph) -> bytes:
    if g.n > SEARCH_LIMIT:
        raise SizeLimitError(f"canonical form limited to n <= {SEARCH_LIMIT}")
    order = canonical_order(g)
    return _encode(g.n, _code_for_order(g.n, g.adj, order))


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# outerplanarity ------------------------------------------------------------------


def _block_is_outerplanar(g: Graph, block: int) -> bool:
    verts = list(bits(block))
    k = len(verts)
    if k <= 3:
        return True
    sub = induced_subgraph(g, verts)
    if sub.m > 2 * k - 3:
        return False
    adj = sub.adj
    full = (1 << k) - 1
    # an outerplanar block is a Hamiltonian cycle plus non-crossing chords
    path = [0]

    def chords_ok(cycle: list[int]) -> bool:
        pos = [0] * k
        for i, v in enumerate(cycle):
            pos[v] = i
        chords = []
        for u, v in sub.edges:
            a, b = sorted((pos[u], pos[v]))
            if b - a not in (1, k - 1):
                chords.append((a, b))
        for i, (a, b) in enumerate(chords):
            for c, d in chords[i + 1:]:
                if a < c < b < d or c < a < d < b:
                    return False
        return True

    def extend(used: int) -> bool:
        last = path[-1]
        if used == full:
            return bool(adj[last] & 1) and chords_ok(path)
        for w in bits(adj[last] & ~used):
            # fix orientation: second vertex smaller than the last one
            if len(path) == k - 1 and path[1] > w:
                continue
            path.append(w)
            if extend(used | 1 << w):
                return True
            path.pop()
        return False

    return extend(1)


def is_outerplanar(g: Graph) -> bool:
    """Outerplanarity via each block: Hamiltonian outer cycle with non-crossing chords."""
    if g.n > SEARCH_LIMIT:
        raise SizeLimitError(f"outerplanarity test limited to n <= {SEARCH_LIMIT}")
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False
    return all(_block_is_outerplanar(g, b) for b in blocks(g))


def _contains_subgraph(g: Graph, pattern: Graph) -> bool:
    """Brute-force (not necessarily induced) subgraph containment."""
    k = pattern.n
    if k > g.n or pattern.m > g.m:
        return False
    pdeg = sorted(pattern.degrees(), reverse=True)
    gdeg = sorted(g.degrees(), reverse=True)
    if any(a > b for a, b in zip(pdeg, gdeg)):
        return False
    order = sorted(range(k), key=lambda v: -pattern.degree(v))
    image = [-1] * k

    def place(i: int, used: int) -> bool:
        if i == k:
            return True
        p = order[i]
        for v in range(g.n):
            if used >> v & 1 or g.degree(v) < pattern.degree(p):
                continue
            ok = True
            for q in bits(pattern.adj[p]):
                if image[q] >= 0 and not g.adj[v] >> image[q] & 1:
                    ok = False
                    break
            if ok:
                image[p] = v
                if place(i + 1, used | 1 << v):
                    return True
                image[p] = -1
        return False

    return place(0, 0)


def _contract(g: Graph, u: int, v: int) -> Graph:
    merged = (g.adj[u] | g.adj[v]) & ~(1 << u | 1 << v)
    keep = [w for w in range(g.n) if w != v]
    pos = {w: i for i, w in enumerate(keep)}
    adj = []
    for w in keep:
        if w == u:
            a = merged
        else:
            a = g.adj[w]
            if a >> v & 1:
                a = (a & ~(1 << v)) | 1 << u
        adj.append(mask_of(pos[x] for x in bits(a)))
    return Graph(len(keep), adj)


def has_minor(g: Graph, pattern: Graph) -> bool:
    """Exhaustive minor test: some contraction of ``g`` contains ``pattern`` as a subgraph."""
    if g.n > SEARCH_LIMIT:
        raise SizeLimitError(f"minor search limited to n <= {SEARCH_LIMIT}")
    # leaves never matter for a pattern of minimum degree >= 2
    min_deg = min(min(pattern.degrees(), default=0), 2)
    seen: set[bytes] = set()
    stack = [g]
    while stack:
        h = stack.pop()
        while True:
            low = [v for v in range(h.n) if h.degree(v) < min_deg]
            if not low:
                break
            h = induced_delete(h, low)[0]
        if h.n < pattern.n or h.m < pattern.m:
            continue
        key = canonical_form(h)
        if key in seen:
            continue
        seen.add(key)
        if _contains_subgraph(h, pattern):
            return True
        for u, v in h.edges:
            stack.append(_contract(h, u, v))
    return False


def has_outerplanar_obstruction(g: Graph) -> bool:
    """True when ``g`` has a K4 or K_{2,3} minor."""
    k4 = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    k23 = from_edge_list(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    return has_minor(g, k4) or has_minor(g, k23)
