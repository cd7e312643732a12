"""Exact matching and edge-domination oracles.

Everything here is exhaustive and meant for small graphs.  Edge sets are bit
masks over ``Graph.edges``; the public functions accept either a raw mask or an
:class:`EdgeSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .graph import Graph, GraphError, SizeLimitError, bits, remove_edges

MATCHING_LIMIT = 14
EDS_LIMIT = 12


@dataclass(frozen=True)
class EdgeSet:
    graph: Graph
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.graph.m:
            raise GraphError("edge set refers to edges outside its graph")

    @classmethod
    def of(cls, g: Graph, pairs: Iterable[tuple[int, int]]) -> "EdgeSet":
        return cls(g, g.edge_mask(pairs))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.graph.edges_of(self.bits))

    def __contains__(self, edge: tuple[int, int]) -> bool:
        u, v = edge
        return bool(self.bits >> self.graph.edge_index(u, v) & 1)

    def indices(self) -> list[int]:
        return list(bits(self.bits))


EdgeArg = Union[EdgeSet, int]


def _mask(g: Graph, f: EdgeArg) -> int:
    if isinstance(f, EdgeSet):
        if f.graph is not g and f.graph != g:
            raise GraphError("edge set belongs to a different graph")
        return f.bits
    if f < 0 or f >> g.m:
        raise GraphError("edge mask refers to edges outside the graph")
    return f


def _check_order(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise SizeLimitError(f"exhaustive routine limited to n <= {limit}, got {g.n}")


# neighbourhoods --------------------------------------------------------------


def _nbhd(g: Graph, mask: int) -> int:
    out = 0
    for i in bits(mask):
        out |= g.edge_neighborhood(i)
    return out


def closed_edge_neighborhood(g: Graph, f: EdgeArg) -> EdgeSet:
    return EdgeSet(g, _nbhd(g, _mask(g, f)))


def is_matching(g: Graph, f: EdgeArg) -> bool:
    seen = 0
    for i in bits(_mask(g, f)):
        u, v = g.edges[i]
        pair = 1 << u | 1 << v
        if seen & pair:
            return False
        seen |= pair
    return True


def saturated(g: Graph, f: EdgeArg) -> int:
    """Vertex mask of endpoints of ``f``."""
    out = 0
    for i in bits(_mask(g, f)):
        u, v = g.edges[i]
        out |= 1 << u | 1 << v
    return out


def is_maximal_matching(g: Graph, f: EdgeArg) -> bool:
    mask = _mask(g, f)
    if not is_matching(g, mask):
        return False
    return _nbhd(g, mask) == g.all_edges


def remove_edge_neighborhood(g: Graph, m: EdgeArg) -> Graph:
    """``g`` minus every edge dominated by the matching ``m``; no vertex is removed."""
    mask = _mask(g, m)
    if not is_matching(g, mask):
        raise GraphError("remove_edge_neighborhood expects a matching")
    return remove_edges(g, _nbhd(g, mask))


# matchings -------------------------------------------------------------------


def _first_free_edge(g: Graph, free: int) -> tuple[int, int] | None:
    for u in bits(free):
        nb = g.adj[u] & free
        if nb:
            return u, (nb & -nb).bit_length() - 1
    return None


def _maximal_sizes(g: Graph, free: int, memo: dict[int, dict[int, int]]) -> dict[int, int]:
    """Sizes of maximal matchings of ``g[free]`` mapped to one witness mask."""
    hit = memo.get(free)
    if hit is not None:
        return hit
    first = _first_free_edge(g, free)
    if first is None:
        out = {0: 0}
    else:
        u, v = first
        out = {}
        # every maximal matching covers u or v
        branch = [(u, w) for w in bits(g.adj[u] & free)]
        branch += [(v, w) for w in bits(g.adj[v] & free) if w != u]
        for a, b in branch:
            e = 1 << g.edge_index(a, b)
            for size, wit in _maximal_sizes(g, free & ~(1 << a | 1 << b), memo).items():
                out.setdefault(size + 1, wit | e)
    memo[free] = out
    return out


def enumerate_maximal_matchings(g: Graph, early_exit: bool = False) -> dict[int, EdgeSet]:
    """Map each maximal-matching size to one witness.

    With ``early_exit`` the search stops once two distinct sizes are known.
    """
    _check_order(g, MATCHING_LIMIT)
    memo: dict[int, dict[int, int]] = {}
    free = g.all_vertices
    first = _first_free_edge(g, free)
    if first is None:
        return {0: EdgeSet(g, 0)}
    u, v = first
    found: dict[int, int] = {}
    branch = [(u, w) for w in bits(g.adj[u])] + [(v, w) for w in bits(g.adj[v]) if w != u]
    for a, b in branch:
        e = 1 << g.edge_index(a, b)
        for size, wit in _maximal_sizes(g, free & ~(1 << a | 1 << b), memo).items():
            found.setdefault(size + 1, wit | e)
        if early_exit and len(found) > 1:
            break
    return {k: EdgeSet(g, found[k]) for k in sorted(found)}


def maximal_matching_sizes(g: Graph) -> set[int]:
    return set(enumerate_maximal_matchings(g))


def iter_maximal_matchings(g: Graph) -> list[int]:
    """Every maximal matching as an edge mask, sorted."""
    _check_order(g, MATCHING_LIMIT)
    memo: dict[int, frozenset[int]] = {}

    def rec(free: int) -> frozenset[int]:
        hit = memo.get(free)
        if hit is not None:
            return hit
        first = _first_free_edge(g, free)
        if first is None:
            out = frozenset([0])
        else:
            u, v = first
            acc = set()
            branch = [(u, w) for w in bits(g.adj[u] & free)]
            branch += [(v, w) for w in bits(g.adj[v] & free) if w != u]
            for a, b in branch:
                e = 1 << g.edge_index(a, b)
                acc.update(m | e for m in rec(free & ~(1 << a | 1 << b)))
            out = frozenset(acc)
        memo[free] = out
        return out

    return sorted(rec(g.all_vertices))


def iter_matchings(g: Graph) -> Iterator[int]:
    """Every matching (the empty one included) as an edge mask."""
    _check_order(g, MATCHING_LIMIT)
    m = g.m

    def rec(i: int, used: int, chosen: int) -> Iterator[int]:
        if i == m:
            yield chosen
            return
        yield from rec(i + 1, used, chosen)
        u, v = g.edges[i]
        if not used >> u & 1 and not used >> v & 1:
            yield from rec(i + 1, used | 1 << u | 1 << v, chosen | 1 << i)

    yield from rec(0, 0, 0)


def matching_number(g: Graph) -> int:
    _check_order(g, MATCHING_LIMIT)
    memo: dict[int, int] = {}

    def rec(free: int) -> int:
        hit = memo.get(free)
        if hit is not None:
            return hit
        first = _first_free_edge(g, free)
        if first is None:
            best = 0
        else:
            u = first[0]
            best = rec(free & ~(1 << u))
            for w in bits(g.adj[u] & free):
                best = max(best, 1 + rec(free & ~(1 << u | 1 << w)))
        memo[free] = best
        return best

    return rec(g.all_vertices)


def is_equimatchable(g: Graph) -> bool:
    return len(enumerate_maximal_matchings(g, early_exit=True)) == 1


def is_randomly_matchable(g: Graph) -> bool:
    if g.n % 2:
        return False
    return is_equimatchable(g) and matching_number(g) == g.n // 2


# edge domination ----------------------------------------------------------------


def is_edge_dominating(g: Graph, f: EdgeArg) -> bool:
    return _nbhd(g, _mask(g, f)) == g.all_edges


def _has_private_neighbors(g: Graph, mask: int) -> bool:
    for i in bits(mask):
        others = _nbhd(g, mask & ~(1 << i))
        if not g.edge_neighborhood(i) & ~others:
            return False
    return True


def private_neighbors(g: Graph, f: EdgeArg, edge: int) -> EdgeSet:
    """Private edge neighbours of edge index ``edge`` with respect to ``f``."""
    mask = _mask(g, f)
    if not mask >> edge & 1:
        raise GraphError(f"edge {g.edges[edge]} is not in the set")
    return EdgeSet(g, g.edge_neighborhood(edge) & ~_nbhd(g, mask & ~(1 << edge)))


def is_minimal_eds(g: Graph, f: EdgeArg) -> bool:
    mask = _mask(g, f)
    return is_edge_dominating(g, mask) and _has_private_neighbors(g, mask)


@dataclass(frozen=True)
class EdsSummary:
    min_size: int
    max_size: int
    witness_min: EdgeSet
    witness_max: EdgeSet
    exhausted: bool

    @property
    def sizes_agree(self) -> bool:
        return self.min_size == self.max_size


def _minimal_eds_search(g: Graph, visit, stop) -> bool:
    """Depth-first search over inclusion-minimal edge dominating sets.

    ``visit(mask)`` is called once per minimal set; ``stop()`` is polled after
    each visit.  Returns False if the search was cut short.
    """
    full = g.all_edges
    nb = [g.edge_neighborhood(i) for i in range(g.m)]

    def private_ok(chosen: int) -> bool:
        for i in bits(chosen):
            others = 0
            for j in bits(chosen & ~(1 << i)):
                others |= nb[j]
            if not nb[i] & ~others:
                return False
        return True

    def rec(chosen: int, dominated: int, excluded: int) -> bool:
        if dominated == full:
            if is_minimal_eds(g, chosen):
                visit(chosen)
                if stop():
                    return False
            return True
        # undominated edge with the fewest admissible dominators
        best = -1
        best_cands = 0
        best_count = 1 << 30
        for e in bits(full & ~dominated):
            cands = nb[e] & ~excluded
            c = cands.bit_count()
            if c < best_count:
                best, best_cands, best_count = e, cands, c
                if c <= 1:
                    break
        if best_count == 0:
            return True
        tried = 0
        for f in bits(best_cands):
            new = chosen | 1 << f
            if private_ok(new):
                if not rec(new, dominated | nb[f], excluded | tried):
                    return False
            tried |= 1 << f
        return True

    return rec(0, 0, 0)


def enumerate_minimal_eds(g: Graph, early_exit: bool = False) -> EdsSummary:
    """Smallest and largest inclusion-minimal edge dominating sets."""
    _check_order(g, EDS_LIMIT)
    by_size: dict[int, int] = {}

    def visit(mask: int) -> None:
        by_size.setdefault(mask.bit_count(), mask)

    def stop() -> bool:
        return early_exit and len(by_size) > 1

    exhausted = _minimal_eds_search(g, visit, stop)
    lo, hi = min(by_size), max(by_size)
    return EdsSummary(lo, hi, EdgeSet(g, by_size[lo]), EdgeSet(g, by_size[hi]), exhausted)


def all_minimal_eds(g: Graph) -> list[int]:
    """Every inclusion-minimal edge dominating set as a mask, sorted."""
    _check_order(g, EDS_LIMIT)
    out: list[int] = []
    _minimal_eds_search(g, out.append, lambda: False)
    return sorted(out)


def edge_domination_number(g: Graph) -> int:
    return enumerate_minimal_eds(g).min_size


def is_well_edge_dominated(g: Graph) -> bool:
    _check_order(g, EDS_LIMIT)
    # every maximal matching is a minimal edge dominating set
    if not is_equimatchable(g):
        return False
    return enumerate_minimal_eds(g, early_exit=True).sizes_agree
