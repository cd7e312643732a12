"""Named graphs, the two one-triangle families, and detachable vertices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import graph as gr
from .graph import Bipartition, Graph, GraphError, from_edge_list
from .matching import edge_domination_number, is_well_edge_dominated


class PreconditionError(GraphError):
    """A constructor or test was called on an input outside its domain."""


# named graphs ------------------------------------------------------------------

HOUSE_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
HOUSE_APEX = 4
# house labels used when gluing: apex z, triangle x, y, square s, t (t ~ x, s ~ y)
HOUSE_X, HOUSE_Y, HOUSE_T, HOUSE_S = 2, 3, 0, 1

DREAM_HOUSE_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (3, 5), (4, 6), (5, 6), (4, 5)]
CRYSTAL_EDGES = [(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (4, 5), (3, 6), (2, 6), (0, 4), (5, 6)]


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k3() -> Graph:
    return complete(3)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(r: int, s: int) -> Graph:
    """Vertices ``0..r-1`` on one side, ``r..r+s-1`` on the other."""
    if r < 1 or s < 1:
        raise GraphError("complete bipartite graph needs r, s >= 1")
    return from_edge_list(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def fan(n: int) -> Graph:
    """Vertex 0 joined to every vertex of the path 1-2-...-(n-1)."""
    if n < 3:
        raise GraphError("fan needs n >= 3")
    pairs = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return from_edge_list(n, pairs)


def house() -> Graph:
    return from_edge_list(5, HOUSE_EDGES)


def dream_house() -> Graph:
    return from_edge_list(7, DREAM_HOUSE_EDGES)


def crystal() -> Graph:
    return from_edge_list(7, CRYSTAL_EDGES)


def c7_star() -> Graph:
    return from_edge_list(7, [(i, (i + 1) % 7) for i in range(7)] + [(0, 3)])


def paw() -> Graph:
    return from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def diamond() -> Graph:
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def make_named(tag: str) -> Graph:
    """Build a graph from a tag such as ``house``, ``cycle:7`` or ``kbip:2,3``."""
    name, _, arg = tag.strip().lower().partition(":")
    fixed = {
        "k3": k3,
        "house": house,
        "dreamhouse": dream_house,
        "crystal": crystal,
        "c7star": c7_star,
        "paw": paw,
        "diamond": diamond,
    }
    try:
        if name in fixed:
            if arg:
                raise GraphError(f"{name} takes no parameter")
            return fixed[name]()
        if name in ("cycle", "fan", "path", "complete", "star"):
            n = int(arg)
            return {"cycle": cycle, "fan": fan, "path": path, "complete": complete, "star": star}[name](n)
        if name == "kbip":
            r, s = (int(x) for x in arg.split(","))
            return complete_bipartite(r, s)
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad parameter in {tag!r}") from None
    raise GraphError(f"unknown graph name {tag!r}")


# families -----------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyWitness:
    family: str  # "T" or "F"
    base: Graph
    bipartition: Bipartition
    w: int


def _check_base(g: Graph, bip: Bipartition, w: int) -> None:
    if g.m == 0:
        raise PreconditionError("base graph must have at least one edge")
    if not gr.is_connected(g):
        raise PreconditionError("base graph must be connected")
    try:
        bip.validate(g)
    except GraphError as exc:
        raise PreconditionError(f"not a bipartition of the base: {exc}") from None
    if bip.balanced:
        raise PreconditionError("base needs |A| < |B|")
    if w not in bip.side_b:
        raise PreconditionError(f"vertex {w} is not in side B")
    if not is_well_edge_dominated(g):
        raise PreconditionError("base graph is not well-edge-dominated")


def _detachable(g: Graph, bip: Bipartition, w: int) -> bool:
    rest = gr.delete_vertex(g, w)
    if not is_well_edge_dominated(rest):
        return False
    assert edge_domination_number(rest) == len(bip.side_a)
    return True


def _strong(g: Graph, w: int) -> bool:
    rest, index = gr.induced_delete(g, [w])
    supports = gr.support_vertices(rest)
    return all(index[a] in supports for a in g.neighbors(w))


def is_detachable(g: Graph, bip: Bipartition, w: int) -> bool:
    """Whether deleting ``w`` from the bipartite WED base keeps it WED."""
    _check_base(g, bip, w)
    return _detachable(g, bip, w)


def is_strongly_detachable(g: Graph, bip: Bipartition, w: int) -> bool:
    _check_base(g, bip, w)
    return _detachable(g, bip, w) and _strong(g, w)


def build_family_t(g: Graph, bip: Bipartition, w: int) -> Graph:
    """Glue a triangle onto the detachable vertex ``w``.

    The base keeps its labels; the two new triangle vertices are ``n`` and ``n+1``.
    """
    if not is_detachable(g, bip, w):
        raise PreconditionError(f"vertex {w} is not detachable")
    return gr.identify_vertices(g, w, k3(), 2)


def build_family_f(g: Graph, bip: Bipartition, w: int) -> Graph:
    """Glue the house, by its triangle apex, onto the strongly detachable ``w``."""
    if not is_strongly_detachable(g, bip, w):
        raise PreconditionError(f"vertex {w} is not strongly detachable")
    return gr.identify_vertices(g, w, house(), HOUSE_APEX)


def rebuild(witness: FamilyWitness) -> Graph:
    if witness.family == "T":
        return build_family_t(witness.base, witness.bipartition, witness.w)
    if witness.family == "F":
        return build_family_f(witness.base, witness.bipartition, witness.w)
    raise GraphError(f"unknown family {witness.family!r}")


@dataclass(frozen=True)
class BipartiteBase:
    graph: Graph
    bipartition: Bipartition
    detachable: frozenset[int]
    strongly_detachable: frozenset[int]


def annotate_base(g: Graph) -> BipartiteBase | None:
    """Detachability flags for a candidate base, or None if it is not a valid base."""
    if g.m == 0 or not gr.is_connected(g):
        return None
    bip = gr.bipartition(g)
    if bip is None or bip.balanced or not is_well_edge_dominated(g):
        return None
    det = frozenset(w for w in sorted(bip.side_b) if _detachable(g, bip, w))
    strong = frozenset(w for w in det if _strong(g, w))
    return BipartiteBase(g, bip, det, strong)


def find_bipartite_wed_bases(n_max: int) -> list[BipartiteBase]:
    """All connected bipartite WED graphs with |A| < |B| up to order ``n_max``."""
    from .corpus import CorpusSpec, enumerate_graphs

    if n_max > 9:
        raise gr.SizeLimitError("base search limited to n <= 9")
    out = []
    for n in range(2, n_max + 1):
        for g in enumerate_graphs(CorpusSpec(n, filters=frozenset({"connected", "bipartite"}))):
            base = annotate_base(g)
            if base is not None:
                out.append(base)
    return out


def family_members(bases: list[BipartiteBase]) -> Iterator[tuple[FamilyWitness, Graph]]:
    """Every (witness, graph) pair generated from the given bases."""
    for b in bases:
        for w in sorted(b.detachable):
            wit = FamilyWitness("T", b.graph, b.bipartition, w)
            yield wit, gr.identify_vertices(b.graph, w, k3(), 2)
        for w in sorted(b.strongly_detachable):
            wit = FamilyWitness("F", b.graph, b.bipartition, w)
            yield wit, gr.identify_vertices(b.graph, w, house(), HOUSE_APEX)
