"""Structural recognisers for well-edge-dominated graphs.

``classify_one_triangle`` decides connected graphs with exactly one triangle:
they are WED precisely when they are K3, the house, the dream house, the
crystal, or a triangle / house glued onto a bipartite WED base at a
(strongly) detachable vertex.  The base itself is still checked with the
exhaustive oracle, since bipartite WED graphs with 4-cycles have no known
structural description.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import graph as gr
from . import structures as st
from .graph import Graph, GraphError
from .matching import is_well_edge_dominated
from .structures import FamilyWitness


SPECIAL_VERDICTS = ("SpecialK3", "SpecialHouse", "SpecialDreamHouse", "SpecialCrystal")
MEMBER_VERDICTS = ("MemberT", "MemberF")
NOT_WED = "NotWED"


@dataclass(frozen=True)
class Classification:
    verdict: str
    triangle: tuple[int, int, int]
    witness: FamilyWitness | None = None
    reason: str = ""

    @property
    def is_wed(self) -> bool:
        return self.verdict != NOT_WED


@lru_cache(maxsize=None)
def _special_forms() -> dict[bytes, str]:
    return {
        gr.canonical_form(st.k3()): "SpecialK3",
        gr.canonical_form(st.house()): "SpecialHouse",
        gr.canonical_form(st.dream_house()): "SpecialDreamHouse",
        gr.canonical_form(st.crystal()): "SpecialCrystal",
    }


def _valid_base(base: Graph, z: int) -> gr.Bipartition | None:
    """Bipartition if ``base`` is connected, bipartite, unbalanced, with ``z`` on the large side."""
    if base.m == 0 or not gr.is_connected(base):
        return None
    bip = gr.bipartition(base)
    if bip is None or bip.balanced or z not in bip.side_b:
        return None
    return bip


def _match_t(g: Graph, tri: tuple[int, int, int]) -> FamilyWitness | None:
    low = [v for v in tri if g.degree(v) == 2]
    if len(low) != 2:
        return None
    (z,) = [v for v in tri if v not in low]
    base, index = gr.induced_delete(g, low)
    bz = index[z]
    bip = _valid_base(base, bz)
    if bip is None:
        return None
    if not is_well_edge_dominated(base):
        return None
    if not is_well_edge_dominated(gr.delete_vertex(base, bz)):
        return None
    return FamilyWitness("T", base, bip, bz)


def _match_f(g: Graph, tri: tuple[int, int, int]) -> FamilyWitness | None:
    for z in tri:
        x, y = [v for v in tri if v != z]
        if g.degree(x) != 3 or g.degree(y) != 3:
            continue
        for x, y in ((x, y), (y, x)):
            (t,) = [v for v in g.neighbors(x) if v not in tri]
            (s,) = [v for v in g.neighbors(y) if v not in tri]
            if s == t or g.degree(s) != 2 or g.degree(t) != 2 or not g.has_edge(s, t):
                continue
            base, index = gr.induced_delete(g, [x, y, s, t])
            bz = index[z]
            bip = _valid_base(base, bz)
            if bip is None:
                continue
            if not is_well_edge_dominated(base):
                continue
            rest, rest_index = gr.induced_delete(base, [bz])
            if not is_well_edge_dominated(rest):
                continue
            supports = gr.support_vertices(rest)
            if all(rest_index[a] in supports for a in base.neighbors(bz)):
                return FamilyWitness("F", base, bip, bz)
    return None


def _pendant_triangle(g: Graph, tri: tuple[int, int, int]) -> bool:
    # a triangle with only leaves hanging off it
    if g.n < 4:
        return False
    tri_mask = gr.mask_of(tri)
    return all(g.degree(v) == 1 and g.adj[v] & tri_mask for v in range(g.n) if v not in tri)


def classify_one_triangle(g: Graph) -> Classification:
    """Decide whether a connected graph with exactly one triangle is WED."""
    if not gr.is_connected(g):
        raise GraphError("classify_one_triangle needs a connected graph")
    tris = gr.triangles(g)
    if len(tris) != 1:
        raise GraphError(f"classify_one_triangle needs exactly one triangle, found {len(tris)}")
    tri = tris[0]
    if g.n <= 7:
        special = _special_forms().get(gr.canonical_form(g))
        if special is not None:
            return Classification(special, tri)
    if _pendant_triangle(g, tri):
        return Classification(NOT_WED, tri, reason="triangle with only pendant leaves")
    wit = _match_t(g, tri)
    if wit is not None:
        return Classification("MemberT", tri, wit)
    wit = _match_f(g, tri)
    if wit is not None:
        return Classification("MemberF", tri, wit)
    return Classification(NOT_WED, tri, reason="no special graph or family decomposition fits")


def recognize_girth5(g: Graph) -> bool:
    """WED test for connected graphs of girth at least 5, without the oracle."""
    if not gr.is_connected(g):
        raise GraphError("recognize_girth5 needs a connected graph")
    if gr.girth(g) < 5:
        raise GraphError("recognize_girth5 needs girth >= 5")
    if g.n == 2 and g.m == 1:
        return True
    if g.m == g.n and g.n in (5, 7) and all(d == 2 for d in g.degrees()):
        return True
    bip = gr.bipartition(g)
    if bip is None:
        return False
    supports = frozenset(gr.support_vertices(g))
    return supports in (bip.side_a, bip.side_b)


def recognize_girth5_without_supports(g: Graph) -> bool:
    """Deliberately broken girth-5 test that ignores support vertices (negative control)."""
    if g.n == 2 and g.m == 1:
        return True
    if g.m == g.n and g.n in (5, 7) and all(d == 2 for d in g.degrees()):
        return True
    return gr.is_bipartite(g)


@lru_cache(maxsize=None)
def _girth4_forms() -> frozenset[bytes]:
    return frozenset(gr.canonical_form(h) for h in (st.cycle(5), st.cycle(7), st.c7_star()))


def recognize_girth4_nonbipartite(g: Graph) -> bool:
    """Connected non-bipartite triangle-free graphs are WED only as C5, C7 or C7*."""
    if not gr.is_connected(g):
        raise GraphError("recognize_girth4_nonbipartite needs a connected graph")
    if gr.girth(g) < 4 or gr.girth(g) == math.inf:
        raise GraphError("recognize_girth4_nonbipartite needs girth >= 4 and a cycle")
    if gr.is_bipartite(g):
        raise GraphError("recognize_girth4_nonbipartite needs a non-bipartite graph")
    if g.n not in (5, 7):
        return False
    return gr.canonical_form(g) in _girth4_forms()
