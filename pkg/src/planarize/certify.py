"""Independent checkers for the properties the reducers promise.

Everything here is deliberately separate from the reducers: these
predicates are run against the induced subgraph of the *original* input,
so a reducer bug cannot vouch for itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from .errors import UnknownVertex
from .multigraph import MultiGraph


def induced_subgraph(g: MultiGraph, s: set[int]) -> MultiGraph:
    """Exact induced subgraph G[S]."""
    out = MultiGraph()
    for v in sorted(s):
        if not g.has_vertex(v):
            raise UnknownVertex(f"vertex {v} not in graph")
        out.add_vertex(v)
    for u, v, c in g.iter_edges():
        if u in s and v in s:
            out.add_edge(u, v, c)
    return out


def is_pseudoforest(g: MultiGraph) -> bool:
    """True iff every connected component has at most one cycle.

    Multigraph aware: a component has at most one cycle exactly when its
    edge units do not exceed its vertex count (loops and parallel pairs
    count as cycles).
    """
    for comp in g.components():
        cset = set(comp)
        units = sum(c for u, v, c in g.iter_edges() if u in cset)
        if units > len(comp):
            return False
    return True


def _sp_reduce(g: MultiGraph, order_seed: int | None = None) -> MultiGraph:
    """Exhaustively apply loop deletion, parallel merging, degree-<=1
    deletion, and degree-2 smoothing; returns the irreducible residue.

    The rewriting is confluent; ``order_seed`` shuffles rule application
    order so tests can check that the verdict does not depend on it.
    """
    h = g.copy()
    rng = random.Random(order_seed) if order_seed is not None else None
    changed = True
    while changed:
        changed = False
        moves: list[tuple[str, int]] = []
        for v in h.sorted_vertices():
            if h.loops(v):
                moves.append(("loop", v))
        for u, v, c in h.iter_edges():
            if u != v and c > 1:
                moves.append(("par", u))
        for v in h.sorted_vertices():
            deg = h.degree(v)
            if deg <= 1:
                moves.append(("del", v))
            elif deg == 2 and not h.loops(v):
                moves.append(("smooth", v))
        if not moves:
            break
        if rng is not None:
            move = moves[rng.randrange(len(moves))]
        else:
            move = moves[0]
        kind, v = move
        if kind == "loop":
            h.remove_edge(v, v, h.loops(v))
        elif kind == "par":
            for u, c in list(h.incidences(v)):
                if u != v and c > 1:
                    h.remove_edge(v, u, c - 1)
                    break
        elif kind == "del":
            h.delete_vertex(v)
        else:
            _smooth(h, v)
        changed = True
    return h


def _smooth(h: MultiGraph, v: int) -> None:
    """Replace a degree-2, loop-free vertex by an edge between its
    neighbors (a parallel edge or a loop when they coincide)."""
    inc = [(u, c) for u, c in h.incidences(v) if u != v]
    ends: list[int] = []
    for u, c in inc:
        ends.extend([u] * c)
    assert len(ends) == 2
    a, b = ends
    h.delete_vertex(v)
    h.add_edge(a, b)


def is_partial_2_tree(g: MultiGraph) -> bool:
    """True iff g has treewidth at most 2.

    Characterized by the series-parallel rewriting emptying the graph:
    delete loops, merge parallel edges, delete degree-<=1 vertices, and
    smooth degree-2 vertices.
    """
    return _sp_reduce(g).n == 0


class ComponentKind(Enum):
    EMPTY = "empty"
    SINGLE_VERTEX = "single-vertex"
    LOOP_VERTEX = "loop-vertex"
    DIPOLE_D3 = "dipole-d3"
    K4 = "k4"
    REJECT = "reject"


@dataclass(frozen=True)
class ComponentClass:
    kind: ComponentKind
    reason: str = ""

    @property
    def accepted(self) -> bool:
        return self.kind is not ComponentKind.REJECT


def classify_component(g: MultiGraph) -> ComponentClass:
    """Classify a connected graph by its contraction residue.

    Degree-<=1 vertices are deleted and degree-2 vertices smoothed
    (multigraph smoothing: the two incident edges become one edge,
    possibly parallel or a loop) until neither rule applies; the residue
    is then matched against the accepted shapes.  Accepted residues are
    exactly those a well-formed planar-reducer output can leave behind:
    nothing, a single vertex, a single cycle (loop vertex), the
    three-edge dipole, or a K4.
    """
    if g.n == 0:
        return ComponentClass(ComponentKind.EMPTY)
    if len(g.components()) != 1:
        return ComponentClass(ComponentKind.REJECT, "input not connected")
    h = g.copy()
    changed = True
    while changed:
        changed = False
        for v in h.sorted_vertices():
            if h.degree(v) <= 1:
                h.delete_vertex(v)
                changed = True
                break
            if h.degree(v) == 2 and not h.loops(v):
                _smooth(h, v)
                changed = True
                break
    if h.n == 0:
        return ComponentClass(ComponentKind.EMPTY)
    if h.n == 1:
        v = next(iter(h.vertices()))
        if h.m == 0:
            return ComponentClass(ComponentKind.SINGLE_VERTEX)
        if h.loops(v) == 1:
            return ComponentClass(ComponentKind.LOOP_VERTEX)
        return ComponentClass(ComponentKind.REJECT, f"{h.loops(v)} loops on one vertex")
    if h.n == 2:
        a, b = sorted(h.vertices())
        if h.loops(a) == 0 and h.loops(b) == 0 and h.multiplicity(a, b) == 3:
            return ComponentClass(ComponentKind.DIPOLE_D3)
        return ComponentClass(ComponentKind.REJECT, "two-vertex residue is not the dipole")
    if h.n == 4 and h.m == 6 and h.is_simple():
        verts = h.sorted_vertices()
        if all(h.multiplicity(u, v) == 1 for i, u in enumerate(verts) for v in verts[i + 1:]):
            return ComponentClass(ComponentKind.K4)
    return ComponentClass(ComponentKind.REJECT, f"residue n={h.n}, m={h.m} unrecognized")


def classify_all(g: MultiGraph) -> list[ComponentClass]:
    return [classify_component(induced_subgraph(g, set(comp))) for comp in g.components()]


def accepts_planar_residue(g: MultiGraph) -> bool:
    """Structural certificate for planar-reducer outputs.

    Reduces each component by deleting degree-<=1 vertices, smoothing
    loop-free degree-2 vertices, removing loop edges (a completed cycle
    glued at a cut vertex), and merging parallel bundles down to a
    single edge (cycles glued along a pair of attachment points, the
    dipole included).  Accepts iff every component empties or ends as K4.

    Every accepted graph is planar with treewidth at most 3: undoing the
    rules only subdivides edges, duplicates edges, or attaches pendant
    vertices and cycles, all of which preserve planarity and never push
    treewidth past the K4 core's 3.
    """
    h = g.copy()
    changed = True
    while changed:
        changed = False
        for v in h.sorted_vertices():
            if h.degree(v) <= 1:
                h.delete_vertex(v)
                changed = True
                break
            if h.loops(v):
                h.remove_edge(v, v, 1)
                changed = True
                break
            if h.degree(v) == 2:
                _smooth(h, v)
                changed = True
                break
        if changed:
            continue
        for u, v, c in h.iter_edges():
            if u != v and c >= 2:
                h.remove_edge(u, v, c - 1)
                changed = True
                break
    if h.n == 0:
        return True
    for comp in h.components():
        sub = induced_subgraph(h, set(comp))
        if sub.n == 4 and sub.m == 6 and sub.is_simple():
            continue
        return False
    return True


def is_planar(g: MultiGraph) -> bool:
    """Exact planarity of the underlying simple graph.

    Loops and parallel edges never affect planarity, so the test runs on
    the simplified copy.  Decision comes from the left-right planarity
    test; the brute-force side (subdivision search) cross-checks it in
    the test suite.
    """
    h = g.copy()
    h.simplify()
    if h.n <= 4 or h.m <= 8:
        return True
    gx = nx.Graph()
    gx.add_nodes_from(h.vertices())
    gx.add_edges_from((u, v) for u, v, _ in h.iter_edges())
    ok, _ = nx.check_planarity(gx, counterexample=False)
    return bool(ok)
