"""Induced-pseudoforest reducer.

Repeatedly performs the first applicable case from a fixed priority
list, deleting vertices of degree at least 5 first so the working graph
has maximum degree 4.  Vertices moved to the output set S leave the
working graph by contraction or acceptance; the result satisfies
9 |S| >= 9 n - 2 m and the input induced on S is a pseudoforest.

Two dispatchers produce identical runs: a reference scan
(``first_applicable_case``) and an incremental priority queue over
dirty vertices used by ``reduce_pseudoforest`` for near-linear time.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations

from .errors import BoundViolation, CaseAnalysisIncomplete, GraphError, StaleDescriptor
from .multigraph import MultiGraph
from .solution import ReductionSolution, TraceStep, aggregate_charge_ok

PREPROCESS = "Preprocess"
HARVEST = "HarvestIsolated"
LEAF = "Leaf"
DEG2_NO_TRIANGLE = "Deg2NoTriangle"
DELTA_A = "DeltaA"
DELTA_B = "DeltaB"
DELTA_C = "DeltaC"
DELTA_D = "DeltaD"
DEG3_ADJ_DEG4 = "Deg3AdjDeg4"
THREE_REGULAR = "ThreeRegular"
FOUR_REG_A = "FourRegA"
FOUR_REG_B = "FourRegB"
FOUR_REG_C1 = "FourRegC1"
FOUR_REG_C2 = "FourRegC2"
FOUR_REG_C3 = "FourRegC3"
FOUR_REG_C4 = "FourRegC4"

_RANKS = {
    PREPROCESS: 0,
    HARVEST: 1,
    LEAF: 2,
    DEG2_NO_TRIANGLE: 3,
    DELTA_A: 4,
    DELTA_B: 5,
    DELTA_C: 6,
    DELTA_D: 7,
    DEG3_ADJ_DEG4: 8,
    THREE_REGULAR: 9,
    FOUR_REG_A: 10,
    FOUR_REG_B: 11,
    FOUR_REG_C1: 12,
    FOUR_REG_C2: 13,
    FOUR_REG_C3: 14,
    FOUR_REG_C4: 15,
}


@dataclass(frozen=True)
class CaseDescriptor:
    """A matched case: label plus the participating vertices.

    ``vertices`` meaning per label is documented in ``apply_case``;
    ``payload`` carries auxiliary vertex pairs where needed.
    """

    label: str
    vertices: tuple[int, ...]
    payload: tuple = ()

    @property
    def rank(self) -> int:
        return _RANKS[self.label]


# -- local structure helpers -----------------------------------------


def _adjacent(g: MultiGraph, u: int, v: int) -> bool:
    return g.multiplicity(u, v) > 0


def _disjoint_nonadj_pairs(g: MultiGraph, a: int) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """Two disjoint non-adjacent pairs covering N(a); first is kept."""
    nbrs = g.neighbors(a)
    if len(nbrs) != 4:
        return None
    for p, q in combinations(nbrs, 2):
        if _adjacent(g, p, q):
            continue
        r, s = (x for x in nbrs if x not in (p, q))
        if not _adjacent(g, r, s):
            return (p, q), (r, s)
    return None


def _star_center(g: MultiGraph, a: int) -> int | None:
    """Center of N(a) when the induced neighborhood is a 3-edge star."""
    nbrs = g.neighbors(a)
    if len(nbrs) != 4:
        return None
    within = {u: sum(1 for v in nbrs if v != u and _adjacent(g, u, v)) for u in nbrs}
    counts = sorted(within.values())
    if counts == [1, 1, 1, 3]:
        return max(within, key=lambda u: (within[u], -u))
    return None


def _tetra_of(g: MultiGraph, v: int) -> tuple[int, ...] | None:
    """The K4 through v, as a sorted 4-tuple, if one exists."""
    nbrs = g.neighbors(v)
    for triple in combinations(nbrs, 3):
        b, c, d = triple
        if _adjacent(g, b, c) and _adjacent(g, b, d) and _adjacent(g, c, d):
            return tuple(sorted((v,) + triple))
    return None


def _k5_component(g: MultiGraph, a: int) -> tuple[int, ...] | None:
    nbrs = g.neighbors(a)
    if len(nbrs) != 4 or g.degree(a) != 4:
        return None
    if any(g.degree(u) != 4 for u in nbrs):
        return None
    if all(_adjacent(g, u, v) for u, v in combinations(nbrs, 2)):
        return tuple(sorted([a] + nbrs))
    return None


def _shared_triangle(g: MultiGraph, a: int) -> tuple[int, ...] | None:
    """(a, e, b, c, d): tetrahedra a,b,c,d and e,b,c,d share triangle bcd."""
    nbrs = g.neighbors(a)
    for triple in combinations(nbrs, 3):
        b, c, d = triple
        if not (_adjacent(g, b, c) and _adjacent(g, b, d) and _adjacent(g, c, d)):
            continue
        common = set(g.neighbors(b)) & set(g.neighbors(c)) & set(g.neighbors(d))
        common.discard(a)
        for e in sorted(common):
            if not _adjacent(g, a, e):
                return (a, e, b, c, d)
    return None


def _double_link(g: MultiGraph, a: int) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """Two inter-tetrahedron edges joining a's tetrahedron to one other.

    Returns ((b, e), (d, g2)): the sorted pair of linking edges; the case
    deletes d (first tetra's endpoint of the second edge) and e (second
    tetra's endpoint of the first edge).
    """
    t1 = _tetra_of(g, a)
    if t1 is None:
        return None
    t1set = set(t1)
    links: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for x in t1:
        for y in g.neighbors(x):
            if y in t1set:
                continue
            t2 = _tetra_of(g, y)
            if t2 is None:
                return None
            links.setdefault(t2, []).append((x, y))
    for t2 in sorted(links):
        if len(links[t2]) >= 2:
            edges = sorted(links[t2])
            return edges[0], edges[1]
    return None


# -- case matching ----------------------------------------------------


def _match_at(g: MultiGraph, v: int) -> CaseDescriptor | None:
    """Best-priority case anchored at v, from vertex-local structure only.

    Rank 15 is only a marker (v lies in a tetrahedron); its payload is
    computed globally when it actually fires.
    """
    deg = g.degree(v)
    if deg >= 5:
        return CaseDescriptor(PREPROCESS, (v,))
    if deg == 0:
        return CaseDescriptor(HARVEST, (v,))
    if deg == 1:
        return CaseDescriptor(LEAF, (v, g.neighbors(v)[0]))
    if deg == 2:
        nbrs = g.neighbors(v)
        if len(nbrs) != 2:
            raise GraphError(f"multigraph state at {v}; the reducer requires simple inputs")
        u, w = nbrs
        if not _adjacent(g, u, w):
            return CaseDescriptor(DEG2_NO_TRIANGLE, (v, min(u, w), max(u, w)))
        du, dw = g.degree(u), g.degree(w)
        pair = sorted(((du, u), (dw, w)))
        if du == 2 and dw == 2:
            return CaseDescriptor(DELTA_A, tuple(sorted((v, u, w))))
        if pair[0][0] == 2 and pair[1][0] == 3:
            b = pair[0][1]
            c = pair[1][1]
            d = next(x for x in g.neighbors(c) if x not in (v, b))
            return CaseDescriptor(DELTA_B, (v, b, c, d))
        threes = sorted(x for x in (u, w) if g.degree(x) == 3)
        if threes:
            b = threes[0]
            c = u if b == w else w
            x = next(y for y in g.neighbors(b) if y not in (v, c))
            return CaseDescriptor(DELTA_C, (v, b, c, x))
        # Remaining neighbor degrees are {2,4} or {4,4}; a degree >= 5
        # neighbor can only appear while a Preprocess entry is pending,
        # which outranks this descriptor, so the match stays provisional.
        fours = sorted(x for x in (u, w) if g.degree(x) >= 4)
        b = fours[0]
        c = u if b == w else w
        return CaseDescriptor(DELTA_D, (v, b, c))
    if deg == 3:
        fours = sorted(u for u in g.neighbors(v) if g.degree(u) >= 4)
        if fours:
            return CaseDescriptor(DEG3_ADJ_DEG4, (v, fours[0]))
        return CaseDescriptor(THREE_REGULAR, (v,))
    pairs = _disjoint_nonadj_pairs(g, v)
    if pairs is not None:
        keep, drop = pairs
        return CaseDescriptor(FOUR_REG_A, (v,), (keep, drop))
    center = _star_center(g, v)
    if center is not None:
        c = min(x for x in g.neighbors(v) if x != center)
        cpairs = _disjoint_nonadj_pairs(g, c)
        if cpairs is not None:
            return CaseDescriptor(FOUR_REG_B, (v, center, c), cpairs)
    comp5 = _k5_component(g, v)
    if comp5 is not None:
        return CaseDescriptor(FOUR_REG_C1, comp5)
    shared = _shared_triangle(g, v)
    if shared is not None:
        return CaseDescriptor(FOUR_REG_C2, shared)
    link = _double_link(g, v)
    if link is not None:
        (b, e), (d, g2) = link
        return CaseDescriptor(FOUR_REG_C3, (d, e), ((b, e), (d, g2)))
    if _tetra_of(g, v) is not None:
        return CaseDescriptor(FOUR_REG_C4, (v,))
    return None


def _c4_payload(g: MultiGraph) -> CaseDescriptor:
    """Global step for the all-tetrahedra state: contract each K4 to a
    node, find any cycle, and delete the two off-cycle vertices of the
    smallest tetrahedron on it."""
    tetra: dict[int, tuple[int, ...]] = {}
    rep: dict[int, int] = {}
    for v in g.sorted_vertices():
        t = _tetra_of(g, v)
        if t is None:
            raise CaseAnalysisIncomplete(f"vertex {v} lost its tetrahedron")
        tetra[min(t)] = t
        rep[v] = min(t)
    adj: dict[int, set[int]] = {t: set() for t in tetra}
    link: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v, _ in g.iter_edges():
        tu, tv = rep[u], rep[v]
        if tu != tv:
            adj[tu].add(tv)
            adj[tv].add(tu)
            link.setdefault((min(tu, tv), max(tu, tv)), (u, v) if tu < tv else (v, u))
    cycle = _find_cycle(adj)
    if cycle is None:
        raise CaseAnalysisIncomplete("tetrahedron graph is acyclic; case analysis bug")
    t0 = min(cycle)
    i = cycle.index(t0)
    prev_t = cycle[i - 1]
    next_t = cycle[(i + 1) % len(cycle)]
    on_cycle = set()
    for other in (prev_t, next_t):
        x, y = link[(min(t0, other), max(t0, other))]
        on_cycle.add(x if rep[x] == t0 else y)
    off = tuple(sorted(set(tetra[t0]) - on_cycle))
    if len(off) != 2:
        raise CaseAnalysisIncomplete("cycle touches a tetrahedron at more than two vertices")
    return CaseDescriptor(FOUR_REG_C4, tetra[t0], (tuple(sorted(on_cycle)), off))


def _find_cycle(adj: dict[int, set[int]]) -> list[int] | None:
    """Any cycle in a simple graph given as adjacency sets, via DFS."""
    seen: set[int] = set()
    for root in sorted(adj):
        if root in seen:
            continue
        parent = {root: -1}
        stack = [(root, -1)]
        order: dict[int, int] = {}
        while stack:
            x, par = stack.pop()
            if x in order:
                continue
            order[x] = len(order)
            parent[x] = par
            seen.add(x)
            for y in sorted(adj[x], reverse=True):
                if y not in order:
                    stack.append((y, x))
                elif y != par:
                    path = [x]
                    cur = x
                    while cur != y:
                        cur = parent[cur]
                        path.append(cur)
                    return list(reversed(path))
    return None


def first_applicable_case(g: MultiGraph) -> CaseDescriptor | None:
    """Reference dispatcher: scan every vertex, return the minimum-rank
    case with ties by anchor id; None when the graph is fully reduced."""
    best: CaseDescriptor | None = None
    best_key = (len(_RANKS), -1)
    for v in g.sorted_vertices():
        d = _match_at(g, v)
        if d is None:
            continue
        key = (d.rank, v)
        if key < best_key:
            best, best_key = d, key
    if best is None:
        if g.m > 0:
            raise CaseAnalysisIncomplete(f"{g.m} edges left but no case matches")
        return None
    if best.label == FOUR_REG_C4:
        return _c4_payload(g)
    return best


# -- case application --------------------------------------------------


def _check(cond: bool, desc: CaseDescriptor, why: str) -> None:
    if not cond:
        raise StaleDescriptor(f"{desc.label}{desc.vertices}: {why}")


def apply_case(g: MultiGraph, desc: CaseDescriptor, sol: ReductionSolution) -> tuple[TraceStep, set[int]]:
    """Execute one case, updating the graph, S, and the trace.

    Descriptor vertices by label: Preprocess/Harvest/ThreeRegular (v,);
    Leaf (a, neighbor); Deg2NoTriangle (a, u, w) contracting a into u;
    DeltaA (a, b, c) the isolated triangle; DeltaB (a, b, c, d) deleting
    d; DeltaC (a, b, c, x) deleting c then contracting a-b and b-x;
    DeltaD (a, b, c) deleting b then contracting a-c; Deg3AdjDeg4 (a, b)
    deleting b; FourRegA (a,) and FourRegB (a, center, c) with the kept
    and deleted pairs in the payload; FourRegC1 the K5 component;
    FourRegC2 (a, e, b, c, d) deleting the apexes a and e; FourRegC3
    (d, e) the endpoints to delete, linking edges in the payload;
    FourRegC4 the tetrahedron, payload (on-cycle pair, off-cycle pair).

    Returns the recorded step and the set of vertices whose incident
    edges changed (for dirty propagation).  Raises StaleDescriptor when
    the descriptor no longer matches the graph.
    """
    label = desc.label
    touched: set[int] = set()

    def collect(vs) -> None:
        for x in vs:
            if g.has_vertex(x):
                touched.add(x)
                touched.update(g.neighbors(x))

    if label == PREPROCESS:
        (v,) = desc.vertices
        _check(g.has_vertex(v) and g.degree(v) >= 5, desc, "degree below 5")
        collect([v])
        units = g.delete_vertex(v)
        step = TraceStep(label, deleted=(v,), removed_edges=units)
    elif label == HARVEST:
        (v,) = desc.vertices
        _check(g.has_vertex(v) and g.degree(v) == 0, desc, "not isolated")
        orig = g.origin(v)
        g.delete_vertex(v)
        step = TraceStep(label, accepted=(v,), s_added=(orig,))
    elif label == LEAF:
        a, b = desc.vertices
        _check(g.has_vertex(a) and g.degree(a) == 1 and _adjacent(g, a, b), desc, "not a leaf edge")
        collect([a, b])
        orig = g.origin(a)
        g.contract_edge(a, b, b)
        step = TraceStep(label, contracted=((a, b, b),), removed_edges=1, s_added=(orig,))
    elif label == DEG2_NO_TRIANGLE:
        a, u, w = desc.vertices
        _check(
            g.has_vertex(a) and g.degree(a) == 2 and sorted((u, w)) == g.neighbors(a)
            and not _adjacent(g, u, w),
            desc,
            "not a triangle-free degree-2 vertex",
        )
        collect([a, u, w])
        orig = g.origin(a)
        g.contract_edge(a, u, u)
        step = TraceStep(label, contracted=((a, u, u),), removed_edges=1, s_added=(orig,))
    elif label == DELTA_A:
        a, b, c = desc.vertices
        _check(
            all(g.has_vertex(x) and g.degree(x) == 2 for x in (a, b, c))
            and _adjacent(g, a, b) and _adjacent(g, b, c) and _adjacent(g, a, c),
            desc,
            "not an isolated triangle",
        )
        origs = tuple(g.origin(x) for x in (a, b, c))
        units = sum(g.delete_vertex(x) for x in (a, b, c))
        step = TraceStep(label, accepted=(a, b, c), removed_edges=units, s_added=origs)
    elif label == DELTA_B:
        a, b, c, d = desc.vertices
        _check(
            g.has_vertex(d) and g.has_vertex(a) and g.degree(a) == 2 and g.degree(b) == 2
            and g.degree(c) == 3 and _adjacent(g, c, d),
            desc,
            "triangle configuration changed",
        )
        if g.degree(d) < 3:
            raise CaseAnalysisIncomplete(
                f"DeltaB fired with deg({d}) = {g.degree(d)}; earlier cases missed it"
            )
        collect([d])
        units = g.delete_vertex(d)
        step = TraceStep(label, deleted=(d,), removed_edges=units)
    elif label == DELTA_C:
        a, b, c, x = desc.vertices
        _check(
            g.has_vertex(c) and g.degree(a) == 2 and g.degree(b) == 3 and g.degree(c) >= 3
            and _adjacent(g, a, b) and _adjacent(g, a, c) and _adjacent(g, b, c)
            and _adjacent(g, b, x),
            desc,
            "triangle configuration changed",
        )
        collect([a, b, c, x])
        orig_a, orig_b = g.origin(a), g.origin(b)
        units = g.delete_vertex(c)
        g.contract_edge(a, b, b)
        g.contract_edge(b, x, x)
        step = TraceStep(
            label,
            deleted=(c,),
            contracted=((a, b, b), (b, x, x)),
            removed_edges=units + 2,
            s_added=(orig_a, orig_b),
        )
    elif label == DELTA_D:
        a, b, c = desc.vertices
        _check(
            g.has_vertex(b) and g.degree(a) == 2 and g.degree(b) == 4
            and _adjacent(g, a, b) and _adjacent(g, a, c) and _adjacent(g, b, c),
            desc,
            "triangle configuration changed",
        )
        collect([a, b, c])
        orig_a = g.origin(a)
        units = g.delete_vertex(b)
        g.contract_edge(a, c, c)
        step = TraceStep(
            label,
            deleted=(b,),
            contracted=((a, c, c),),
            removed_edges=units + 1,
            s_added=(orig_a,),
        )
    elif label == DEG3_ADJ_DEG4:
        a, b = desc.vertices
        _check(
            g.has_vertex(b) and g.degree(a) == 3 and g.degree(b) == 4 and _adjacent(g, a, b),
            desc,
            "degree pair changed",
        )
        collect([b])
        units = g.delete_vertex(b)
        step = TraceStep(label, deleted=(b,), removed_edges=units)
    elif label == THREE_REGULAR:
        (a,) = desc.vertices
        _check(g.has_vertex(a) and g.degree(a) == 3, desc, "degree changed")
        collect([a])
        units = g.delete_vertex(a)
        step = TraceStep(label, deleted=(a,), removed_edges=units)
    elif label in (FOUR_REG_A, FOUR_REG_B):
        keep, drop = desc.payload
        anchor = desc.vertices[0] if label == FOUR_REG_A else desc.vertices[2]
        _check(
            g.has_vertex(anchor) and g.degree(anchor) == 4
            and set(keep) | set(drop) == set(g.neighbors(anchor))
            and not _adjacent(g, *keep) and not _adjacent(g, *drop),
            desc,
            "neighborhood pairs changed",
        )
        d, e = drop
        collect([d, e])
        units = g.delete_vertex(d) + g.delete_vertex(e)
        step = TraceStep(label, deleted=(d, e), removed_edges=units)
    elif label == FOUR_REG_C1:
        comp = desc.vertices
        _check(
            len(comp) == 5 and all(g.has_vertex(x) and g.degree(x) == 4 for x in comp)
            and all(_adjacent(g, u, v) for u, v in combinations(comp, 2)),
            desc,
            "component is no longer a K5",
        )
        d, e = comp[0], comp[1]
        collect([d, e])
        units = g.delete_vertex(d) + g.delete_vertex(e)
        step = TraceStep(label, deleted=(d, e), removed_edges=units)
    elif label == FOUR_REG_C2:
        a, e = desc.vertices[0], desc.vertices[1]
        b, c, d = desc.vertices[2:]
        _check(
            all(g.has_vertex(x) for x in desc.vertices)
            and not _adjacent(g, a, e)
            and all(_adjacent(g, a, y) and _adjacent(g, e, y) for y in (b, c, d)),
            desc,
            "shared triangle changed",
        )
        collect([a, e])
        units = g.delete_vertex(a) + g.delete_vertex(e)
        step = TraceStep(label, deleted=(a, e), removed_edges=units)
    elif label == FOUR_REG_C3:
        d, e = desc.vertices
        (b, e2), (d2, g2) = desc.payload
        _check(
            g.has_vertex(d) and g.has_vertex(e) and e2 == e and d2 == d
            and _adjacent(g, b, e) and _adjacent(g, d, g2) and not _adjacent(g, d, e),
            desc,
            "linking edges changed",
        )
        collect([d, e])
        units = g.delete_vertex(d) + g.delete_vertex(e)
        step = TraceStep(label, deleted=(d, e), removed_edges=units)
    elif label == FOUR_REG_C4:
        tetra = desc.vertices
        on_cycle, off = desc.payload
        _check(
            len(tetra) == 4 and all(g.has_vertex(x) for x in tetra)
            and all(_adjacent(g, u, v) for u, v in combinations(tetra, 2))
            and set(on_cycle) | set(off) == set(tetra),
            desc,
            "tetrahedron changed",
        )
        collect(off)
        units = sum(g.delete_vertex(x) for x in off)
        step = TraceStep(label, deleted=tuple(off), removed_edges=units)
    else:
        raise StaleDescriptor(f"unknown case label {label!r}")

    for orig in step.s_added:
        sol.s.add(orig)
    sol.trace.append(step)
    touched = {x for x in touched if g.has_vertex(x)}
    touched.update(v for v in desc.vertices if g.has_vertex(v))
    return step, touched


# -- driver ------------------------------------------------------------


def _require_simple(g: MultiGraph) -> None:
    if not g.is_simple():
        raise GraphError("reducer inputs must be simple graphs")


def _dirty_ball(g: MultiGraph, seeds: set[int]) -> set[int]:
    out = set(seeds)
    for _ in range(2):
        frontier = set()
        for x in out:
            frontier.update(g.neighbors(x))
        out |= frontier
    return out


def reduce_pseudoforest(g_in: MultiGraph) -> ReductionSolution:
    """Compute S with 9 |S| >= 9 n - 2 m and G_in[S] a pseudoforest."""
    _require_simple(g_in)
    g = g_in.copy()
    sol = ReductionSolution("pseudoforest", g_in.n, g_in.m, set(), bound_num=2, bound_den=9)

    token: dict[int, int] = {v: 0 for v in g.vertices()}
    heap: list[tuple[int, int, int]] = []

    def push(v: int) -> None:
        d = _match_at(g, v)
        if d is not None:
            heapq.heappush(heap, (d.rank, v, token[v]))

    for v in g.vertices():
        push(v)

    while heap:
        rank, v, tok = heapq.heappop(heap)
        if not g.has_vertex(v) or tok != token[v]:
            continue
        desc = _match_at(g, v)
        if desc is None:
            continue
        if desc.rank != rank:
            heapq.heappush(heap, (desc.rank, v, token[v]))
            continue
        if desc.label == FOUR_REG_C4:
            desc = _c4_payload(g)
        _, touched = apply_case(g, desc, sol)
        for x in _dirty_ball(g, touched):
            token[x] = token.get(x, 0) + 1
            push(x)

    if g.n != 0 or g.m != 0:
        raise CaseAnalysisIncomplete(f"reducer stalled with n={g.n}, m={g.m}")
    if not sol.bound_holds():
        raise BoundViolation(
            f"pseudoforest bound failed: 9*{len(sol.s)} < 9*{sol.n} - 2*{sol.m}"
        )
    if sol.edge_events != sol.m:
        raise CaseAnalysisIncomplete(
            f"consumed {sol.edge_events} edge units, input had {sol.m}"
        )
    if not aggregate_charge_ok(sol):
        raise BoundViolation("aggregate charge went negative")
    return sol
