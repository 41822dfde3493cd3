"""Treewidth-2 reducer.

After deleting vertices of degree 5 or more, the loop contracts an edge
at any vertex of degree 1 or 2 (adding the vertex to S and simplifying),
otherwise deletes a vertex of the largest degree adjacent to some
degree-3 vertex, otherwise deletes a maximum-degree vertex.  Isolated
vertices are harvested into S immediately.  The output satisfies
5 |S| >= 5 n - m and the input induced on S has treewidth at most 2.

The amortized accounting charges -5 per deleted vertex and +1 per edge
unit consumed (contracted, removed by simplification, or deleted with a
vertex); ``replay_trace_tw2`` recomputes it from the trace.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BoundViolation, CaseAnalysisIncomplete, GraphError
from .multigraph import MultiGraph
from .solution import ChargeReport, ReductionSolution, TraceStep, replay

PREPROCESS = "Preprocess"
CONTRACT_DEG12 = "ContractDeg12"
DELETE_ADJ_DEG3 = "DeleteAdjDeg3"
DELETE_MAX_DEG = "DeleteMaxDeg"
HARVEST = "HarvestIsolated"


def _require_simple(g: MultiGraph) -> None:
    if not g.is_simple():
        raise GraphError("reducer inputs must be simple graphs")


class _Buckets:
    """Degree-indexed lazy heaps over the working graph."""

    def __init__(self, g: MultiGraph) -> None:
        self.g = g
        self.h0: list[int] = []
        self.h12: list[int] = []
        self.h3_with4: list[int] = []
        self.h3: list[int] = []
        self.hmax: list[tuple[int, int]] = []  # (-degree, v)
        self.hpre: list[int] = []
        for v in g.vertices():
            self.push(v)

    def push(self, v: int) -> None:
        g = self.g
        if not g.has_vertex(v):
            return
        d = g.degree(v)
        if d >= 5:
            heapq.heappush(self.hpre, v)
        elif d == 0:
            heapq.heappush(self.h0, v)
        elif d <= 2:
            heapq.heappush(self.h12, v)
        elif d == 3:
            if any(g.degree(u) == 4 for u in g.neighbors(v)):
                heapq.heappush(self.h3_with4, v)
            heapq.heappush(self.h3, v)
        else:
            heapq.heappush(self.hmax, (-d, v))

    def pop_valid(self, heap: list, want) -> int | None:
        g = self.g
        while heap:
            item = heapq.heappop(heap)
            v = item if isinstance(item, int) else item[1]
            if g.has_vertex(v) and want(v):
                return v
        return None


def reduce_treewidth2(g_in: MultiGraph) -> ReductionSolution:
    """Compute S with 5 |S| >= 5 n - m and G_in[S] of treewidth <= 2."""
    _require_simple(g_in)
    g = g_in.copy()
    sol = ReductionSolution("tw2", g_in.n, g_in.m, set(), bound_num=1, bound_den=5)
    bk = _Buckets(g)

    def repush(vs) -> None:
        for v in vs:
            bk.push(v)

    while g.n > 0:
        v = bk.pop_valid(bk.hpre, lambda x: g.degree(x) >= 5)
        if v is not None:
            nbrs = g.neighbors(v)
            units = g.delete_vertex(v)
            sol.trace.append(TraceStep(PREPROCESS, deleted=(v,), removed_edges=units))
            repush(nbrs)
            # Second ring: a neighbor dropping from 5 to 4 can turn its
            # own degree-3 neighbors into deletion anchors.
            for x in nbrs:
                if g.has_vertex(x):
                    repush(g.neighbors(x))
            continue

        v = bk.pop_valid(bk.h0, lambda x: g.degree(x) == 0)
        if v is not None:
            orig = g.origin(v)
            g.delete_vertex(v)
            sol.s.add(orig)
            sol.trace.append(TraceStep(HARVEST, accepted=(v,), s_added=(orig,)))
            continue

        v = bk.pop_valid(bk.h12, lambda x: 1 <= g.degree(x) <= 2)
        if v is not None:
            u = g.neighbors(v)[0]
            affected = set(g.neighbors(v)) | set(g.neighbors(u)) | {u}
            orig = g.origin(v)
            g.contract_edge(v, u, u)
            cleaned = g.simplify_at(u)
            sol.s.add(orig)
            sol.trace.append(
                TraceStep(
                    CONTRACT_DEG12,
                    contracted=((v, u, u),),
                    removed_edges=1 + cleaned,
                    s_added=(orig,),
                    simplified=True,
                )
            )
            affected.discard(v)
            repush(x for x in affected if g.has_vertex(x))
            if g.has_vertex(u):
                repush(g.neighbors(u))
            continue

        # No low-degree vertices left: delete next to a degree-3 vertex if
        # one exists, preferring the globally largest adjacent degree.
        a = bk.pop_valid(bk.h3_with4, lambda x: g.degree(x) == 3
                         and any(g.degree(u) == 4 for u in g.neighbors(x)))
        if a is not None:
            heapq.heappush(bk.h3_with4, a)  # not consumed, only located
            b = min(u for u in g.neighbors(a) if g.degree(u) == 4)
            nbrs = g.neighbors(b)
            units = g.delete_vertex(b)
            sol.trace.append(TraceStep(DELETE_ADJ_DEG3, deleted=(b,), removed_edges=units))
            repush(nbrs)
            for x in nbrs:
                if g.has_vertex(x):
                    repush(g.neighbors(x))
            continue

        a = bk.pop_valid(bk.h3, lambda x: g.degree(x) == 3)
        if a is not None:
            heapq.heappush(bk.h3, a)
            if any(g.degree(u) == 4 for u in g.neighbors(a)):
                # Bucket bookkeeping missed a 3-next-to-4 pair; restore it
                # rather than deleting a degree-3 vertex out of turn.
                heapq.heappush(bk.h3_with4, a)
                continue
            b = min(g.neighbors(a))
            nbrs = g.neighbors(b)
            units = g.delete_vertex(b)
            sol.trace.append(TraceStep(DELETE_ADJ_DEG3, deleted=(b,), removed_edges=units))
            repush(nbrs)
            for x in nbrs:
                if g.has_vertex(x):
                    repush(g.neighbors(x))
            continue

        # Only degree-4 vertices remain once the earlier branches pass.
        v = bk.pop_valid(bk.hmax, lambda x: g.degree(x) == 4)
        if v is not None:
            nbrs = g.neighbors(v)
            units = g.delete_vertex(v)
            sol.trace.append(TraceStep(DELETE_MAX_DEG, deleted=(v,), removed_edges=units))
            repush(nbrs)
            for x in nbrs:
                if g.has_vertex(x):
                    repush(g.neighbors(x))
            continue

        raise CaseAnalysisIncomplete(f"no case matched with n={g.n}, m={g.m}")

    if not sol.bound_holds():
        raise BoundViolation(f"tw2 bound failed: 5*{len(sol.s)} < 5*{sol.n} - {sol.m}")
    if sol.edge_events != sol.m:
        raise CaseAnalysisIncomplete(
            f"consumed {sol.edge_events} edge units, input had {sol.m}"
        )
    return sol


@dataclass(frozen=True)
class Tw2ChargeReport:
    edge_events: int
    deletions: int
    total_charge: int  # edge_events - 5 * deletions

    @property
    def nonnegative(self) -> bool:
        return self.total_charge >= 0


def replay_trace_tw2(g_in: MultiGraph, sol: ReductionSolution) -> Tw2ChargeReport:
    """Re-run a tw2 trace against the input and recompute the charges.

    Raises TraceMismatch on any divergence (missing vertices, wrong edge
    counts, tampered steps).
    """
    base: ChargeReport = replay(g_in, sol)
    return Tw2ChargeReport(base.edge_events, base.deletions,
                           base.edge_events - 5 * base.deletions)
