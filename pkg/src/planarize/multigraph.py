"""Mutable undirected multigraph with contraction, the substrate for all reducers.

Adjacency is multiplicity keyed: ``adj[u][v]`` is the number of parallel
u-v edges, and a self loop is stored once at ``adj[v][v]``.  A loop
contributes 2 to the degree of its vertex but only 1 to the edge count.
Vertex ids are stable for the lifetime of a graph and never reused after
deletion.  Every surviving vertex carries the id of the original input
vertex it represents, so vertex sets computed on a mutated working copy
can be mapped back to the input graph.

Instances are single-owner: not safe for concurrent mutation, fine to
move between threads or to share read-only.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Iterator

from .errors import GraphError, LoopInInput, NoSuchEdge, UnknownVertex


class MultiGraph:
    __slots__ = ("_adj", "_deg", "_m", "_origin")

    def __init__(self) -> None:
        self._adj: dict[int, Counter] = {}
        self._deg: dict[int, int] = {}
        self._m: int = 0
        self._origin: dict[int, int] = {}

    # -- construction -------------------------------------------------

    def add_vertex(self, v: int, origin: int | None = None) -> None:
        if v < 0:
            raise GraphError(f"vertex ids must be non-negative, got {v}")
        if v not in self._adj:
            self._adj[v] = Counter()
            self._deg[v] = 0
            self._origin[v] = v if origin is None else origin

    def add_edge(self, u: int, v: int, count: int = 1) -> None:
        """Add ``count`` parallel u-v edges (or loops when u == v)."""
        if count <= 0:
            raise GraphError("edge count must be positive")
        self.add_vertex(u)
        self.add_vertex(v)
        if u == v:
            self._adj[u][u] += count
            self._deg[u] += 2 * count
        else:
            self._adj[u][v] += count
            self._adj[v][u] += count
            self._deg[u] += count
            self._deg[v] += count
        self._m += count

    # -- queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def vertices(self) -> Iterator[int]:
        return iter(self._adj)

    def sorted_vertices(self) -> list[int]:
        return sorted(self._adj)

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise UnknownVertex(f"vertex {v} not in graph")

    def degree(self, v: int) -> int:
        """Degree of v; a loop counts twice."""
        self._require(v)
        return self._deg[v]

    def unit_degree(self, v: int) -> int:
        """Number of edge units incident to v; a loop counts once."""
        self._require(v)
        return self._deg[v] - self._adj[v].get(v, 0)

    def multiplicity(self, u: int, v: int) -> int:
        self._require(u)
        self._require(v)
        return self._adj[u].get(v, 0)

    def loops(self, v: int) -> int:
        self._require(v)
        return self._adj[v].get(v, 0)

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbors of v in increasing id order, excluding v itself."""
        self._require(v)
        return sorted(u for u in self._adj[v] if u != v)

    def incidences(self, v: int) -> list[tuple[int, int]]:
        """(neighbor, multiplicity) pairs for v, loops included, sorted by id."""
        self._require(v)
        return sorted(self._adj[v].items())

    def iter_edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, multiplicity) with u <= v, sorted."""
        for u in sorted(self._adj):
            for v in sorted(self._adj[u]):
                if u <= v:
                    yield u, v, self._adj[u][v]

    def is_simple(self) -> bool:
        for u, adj in self._adj.items():
            for v, c in adj.items():
                if u == v or c > 1:
                    return False
        return True

    def max_degree(self) -> int:
        return max(self._deg.values(), default=0)

    def origin(self, v: int) -> int:
        self._require(v)
        return self._origin[v]

    def origin_map(self) -> dict[int, int]:
        return dict(self._origin)

    # -- mutation -----------------------------------------------------

    def remove_edge(self, u: int, v: int, count: int = 1) -> None:
        self._require(u)
        self._require(v)
        have = self._adj[u].get(v, 0)
        if have < count:
            raise NoSuchEdge(f"cannot remove {count} copies of ({u},{v}); have {have}")
        if u == v:
            self._adj[u][u] -= count
            if self._adj[u][u] == 0:
                del self._adj[u][u]
            self._deg[u] -= 2 * count
        else:
            self._adj[u][v] -= count
            self._adj[v][u] -= count
            if self._adj[u][v] == 0:
                del self._adj[u][v]
                del self._adj[v][u]
            self._deg[u] -= count
            self._deg[v] -= count
        self._m -= count

    def delete_vertex(self, v: int) -> int:
        """Remove v and all incident edges; return removed edge units (loop = 1)."""
        self._require(v)
        removed = 0
        for u, c in list(self._adj[v].items()):
            if u == v:
                removed += c
                self._m -= c
            else:
                removed += c
                self._m -= c
                del self._adj[u][v]
                self._deg[u] -= c
        del self._adj[v]
        del self._deg[v]
        del self._origin[v]
        return removed

    def contract_edge(self, u: int, v: int, survivor: int) -> None:
        """Contract one copy of edge (u, v) into ``survivor``.

        The non-survivor's other incident edges re-attach to the survivor;
        extra parallel (u, v) copies become loops at the survivor, and loops
        of the non-survivor move to the survivor.  Exactly one edge unit
        disappears.  The survivor keeps its own origin.
        """
        self._require(u)
        self._require(v)
        if u == v:
            raise NoSuchEdge("cannot contract a loop")
        if survivor not in (u, v):
            raise GraphError(f"survivor {survivor} must be one of ({u}, {v})")
        mult = self._adj[u].get(v, 0)
        if mult == 0:
            raise NoSuchEdge(f"no edge ({u},{v}) to contract")
        gone = u if survivor == v else v

        # Detach the (u, v) bundle first: one copy vanishes, the rest loop.
        self._adj[survivor].pop(gone, None)
        self._adj[gone].pop(survivor, None)
        self._deg[survivor] -= mult
        self._deg[gone] -= mult
        self._m -= 1
        extra = mult - 1
        if extra:
            self._adj[survivor][survivor] += extra
            self._deg[survivor] += 2 * extra

        # Re-attach everything else incident to the vanishing vertex.
        for w, c in list(self._adj[gone].items()):
            if w == gone:
                self._adj[survivor][survivor] += c
                self._deg[survivor] += 2 * c
            else:
                self._adj[w][survivor] += c
                self._adj[survivor][w] += c
                self._deg[survivor] += c
                del self._adj[w][gone]
        del self._adj[gone]
        del self._deg[gone]
        del self._origin[gone]

    def simplify(self) -> int:
        """Remove all loops and surplus parallel copies; return removed units."""
        removed = 0
        for v in list(self._adj):
            loops = self._adj[v].get(v, 0)
            if loops:
                self.remove_edge(v, v, loops)
                removed += loops
        for u in list(self._adj):
            for v, c in list(self._adj[u].items()):
                if u < v and c > 1:
                    self.remove_edge(u, v, c - 1)
                    removed += c - 1
        return removed

    def simplify_at(self, v: int) -> int:
        """Remove loops at v and surplus copies on v's incident pairs.

        After contracting into v this is a full simplification, since
        contraction can only create multiplicities at the survivor.
        """
        self._require(v)
        removed = 0
        loops = self._adj[v].get(v, 0)
        if loops:
            self.remove_edge(v, v, loops)
            removed += loops
        for u, c in list(self._adj[v].items()):
            if u != v and c > 1:
                self.remove_edge(v, u, c - 1)
                removed += c - 1
        return removed

    # -- structure ----------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest id."""
        seen: set[int] = set()
        comps: list[list[int]] = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def component_of(self, v: int) -> list[int]:
        self._require(v)
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def is_d_regular(self, d: int) -> bool:
        return all(deg == d for deg in self._deg.values())

    def girth(self) -> int | None:
        """Length of the shortest cycle, or None if the graph is acyclic.

        A loop is a cycle of length 1 and a parallel pair a cycle of
        length 2; otherwise a breadth-first search from every vertex finds
        the exact girth of the underlying simple graph.
        """
        best: int | None = None
        for v, adj in self._adj.items():
            if adj.get(v, 0):
                return 1
            for u, c in adj.items():
                if u != v and c > 1:
                    best = 2
        if best == 2:
            return 2
        for source in self._adj:
            dist = {source: 0}
            parent = {source: -1}
            queue = deque([source])
            while queue:
                x = queue.popleft()
                if best is not None and 2 * dist[x] >= best:
                    break
                for y in self._adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif y != parent[x]:
                        cycle = dist[x] + dist[y] + 1
                        if best is None or cycle < best:
                            best = cycle
            if best == 3:
                return 3
        return best

    # -- bookkeeping --------------------------------------------------

    def copy(self) -> "MultiGraph":
        g = MultiGraph()
        g._adj = {v: Counter(adj) for v, adj in self._adj.items()}
        g._deg = dict(self._deg)
        g._m = self._m
        g._origin = dict(self._origin)
        return g

    def check_invariants(self) -> None:
        """Debug audit: symmetry, degree and edge-count consistency, origins."""
        total = 0
        for v, adj in self._adj.items():
            deg = 0
            for u, c in adj.items():
                if c <= 0:
                    raise GraphError(f"non-positive multiplicity at ({v},{u})")
                if u == v:
                    deg += 2 * c
                    total += 2 * c
                else:
                    deg += c
                    total += c
                    if self._adj.get(u, Counter()).get(v, 0) != c:
                        raise GraphError(f"asymmetric adjacency at ({v},{u})")
            if deg != self._deg[v]:
                raise GraphError(f"cached degree wrong at {v}")
        if total != 2 * self._m:
            raise GraphError("edge count inconsistent with degrees")
        if set(self._origin) != set(self._adj):
            raise GraphError("origin map does not cover the vertex set")
        origins = list(self._origin.values())
        if len(set(origins)) != len(origins):
            raise GraphError("two working vertices share an original")

    def __repr__(self) -> str:  # pragma: no cover
        return f"MultiGraph(n={self.n}, m={self.m})"


def from_edge_list(edges: Iterable[tuple[int, int]], n_hint: int = 0) -> MultiGraph:
    """Build a simple graph from integer pairs; duplicates collapse.

    Raises LoopInInput on a u == u pair.  ``n_hint`` forces at least that
    many vertices (labels 0..n_hint-1) so isolated vertices survive.
    """
    g = MultiGraph()
    for i in range(n_hint):
        g.add_vertex(i)
    for u, v in edges:
        if u == v:
            raise LoopInInput(f"self loop at vertex {u}")
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex label in edge ({u},{v})")
        g.add_vertex(u)
        g.add_vertex(v)
        if g.multiplicity(u, v) == 0:
            g.add_edge(u, v)
    return g
