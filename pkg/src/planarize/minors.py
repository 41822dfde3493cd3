"""Spanning-tree level contraction for high-girth graphs.

Builds a breadth-first spanning tree, keeps the root plus every
``ell``-th distance level starting at the best offset (ell is
(girth - 3) // 4), and contracts every other vertex into its tree
parent.  On a connected simple graph of girth at least 7 the result is
a simple minor with n' <= ceil(n / ell) + 1 vertices and exactly
m - n + n' edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import Disconnected, GraphError, InsufficientGirth
from .multigraph import MultiGraph


@dataclass(frozen=True)
class MinorResult:
    minor: MultiGraph
    ell: int
    offset_a: int
    kept: tuple[int, ...]
    n_prime: int
    m_prime: int
    input_n: int
    input_m: int
    input_girth: int


def level_contract(g: MultiGraph, root: int | None = None) -> MinorResult:
    """Contract a connected simple graph of girth >= 7 along BFS-tree edges.

    Raises InsufficientGirth when the girth is below 7 or undefined
    (acyclic input), and Disconnected for disconnected input.
    """
    if not g.is_simple():
        raise GraphError("level contraction expects a simple graph")
    if g.n == 0:
        raise Disconnected("empty graph")
    comps = g.components()
    if len(comps) != 1:
        raise Disconnected(f"input has {len(comps)} components")
    girth = g.girth()
    if girth is None:
        raise InsufficientGirth("acyclic input has no cycle to protect the contraction")
    ell = (girth - 3) // 4
    if ell < 1:
        raise InsufficientGirth(f"girth {girth} gives level stride 0; need girth >= 7")

    if root is None:
        root = min(g.vertices())
    elif not g.has_vertex(root):
        raise GraphError(f"root {root} not in graph")

    # Breadth-first levels and parents, deterministic by id order.
    level = {root: 0}
    parent: dict[int, int] = {}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in level:
                level[y] = level[x] + 1
                parent[y] = x
                queue.append(y)

    max_level = max(level.values())
    sizes = [0] * (max_level + 1)
    for v, lv in level.items():
        sizes[lv] += 1

    best_a = 0
    best_size: int | None = None
    for a in range(ell):
        size = sum(sizes[lv] for lv in range(a, max_level + 1, ell))
        if a != 0:
            size += 1  # the root is kept regardless of offset
        if best_size is None or size < best_size:
            best_size, best_a = size, a

    kept = {root} | {
        v for v, lv in level.items() if lv >= best_a and (lv - best_a) % ell == 0
    }

    # Contract deepest levels first so every parent is still alive.
    work = g.copy()
    for v in sorted(set(level) - kept, key=lambda x: (-level[x], x)):
        work.contract_edge(parent[v], v, parent[v])

    n_prime, m_prime = work.n, work.m
    if not work.is_simple():
        raise GraphError("contraction produced loops or parallels; girth bound violated")
    if m_prime != g.m - g.n + n_prime:
        raise GraphError(
            f"edge identity failed: m'={m_prime}, expected {g.m - g.n + n_prime}"
        )
    if n_prime > -(-g.n // ell) + 1:
        raise GraphError(f"kept-set bound failed: n'={n_prime} > ceil(n/ell)+1")
    return MinorResult(
        minor=work,
        ell=ell,
        offset_a=best_a,
        kept=tuple(sorted(kept)),
        n_prime=n_prime,
        m_prime=m_prime,
        input_n=g.n,
        input_m=g.m,
        input_girth=girth,
    )


@dataclass(frozen=True)
class DensityReport:
    n_prime: int
    m_prime: int
    surplus: int  # m' - n'
    ratio_surplus_g_over_n: float
    five_n_over_g: float


def verify_minor_density(result: MinorResult) -> DensityReport:
    """Measured quantities for experiment logs: the edge surplus of the
    minor and how it compares against n/g scaling."""
    surplus = result.m_prime - result.n_prime
    ratio = surplus * result.input_girth / result.input_n if result.input_n else 0.0
    return DensityReport(
        n_prime=result.n_prime,
        m_prime=result.m_prime,
        surplus=surplus,
        ratio_surplus_g_over_n=ratio,
        five_n_over_g=5 * result.input_n / result.input_girth,
    )
