import pytest
from hypothesis import given, settings, strategies as st

from planarize import generators as gen
from planarize.errors import LoopInInput, NoSuchEdge, UnknownVertex
from planarize.multigraph import MultiGraph, from_edge_list


def test_from_edge_list_path():
    g = from_edge_list([(0, 1), (1, 2)])
    assert (g.n, g.m) == (3, 2)


def test_from_edge_list_isolated_via_hint():
    g = from_edge_list([], n_hint=4)
    assert (g.n, g.m) == (4, 0)


def test_from_edge_list_collapses_duplicates():
    g = from_edge_list([(0, 1), (0, 1), (1, 0)])
    assert g.m == 1
    assert g.multiplicity(0, 1) == 1


def test_from_edge_list_rejects_loops():
    with pytest.raises(LoopInInput):
        from_edge_list([(2, 2)])


def test_delete_star_center():
    g = gen.complete_bipartite(1, 3)
    assert g.delete_vertex(0) == 3
    assert g.n == 3 and g.m == 0


def test_delete_from_k4_leaves_triangle():
    g = gen.complete(4)
    assert g.delete_vertex(0) == 3
    assert (g.n, g.m) == (3, 3)


def test_delete_counts_loop_once():
    g = MultiGraph()
    g.add_edge(0, 0)
    g.add_edge(0, 1)
    assert g.degree(0) == 3
    assert g.delete_vertex(0) == 2


def test_delete_unknown_vertex():
    g = from_edge_list([(0, 1)])
    with pytest.raises(UnknownVertex):
        g.delete_vertex(9)


def test_contract_path_edge():
    g = from_edge_list([(0, 1), (1, 2)])
    g.contract_edge(0, 1, 1)
    assert (g.n, g.m) == (2, 1)
    assert g.multiplicity(1, 2) == 1


def test_contract_triangle_creates_parallel_pair():
    g = gen.cycle(3)
    g.contract_edge(0, 1, 1)
    assert (g.n, g.m) == (2, 2)
    assert g.multiplicity(1, 2) == 2


def test_contract_k4_keeps_five_units():
    g = gen.complete(4)
    g.contract_edge(0, 1, 1)
    assert (g.n, g.m) == (3, 5)
    assert g.multiplicity(1, 2) == 2 and g.multiplicity(1, 3) == 2
    assert g.multiplicity(2, 3) == 1


def test_contract_parallel_pair_makes_loop():
    g = MultiGraph()
    g.add_edge(0, 1, 2)
    g.add_edge(1, 2)
    g.contract_edge(0, 1, 1)
    assert g.loops(1) == 1
    assert g.degree(1) == 3  # loop counts twice plus the edge to 2


def test_contract_missing_edge():
    g = from_edge_list([(0, 1), (2, 3)])
    with pytest.raises(NoSuchEdge):
        g.contract_edge(0, 2, 0)


def test_contract_survivor_keeps_origin():
    g = from_edge_list([(0, 1), (1, 2)])
    g.contract_edge(0, 1, 1)
    assert g.origin(1) == 1
    assert 0 not in g.origin_map()


def test_simplify_counts_units():
    g = MultiGraph()
    g.add_edge(0, 0)
    g.add_edge(1, 2, 3)
    assert g.simplify() == 3
    assert g.is_simple()


def test_simplify_noop_on_simple():
    g = gen.petersen()
    assert g.simplify() == 0


def test_simplify_dipole():
    g = MultiGraph()
    g.add_edge(0, 1, 3)
    assert g.simplify() == 2
    assert g.m == 1


def test_degree_and_regularity():
    assert gen.petersen().is_d_regular(3)
    assert gen.complete(5).components() == [[0, 1, 2, 3, 4]]
    g = MultiGraph()
    g.add_edge(0, 0)
    assert g.degree(0) == 2


def test_girth_values():
    assert gen.cycle(5).girth() == 5
    assert gen.path(6).girth() is None
    assert gen.petersen().girth() == 5
    loop = MultiGraph()
    loop.add_edge(0, 0)
    assert loop.girth() == 1
    par = MultiGraph()
    par.add_edge(0, 1, 2)
    assert par.girth() == 2


def _girth_by_cycle_enumeration(g):
    # Independent oracle: shortest cycle via DFS over all simple cycles.
    best = None
    verts = g.sorted_vertices()
    adj = {v: g.neighbors(v) for v in verts}

    def walk(start, v, visited, length):
        nonlocal best
        for w in adj[v]:
            if w == start and length >= 2:
                if best is None or length + 1 < best:
                    best = length + 1
            elif w > start and w not in visited:
                visited.add(w)
                walk(start, w, visited, length + 1)
                visited.discard(w)

    for s in verts:
        walk(s, s, {s}, 0)
    return best


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_girth_matches_enumeration_oracle(seed):
    import random

    rng = random.Random(seed)
    n = rng.randrange(3, 9)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    g = from_edge_list(edges, n)
    assert g.girth() == _girth_by_cycle_enumeration(g)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_invariants_hold_under_random_mutation(data):
    n = data.draw(st.integers(3, 9))
    edges = data.draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=20,
        )
    )
    g = from_edge_list(edges, n)
    g.check_invariants()
    for _ in range(data.draw(st.integers(0, 8))):
        op = data.draw(st.sampled_from(["delete", "contract", "simplify"]))
        verts = g.sorted_vertices()
        if not verts:
            break
        if op == "delete":
            v = data.draw(st.sampled_from(verts))
            n_before, m_before = g.n, g.m
            removed = g.delete_vertex(v)
            assert g.n == n_before - 1 and g.m == m_before - removed
        elif op == "contract":
            pairs = [(u, v) for u, v, _ in g.iter_edges() if u != v]
            if not pairs:
                continue
            u, v = data.draw(st.sampled_from(pairs))
            m_before = g.m
            g.contract_edge(u, v, v)
            assert g.m == m_before - 1
        else:
            g.simplify()
        g.check_invariants()
    origins = list(g.origin_map().values())
    assert len(set(origins)) == len(origins)
