from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from pitvd.multigraph import MultiGraph


def build(edges, vertices=()):
    return MultiGraph.from_edges(edges, vertices=vertices)


def test_add_and_query_edges():
    g = build([(0, 1), (1, 2, 3)])
    assert g.vertices == [0, 1, 2]
    assert g.multiplicity(0, 1) == 1
    assert g.multiplicity(1, 2) == 3
    assert g.multiplicity(0, 2) == 0
    assert g.has_edge(1, 2) and not g.has_edge(0, 2)
    assert g.degree(1) == 4
    assert g.simple_degree(1) == 2
    assert g.edge_count == 4
    assert g.distinct_edge_count == 2


def test_from_edges_accumulates_duplicates():
    g = build([(0, 1), (1, 0), (0, 1, 2)])
    assert g.multiplicity(0, 1) == 4


def test_self_loop_rejected():
    g = build([(0, 1)])
    with pytest.raises(ValueError):
        g.add_edge(1, 1)


def test_nonpositive_multiplicity_rejected():
    g = build([(0, 1)])
    with pytest.raises(ValueError):
        g.add_edge(0, 1, 0)
    with pytest.raises(ValueError):
        g.add_edge(0, 1, -2)


def test_missing_endpoint_rejected():
    g = build([(0, 1)])
    with pytest.raises(KeyError):
        g.add_edge(0, 7)


def test_set_multiplicity_zero_removes():
    g = build([(0, 1, 2)])
    g.set_multiplicity(0, 1, 0)
    assert not g.has_edge(0, 1)
    assert g.neighbors(0) == []


def test_fresh_ids_never_reused():
    g = build([(0, 1), (1, 2)])
    g.delete_vertex(2)
    assert g.add_vertex() == 3
    g2 = MultiGraph()
    a = g2.add_vertex()
    b = g2.add_vertex()
    assert (a, b) == (0, 1)


def test_delete_vertex_clears_incidence():
    g = build([(0, 1), (1, 2), (0, 2)])
    g.delete_vertex(1)
    assert g.vertices == [0, 2]
    assert g.neighbors(0) == [2]
    assert g.edge_count == 1


def test_components_and_induced():
    g = build([(0, 1), (2, 3), (3, 4)], vertices=[5])
    assert g.components() == [[0, 1], [2, 3, 4], [5]]
    sub = g.induced([2, 3, 4])
    assert sub.vertices == [2, 3, 4]
    assert sub.has_edge(2, 3) and sub.has_edge(3, 4) and not sub.has_edge(2, 4)
    # induced copy preserves the id counter of the parent
    assert sub.add_vertex() == 6


def test_is_tree_and_forest():
    path = build([(0, 1), (1, 2)])
    assert path.is_tree()
    assert path.is_forest()
    cyc = build([(0, 1), (1, 2), (0, 2)])
    assert not cyc.is_tree()
    double = build([(0, 1, 2)])
    assert not double.is_tree()  # parallel edges mean not simple
    two_comp = build([(0, 1), (2, 3)])
    assert not two_comp.is_tree()
    assert two_comp.is_forest()
    assert two_comp.is_tree([0, 1])


def test_attach_tail():
    g = build([(0, 1)])
    new = g.attach_tail(1, 3)
    assert len(new) == 3
    assert g.simple_degree(new[0]) == 2
    assert g.simple_degree(new[-1]) == 1


def test_is_simple_and_double_edges():
    g = build([(0, 1), (1, 2, 2)])
    assert not g.is_simple
    assert g.double_edges() == [(1, 2)]
    g.set_multiplicity(1, 2, 1)
    assert g.is_simple


def test_compact_view():
    g = build([(10, 20), (20, 30, 2)], vertices=[40])
    ids, index, masks = g.compact()
    assert ids == [10, 20, 30, 40]
    assert index == {10: 0, 20: 1, 30: 2, 40: 3}
    assert masks[index[20]] == (1 << index[10]) | (1 << index[30])
    assert masks[index[40]] == 0


def test_equality_ignores_insertion_order():
    a = build([(0, 1), (1, 2)])
    b = build([(1, 2), (0, 1)])
    assert a == b
    b.add_edge(0, 1)
    assert a != b


# -- degree-2 path decomposition --------------------------------------------

def kinds(g):
    return [(p.kind, p.vertices) for p in g.find_degree2_paths()]


def test_deg2_pure_path_component():
    g = build([(1, 2), (2, 3), (3, 4), (4, 5)])
    assert kinds(g) == [("other", (1, 2, 3, 4, 5))]


def test_deg2_tail_on_claw():
    # claw center 0 with one leg subdivided twice
    g = build([(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
    paths = g.find_degree2_paths()
    assert ("tail", (0, 3, 4, 5)) in kinds(g)
    assert all(p.kind == "tail" or len(p.vertices) <= 3 for p in paths)


def test_deg2_overbridge():
    # two hubs joined by a subdivided edge
    edges = [(0, 1), (0, 2), (0, 3), (7, 8), (7, 9), (7, 10), (3, 5), (5, 6), (6, 7)]
    g = build(edges)
    assert ("overbridge", (0, 3, 5, 6, 7)) in kinds(g)


def test_deg2_overbridge_between_high_degree():
    g = build([(0, 1), (0, 2), (0, 9), (9, 3), (3, 8), (8, 4), (8, 5), (8, 6)])
    assert ("overbridge", (0, 9, 3, 8)) in kinds(g)


def test_deg2_pure_cycle_rotated_to_min():
    g = build([(4, 7), (7, 5), (5, 9), (9, 4)])
    (path,) = g.find_degree2_paths()
    assert path.kind == "other"
    assert path.vertices[0] == 4
    assert set(path.vertices) == {4, 5, 7, 9}


def test_deg2_anchored_cycle():
    # cycle hanging off a hub: anchor listed first, not duplicated
    g = build([(0, 1), (0, 2), (0, 8), (0, 3), (3, 4), (4, 5), (5, 0)])
    hit = [p for p in g.find_degree2_paths() if len(p.vertices) == 4]
    assert len(hit) == 1
    assert hit[0].vertices[0] == 0
    assert hit[0].kind == "other"
    assert sorted(hit[0].vertices) == [0, 3, 4, 5]


def test_deg2_double_edge_blocks_chain():
    # a vertex incident to a parallel edge is never a chain interior
    g = build([(0, 1), (1, 2, 2), (2, 3), (3, 4)])
    for p in g.find_degree2_paths():
        assert 1 not in p.vertices[1:-1]
        assert 2 not in p.vertices[1:-1]


def test_deg2_isolated_and_k2_skipped():
    g = build([(0, 1)], vertices=[9])
    assert g.find_degree2_paths() == []


@given(st.integers(0, 2 ** 15 - 1))
def test_deg2_paths_cover_each_chain_vertex_once(code):
    # random simple graph on 6 vertices; every degree-2 chain vertex must
    # appear in exactly one reported path, always as an interior or endpoint
    edges = []
    i = 0
    for u in range(6):
        for v in range(u + 1, 6):
            if (code >> i) & 1:
                edges.append((u, v))
            i += 1
    g = build(edges, vertices=range(6))
    chain = {v for v in g.vertices
             if g.simple_degree(v) == 2 and g.degree(v) == 2}
    seen: dict[int, int] = {}
    for p in g.find_degree2_paths():
        inner = [v for v in p.vertices if v in chain]
        for v in inner:
            seen[v] = seen.get(v, 0) + 1
        # consecutive vertices really are edges
        for a, b in zip(p.vertices, p.vertices[1:]):
            assert g.has_edge(a, b)
    assert seen.keys() == chain
    assert all(c == 1 for c in seen.values())
