from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from heawood.graph import (
    Graph, GraphError, bits, block_cut_tree, clique_number, complement, contains_clique,
    disjoint_union, genus_lower_bound_blocks, induced_subgraph, join, mask_of,
)
from strategies import connected_graphs, graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def chain_of_cliques(sizes, closing_cycle=False):
    """Complete graphs glued one after another at single vertices."""
    edges, offset, prev_last = [], 0, None
    for m in sizes:
        verts = list(range(offset, offset + m))
        if prev_last is not None:
            verts[0] = prev_last
        edges += [(min(a, b), max(a, b)) for a, b in combinations(verts, 2)]
        prev_last = verts[-1]
        offset = max(verts) + 1
    return Graph(offset, sorted(set(edges)))


def test_constructor_validation():
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(-1)


def test_basic_queries():
    g = Graph.cycle(5)
    assert (g.n, g.e) == (5, 5)
    assert g.degrees() == [2] * 5
    assert g.neighbors(0) == [1, 4]
    assert g.has_edge(4, 0) and not g.has_edge(0, 2)
    assert g.is_connected()
    assert not Graph(0).is_connected()
    assert Graph(4, [(0, 1), (2, 3)]).components() == [[0, 1], [2, 3]]


def test_bits_and_masks():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110


def test_induced_subgraph_examples():
    assert induced_subgraph(Graph.complete(5), [0, 2, 4]) == Graph.complete(3)
    k6e = Graph.complete(6).remove_edge(0, 1)
    assert induced_subgraph(k6e, [0, 1, 2]) == Graph(3, [(0, 2), (1, 2)])
    k5c5 = join(Graph.complete(5), Graph.cycle(5))
    assert induced_subgraph(k5c5, range(5, 10)) == Graph.cycle(5)
    with pytest.raises(GraphError):
        induced_subgraph(k5c5, [10])


def test_complement_examples():
    assert complement(Graph.complete(4)) == Graph(4)
    c5 = Graph.cycle(5)
    assert complement(c5) == Graph.cycle(5, [0, 2, 4, 1, 3])
    assert nx.is_isomorphic(to_nx(complement(c5)), to_nx(c5))


@given(graphs(max_n=9))
def test_complement_involution_and_degrees(g):
    c = complement(g)
    assert complement(c) == g
    assert all(c.degree(v) == g.n - 1 - g.degree(v) for v in range(g.n))


def test_join_examples():
    assert join(Graph.complete(2), Graph.complete(3)) == Graph.complete(5)
    k5c5 = join(Graph.complete(5), Graph.cycle(5))
    assert (k5c5.n, k5c5.e) == (10, 40)
    # K2 joined with the 4-cycle (a, c, b, d) is K6 minus {ab, cd}
    a, b, c, d = 2, 3, 4, 5
    c4 = Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])  # a=0, b=1, c=2, d=3 in local labels
    expected = Graph.complete(6).remove_edge(a, b).remove_edge(c, d)
    assert join(Graph.complete(2), c4) == expected


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_degree_law(g1, g2):
    j = join(g1, g2)
    assert j.n == g1.n + g2.n
    assert j.e == g1.e + g2.e + g1.n * g2.n
    assert all(j.degree(v) == g1.degree(v) + g2.n for v in range(g1.n))
    assert all(j.degree(g1.n + v) == g2.degree(v) + g1.n for v in range(g2.n))


def test_disjoint_union():
    u = disjoint_union(Graph.complete(3), Graph.path(2))
    assert (u.n, u.e) == (5, 4) and not u.is_connected()


def test_remove_and_relabel():
    g = Graph.path(4)
    assert g.remove_edge(1, 2).e == 2
    with pytest.raises(GraphError):
        g.remove_edge(0, 2)
    assert g.remove_vertex(0) == Graph.path(3)
    assert g.relabel([3, 2, 1, 0]) == g


def test_bct_two_triangles():
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bct = block_cut_tree(g)
    assert len(bct.blocks) == 2 and bct.cutvertices == {2}
    assert bct.is_forest()


def test_bct_path():
    bct = block_cut_tree(Graph.path(4))
    assert len(bct.blocks) == 3 and bct.cutvertices == {1, 2}
    assert all(len(es) == 1 for es in bct.block_edges)


def test_bct_branching_cutvertex():
    # three K5s sharing one cutvertex, plus an odd cycle hanging off another vertex
    edges = set()
    for base in (1, 5, 9):
        verts = [0] + list(range(base, base + 4))
        edges |= {(min(a, b), max(a, b)) for a, b in combinations(verts, 2)}
    edges |= {(1, 13), (13, 14), (1, 14)}
    bct = block_cut_tree(Graph(15, sorted(edges)))
    assert bct.degree(("C", 0)) == 3
    assert bct.is_forest() and bct.connected
    assert sum(len(es) for es in bct.block_edges) == len(edges)


def test_bct_disconnected_flagged():
    bct = block_cut_tree(Graph(4, [(0, 1)]))
    assert not bct.connected
    assert bct.is_forest()


@given(graphs(max_n=9))
def test_bct_invariants(g):
    bct = block_cut_tree(g)
    assert sum(len(es) for es in bct.block_edges) == g.e
    seen = [e for es in bct.block_edges for e in es]
    assert sorted(seen) == sorted(g.edges)
    assert bct.is_forest()
    for b, c in bct.edges:
        assert c in bct.blocks[b]
    for k, verts in enumerate(bct.blocks):
        for c in bct.cutvertices & verts:
            assert (k, c) in bct.edges
    assert bct.cutvertices == set(nx.articulation_points(to_nx(g)))


def test_contains_clique_examples():
    assert contains_clique(Graph.complete(6).remove_edge(0, 1), 5) is not None
    assert contains_clique(join(Graph.complete(5), Graph.cycle(5)), 8) is None
    assert contains_clique(Graph.cycle(5), 3) is None
    with pytest.raises(GraphError):
        contains_clique(Graph.cycle(5), 0)


@given(graphs(max_n=10), st.integers(1, 6))
def test_contains_clique_matches_enumeration(g, m):
    found = contains_clique(g, m)
    exists = any(g.is_clique(c) for c in combinations(range(g.n), m))
    assert (found is not None) == exists
    if found is not None:
        assert len(found) == m and g.is_clique(found)


@given(graphs(max_n=10))
def test_clique_number_matches_networkx(g):
    expected = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert clique_number(g) == expected


def test_genus_lower_bound_blocks():
    assert genus_lower_bound_blocks(chain_of_cliques([5, 5, 5])) == 3
    assert genus_lower_bound_blocks(chain_of_cliques([7, 7, 7])) == 6
    assert genus_lower_bound_blocks(Graph.path(6)) == 0
    assert genus_lower_bound_blocks(Graph.cycle(7)) == 0


@given(connected_graphs(max_n=8))
def test_genus_lower_bound_nonnegative(g):
    assert genus_lower_bound_blocks(g) >= 0
