from itertools import product

import pytest
from hypothesis import given, strategies as st

from heawood.coloring import (
    ColoringCheckError, ListAssignment, PreconditionError, check_coloring, chromatic_number,
    degree_order_color, find_f_bad_clique, greedy_extend, is_colorable, is_gallai_tree,
    k_coloring, solve_list_coloring,
)
from heawood.constructions import complete_minus
from heawood.graph import Graph, GraphError, join
from strategies import connected_graphs, graphs, list_assignments


def naive_colorable(g, lists):
    return any(all(c[u] != c[v] for u, v in g.edges)
               for c in product(*[sorted(L) for L in lists]))


def test_list_assignment_basics():
    L = ListAssignment([[1, 2], [3], []])
    assert L.sizes() == [2, 1, 0]
    assert L.palette() == {1, 2, 3}
    assert L.restrict([2, 0]).sizes() == [2, 0]
    assert L.relabel_colors({1: 5, 2: 6, 3: 7})[0] == {5, 6}
    with pytest.raises(ValueError):
        ListAssignment([[-1]])


def test_check_coloring_reports_problems():
    g = Graph.path(3)
    L = ListAssignment([[0, 1]] * 3)
    assert check_coloring(g, L, [0, 1, 0]) == []
    assert check_coloring(g, L, [0, 0, 1])
    assert check_coloring(g, L, [0, 2, 0])
    assert check_coloring(g, L, [0, None, 0])
    assert check_coloring(g, L, [0, None, 0], partial=True) == []


def test_solver_examples():
    assert solve_list_coloring(Graph.complete(4), ListAssignment.uniform(4, 3)) is None
    for h in (6, 7):
        g = complete_minus(h, [(0, 1), (2, 3)])
        c = solve_list_coloring(g, ListAssignment.uniform(h, h - 2))
        assert c is not None and check_coloring(g, ListAssignment.uniform(h, h - 2), c) == []
    k5c5 = join(Graph.complete(5), Graph.cycle(5))
    assert solve_list_coloring(k5c5, ListAssignment.uniform(10, 7)) is None
    assert chromatic_number(k5c5) == 8


def test_solver_empty_list_unsatisfiable():
    assert solve_list_coloring(Graph(2), ListAssignment([[0], []])) is None


def test_solver_size_mismatch():
    with pytest.raises(ValueError):
        solve_list_coloring(Graph(3), ListAssignment([[0]]))


@given(st.data())
def test_solver_matches_naive_enumeration(data):
    g = data.draw(graphs(max_n=6))
    L = data.draw(list_assignments(g.n, max_size=4, palette=5))
    c = solve_list_coloring(g, L)
    assert (c is not None) == naive_colorable(g, L)
    if c is not None:
        assert check_coloring(g, L, c) == []


@pytest.mark.parametrize("g,chi", [(Graph.complete(5), 5), (Graph.cycle(5), 3), (Graph.cycle(6), 2),
                                   (Graph(3), 1), (Graph(0), 0)])
def test_chromatic_number(g, chi):
    assert chromatic_number(g) == chi
    if g.n:
        assert is_colorable(g, chi) and not is_colorable(g, chi - 1)
        assert k_coloring(g, chi) is not None


def test_greedy_extend_star():
    star = Graph(5, [(0, v) for v in range(1, 5)])
    L = ListAssignment([[0]] + [[0, 1]] * 4)
    r = greedy_extend(star, L, [0, None, None, None, None], [1, 2, 3, 4])
    assert r and r.coloring == (0, 1, 1, 1, 1)


def test_greedy_extend_failure_witness():
    g = Graph.path(2)
    r = greedy_extend(g, ListAssignment([[3], [3]]), [3, None], [1])
    assert not r
    assert r.stuck_vertex == 1 and r.blocked == {3}


def test_greedy_extend_tail_of_near_complete():
    # K8 minus a perfect matching: v1, v2 nonadjacent share a color, the rest follow greedily
    h = 7
    g = complete_minus(h + 1, [(0, 1), (2, 3), (4, 5), (6, 7)])
    L = ListAssignment.uniform(h + 1, h)
    r = greedy_extend(g, L, [0, 0] + [None] * (h - 1), list(range(2, h + 1)))
    assert r


def test_greedy_extend_rejects_bad_partial():
    g = Graph.path(2)
    with pytest.raises(PreconditionError):
        greedy_extend(g, ListAssignment([[0], [0]]), [0, 0], [])
    with pytest.raises(PreconditionError):
        greedy_extend(g, ListAssignment([[0], [1]]), [None, None], [0])


@given(st.data())
def test_greedy_extend_degeneracy_guarantee(data):
    g = data.draw(graphs(max_n=8))
    order = data.draw(st.permutations(range(g.n)))
    pos = {v: k for k, v in enumerate(order)}
    sizes = [sum(1 for u in g.neighbors(v) if pos[u] < pos[v]) + 1 for v in range(g.n)]
    L = ListAssignment([data.draw(st.sets(st.integers(0, 9), min_size=s, max_size=s)) for s in sizes])
    assert greedy_extend(g, L, [None] * g.n, order)


def test_degree_order_color_examples():
    c4_plus = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    L = ListAssignment([[0, 1, 2]] * 5)
    assert check_coloring(c4_plus, L, degree_order_color(c4_plus, L)) == []

    # 8 vertices, 6-lists, at most 6 vertices of degree >= 6
    g = join(Graph.complete(4), Graph(4, [(0, 1), (2, 3)]))
    g = Graph(8, [e for e in g.edges if not (e[0] < 4 <= e[1] and (e[0] + e[1]) % 2)])
    L = ListAssignment([range(k, k + 6) for k in range(8)])
    assert check_coloring(g, L, degree_order_color(g, L)) == []


def test_degree_order_color_preconditions():
    with pytest.raises(PreconditionError, match="degree"):
        degree_order_color(Graph.complete(5), ListAssignment.uniform(5, 3))
    with pytest.raises(PreconditionError, match="lists smaller"):
        degree_order_color(Graph(5), ListAssignment.uniform(5, 2))
    with pytest.raises(PreconditionError):
        degree_order_color(Graph(2), ListAssignment.uniform(2, 2))


@given(st.data())
def test_degree_order_color_never_fails(data):
    k = data.draw(st.integers(3, 9))
    g = data.draw(graphs(min_n=k, max_n=k))
    if sum(1 for d in g.degrees() if d >= k - 2) > k - 2:
        return
    L = data.draw(list_assignments(k, max_size=k - 2, min_size=k - 2, palette=k + 3))
    assert check_coloring(g, L, degree_order_color(g, L)) == []


def test_colorings_are_verified():
    # the internal checker raises rather than letting an improper coloring through
    from heawood.coloring import _verified
    with pytest.raises(ColoringCheckError):
        _verified(Graph.path(2), None, [1, 1])


@pytest.mark.parametrize("g,expected", [
    (Graph.cycle(5), True),
    (Graph.cycle(4), False),
    (Graph(7, [(a, b) for a in range(4) for b in range(a + 1, 4)]
           + [(a, b) for a in (3, 4, 5, 6) for b in (3, 4, 5, 6) if a < b]), True),
    (Graph.path(5), True),
    (Graph(1), True),
    (Graph.complete(4).remove_edge(0, 1), False),
])
def test_gallai_tree_examples(g, expected):
    assert is_gallai_tree(g) is expected


def test_gallai_tree_requires_connected():
    with pytest.raises(GraphError):
        is_gallai_tree(Graph(2))


def test_f_bad_clique():
    k5 = Graph.complete(5)
    assert find_f_bad_clique(k5, range(5), 1) == [0, 1, 2, 3, 4]
    assert find_f_bad_clique(k5, range(4), 1) is None
    assert find_f_bad_clique(Graph.complete(6), range(6), 2) is not None
    g = join(Graph(1), Graph.complete(5))
    assert find_f_bad_clique(g, [1, 2, 3, 4, 5], 1) == [1, 2, 3, 4, 5]


@given(connected_graphs(max_n=7))
def test_gallai_tree_blocks_are_complete_or_odd_cycles(g):
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    expected = True
    for comp in nx.biconnected_components(h):
        sub = h.subgraph(comp)
        m, e = sub.number_of_nodes(), sub.number_of_edges()
        if not (e == m * (m - 1) // 2 or (m % 2 == 1 and e == m)):
            expected = False
    assert is_gallai_tree(g) == expected
