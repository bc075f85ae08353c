import random
from itertools import permutations, product
from math import factorial, prod

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from heawood.coloring import ListAssignment
from heawood.constructions import projective_k5, projective_k6, torus_k7
from heawood.embedding import (
    EmbeddingError, RotationEmbedding, delete_vertex, distinguished_face, embedding_from_triangles,
    euler_genus, normalize_signs, random_embedding, search_embedding, switch_vertex, trace_faces,
    validate_theorem_instance,
)
from heawood.genus import min_genus_complete
from heawood.graph import Graph
from heawood.verify import cycle_embedding, planar_k4, random_connected_graph
from strategies import connected_graphs


@st.composite
def embeddings(draw, max_n=7, signed=True):
    g = draw(connected_graphs(max_n=max_n))
    rnd = draw(st.randoms(use_true_random=False))
    return random_embedding(g, rnd, signed=signed and draw(st.booleans()))


def rotations(g):
    """Every orientable rotation system of g (first neighbour fixed at each vertex)."""
    per_vertex = []
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) <= 2:
            per_vertex.append([tuple(nb)])
        else:
            per_vertex.append([(nb[0],) + p for p in permutations(nb[1:])])
    for rot in product(*per_vertex):
        yield RotationEmbedding(g, rot)


def test_planar_k4():
    emb = planar_k4()
    faces = trace_faces(emb)
    assert len(faces) == 4 and all(f.length == 3 for f in faces)
    assert euler_genus(emb) == 0
    assert all(len(distinguished_face(emb, k).vertices) == 3 for k in range(4))


@pytest.mark.parametrize("n", [3, 5, 8])
def test_cycles_are_planar(n):
    emb = cycle_embedding(n)
    assert len(trace_faces(emb)) == 2 and euler_genus(emb) == 0


def test_k5_search_reaches_projective_plane():
    emb = search_embedding(Graph.complete(5), seed=0, target=1)
    assert euler_genus(emb) == 1
    assert len(trace_faces(emb)) == 6


def test_k6_search_reaches_projective_plane():
    emb = search_embedding(Graph.complete(6), seed=0, target=1)
    assert euler_genus(emb) == 1


def test_fixtures():
    k6 = projective_k6()
    assert euler_genus(k6) == 1 and not k6.is_orientable()
    assert all(f.length == 3 for f in trace_faces(k6))
    k5 = projective_k5()
    assert euler_genus(k5) == 1
    assert sorted(len(f.vertices) for f in trace_faces(k5)) == [3, 3, 3, 3, 3, 5]
    k7 = torus_k7()
    assert euler_genus(k7) == 2 and k7.is_orientable() and not k7.negative


def test_orientable_search_on_k5_gives_torus():
    emb = search_embedding(Graph.complete(5), seed=0, orientable=True, target=2, iterations=20000)
    assert euler_genus(emb) == 2 and emb.is_orientable()


def test_validation_errors():
    g = Graph.path(3)
    with pytest.raises(EmbeddingError, match="missing"):
        RotationEmbedding(g, ((1,), (0,), (1,)))
    with pytest.raises(EmbeddingError, match="not adjacent"):
        RotationEmbedding(g, ((1, 2), (0, 2), (1,)))
    with pytest.raises(EmbeddingError):
        RotationEmbedding(g, ((1,), (0, 2)))
    with pytest.raises(EmbeddingError):
        RotationEmbedding(g, ((1,), (0, 2), (1,)), frozenset({(0, 2)}))


def test_disconnected_and_empty_rejected():
    with pytest.raises(EmbeddingError):
        trace_faces(RotationEmbedding(Graph(0), ()))
    with pytest.raises(EmbeddingError):
        trace_faces(RotationEmbedding(Graph(2), ((), ())))


def test_single_vertex_is_sphere():
    assert euler_genus(RotationEmbedding(Graph(1), ((),))) == 0


def test_distinguished_face_out_of_range():
    with pytest.raises(IndexError):
        distinguished_face(planar_k4(), 4)


def test_face_digest_stable():
    f = distinguished_face(planar_k4(), 0)
    assert f.digest() == distinguished_face(planar_k4(), 0).digest()
    assert len(f.digest()) == 8


@given(embeddings())
def test_face_lengths_sum_to_twice_edges(emb):
    faces = trace_faces(emb)
    assert sum(f.length for f in faces) == 2 * emb.graph.e
    darts = [d for f in faces for d in f.walk]
    # each edge is traversed twice in total, once per side
    assert sorted(darts) == sorted(darts) and len(darts) == 2 * emb.graph.e
    assert euler_genus(emb, faces) >= 0


@given(embeddings(), st.data())
def test_switching_preserves_genus(emb, data):
    v = data.draw(st.integers(0, emb.graph.n - 1))
    sw = switch_vertex(emb, v)
    assert euler_genus(sw) == euler_genus(emb)
    assert sw.is_orientable() == emb.is_orientable()
    assert switch_vertex(sw, v) == emb


@given(embeddings())
def test_normalize_signs_preserves_genus(emb):
    norm = normalize_signs(emb)
    assert euler_genus(norm) == euler_genus(emb)
    if emb.is_orientable():
        assert not norm.negative


@given(embeddings())
def test_nonorientable_means_positive_genus(emb):
    if not emb.is_orientable():
        assert euler_genus(emb) >= 1
    else:
        assert euler_genus(emb) % 2 == 0


def _planar_by_rotations(g, cap=20000):
    count = prod(factorial(max(d - 1, 0)) for d in g.degrees())
    if count > cap:
        return None
    return any(euler_genus(emb) == 0 for emb in rotations(g))


def test_planarity_agrees_with_networkx():
    rng = random.Random(7)
    checked = 0
    samples = [Graph.complete(5), Graph(6, [(a, b) for a in range(3) for b in range(3, 6)]),
               Graph.complete(5).remove_edge(0, 1)]
    samples += [random_connected_graph(rng, rng.randint(2, 7), rng.random() * 0.6) for _ in range(150)]
    for g in samples:
        found = _planar_by_rotations(g)
        if found is None:
            continue
        h = nx.Graph(list(g.edges))
        h.add_nodes_from(range(g.n))
        assert found == nx.check_planarity(h)[0], g
        checked += 1
    assert checked > 100


@pytest.mark.parametrize("n", range(3, 9))
def test_complete_graph_genus_lower_bound(n):
    rng = random.Random(n)
    floor, _ = min_genus_complete(n)
    for _ in range(30):
        emb = random_embedding(Graph.complete(n), rng, signed=rng.random() < 0.5)
        assert euler_genus(emb) >= floor


def test_embedding_from_triangles_orientable():
    # octahedron: planar, all signs positive
    tri = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 1), (5, 2, 1), (5, 3, 2), (5, 4, 3), (5, 1, 4)]
    emb = embedding_from_triangles(6, tri)
    assert euler_genus(emb) == 0 and not emb.negative


def test_delete_vertex_merges_faces():
    emb = planar_k4()
    sub = delete_vertex(emb, 3)
    assert sub.graph == Graph.complete(3)
    assert euler_genus(sub) == 0
    k5 = delete_vertex(projective_k6(), 0)
    assert euler_genus(k5) == 1


def test_theorem_instance_f_bad():
    emb = projective_k5()
    big = next(k for k, f in enumerate(trace_faces(emb)) if len(f.vertices) == 5)
    rep = validate_theorem_instance(emb, big, ListAssignment.uniform(5, 4))
    assert rep.epsilon == 1 and rep.heawood == 6
    assert rep.list_pattern_ok and rep.hypothesis_met
    assert rep.f_bad_clique == (0, 1, 2, 3, 4)


def test_theorem_instance_list_violations():
    emb = projective_k5()
    small = next(k for k, f in enumerate(trace_faces(emb)) if len(f.vertices) == 3)
    rep = validate_theorem_instance(emb, small, ListAssignment.uniform(5, 4))
    assert not rep.list_pattern_ok and not rep.hypothesis_met
    assert len(rep.list_violations) == 2
    assert all(size == 4 and need == 6 for _, size, need in rep.list_violations)
    assert rep.f_bad_clique is None


def test_theorem_instance_planar_and_excluded():
    rep = validate_theorem_instance(planar_k4(), 0, ListAssignment.uniform(4, 4))
    assert not rep.theorem_applies and rep.heawood is None
    # one twisted edge on the toroidal K7 gives Euler genus 3
    k7 = torus_k7()
    emb = RotationEmbedding(k7.graph, k7.rotation, frozenset({(0, 1)}))
    assert euler_genus(emb) == 3
    rep = validate_theorem_instance(emb, 0, ListAssignment.uniform(7, 7))
    assert rep.excluded and not rep.theorem_applies and rep.heawood == 7


def test_theorem_instance_bad_inputs():
    with pytest.raises(IndexError):
        validate_theorem_instance(planar_k4(), 9, ListAssignment.uniform(4, 4))
    with pytest.raises(ValueError):
        validate_theorem_instance(planar_k4(), 0, ListAssignment.uniform(3, 4))
