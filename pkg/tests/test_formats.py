import pytest
from hypothesis import given, strategies as st

from heawood.coloring import ListAssignment
from heawood.constructions import projective_k5, torus_k7
from heawood.embedding import random_embedding
from heawood.formats import (
    FormatError, parse_embedding, parse_graph, parse_lists, write_embedding, write_graph, write_lists,
)
from heawood.graph import Graph
from strategies import connected_graphs, graphs, list_assignments


@given(graphs(max_n=9))
def test_graph_round_trip(g):
    text = write_graph(g)
    assert parse_graph(text) == g
    assert write_graph(parse_graph(text)) == text


@given(connected_graphs(max_n=8), st.randoms(use_true_random=False), st.booleans())
def test_embedding_round_trip(g, rnd, signed):
    emb = random_embedding(g, rnd, signed=signed)
    text = write_embedding(emb)
    back = parse_embedding(text)
    assert back == emb
    assert write_embedding(back) == text


@given(st.data())
def test_lists_round_trip(data):
    n = data.draw(st.integers(0, 8))
    L = data.draw(list_assignments(n, max_size=5, palette=12))
    text = write_lists(L)
    assert parse_lists(text, n) == L
    assert write_lists(parse_lists(text)) == text


def test_fixture_round_trips():
    for emb in (projective_k5(), torus_k7()):
        assert parse_embedding(write_embedding(emb)) == emb


def test_graph_format_shape():
    assert write_graph(Graph.path(3)) == "3 2\n0 1\n1 2\n"
    g = parse_graph("# a comment\n3 2\n\n0 1  # trailing\n2 1\n")
    assert g == Graph.path(3)


@pytest.mark.parametrize("text,line", [
    ("", None),
    ("3\n", 1),
    ("3 2\n0 1\n", None),
    ("3 1\n0 x\n", 2),
    ("3 1\n0 3\n", 2),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 1\n1 1\n", 2),
])
def test_graph_parse_errors(text, line):
    with pytest.raises(FormatError) as exc:
        parse_graph(text)
    if line is not None:
        assert exc.value.line == line
        assert f"line {line}" in str(exc.value)


def test_embedding_format_shape():
    emb = parse_embedding("3\n1 2\n0 2\n0 1\nsigns\n0 1\n")
    assert emb.graph == Graph.complete(3)
    assert emb.negative == {(0, 1)}
    assert parse_embedding("1\n-\nsigns\n").graph == Graph(1)


@pytest.mark.parametrize("text,line", [
    ("3\n1 2\n0 2\n0 1\n", 4),                 # no signs section
    ("2\n1\n-\nsigns\n", 3),                   # asymmetric rotation
    ("2\n1\n0\nsigns\n0 0\n", 5),              # signed pair not an edge
    ("2\n5\n0\nsigns\n", 2),
    ("2\n1\n0\nsigns\n0 1 1\n", 5),
])
def test_embedding_parse_errors(text, line):
    with pytest.raises(FormatError) as exc:
        parse_embedding(text)
    assert exc.value.line == line


def test_lists_format():
    L = parse_lists("0 1\n-\n2\n")
    assert L == ListAssignment([[0, 1], [], [2]])
    assert write_lists(L) == "0 1\n-\n2\n"
    with pytest.raises(FormatError, match="line 2"):
        parse_lists("0\n1 1\n")
    with pytest.raises(FormatError, match="line 1"):
        parse_lists("-3\n")
    with pytest.raises(FormatError):
        parse_lists("0\n", n=2)


def test_format_error_source_prefix():
    err = FormatError("bad", 3, "g.txt")
    assert str(err) == "g.txt:line 3: bad"
