"""Canonical forms and isomorphism-class enumeration for small graphs.

The canonical form is the lexicographically largest adjacency code over the
leaves of an individualization-refinement tree. Refinement is by neighbour
counts per cell; branching skips twins, so K_n and its complement cost one
leaf.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, bits


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        where = {}
        for k, cell in enumerate(cells):
            for v in cell:
                where[v] = k
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        for k, cell in enumerate(cells):
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            for key in sorted(groups):
                new.append(groups[key])
        if len(new) == len(cells):
            return new
        cells = new


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    mu = adj[u] & ~(1 << v)
    mv = adj[v] & ~(1 << u)
    return mu == mv


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(code, order): ``order[k]`` is the vertex placed at canonical position k."""
    adj = g.adj
    best: list = [None, None]

    def leaf(order: list[int]) -> None:
        pos = {v: k for k, v in enumerate(order)}
        code = tuple(sum(1 << pos[u] for u in bits(adj[v])) for v in order)
        if best[0] is None or code > best[0]:
            best[0], best[1] = code, tuple(order)

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf([c[0] for c in cells])
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(adj, v, t) for t in tried):
                continue
            tried.append(v)
            search(cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1:])

    if g.n == 0:
        return (), ()
    search([list(range(g.n))])
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism invariant that separates non-isomorphic graphs."""
    return (g.n,) + canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_adjacency(canonical_labeling(g)[0])


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and g1.e == g2.e and canonical_form(g1) == canonical_form(g2)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    seen: dict[tuple, Graph] = {}
    for base in _classes(n - 1):
        for nb in range(1 << (n - 1)):
            g = Graph.from_adjacency([m | ((nb >> v & 1) << (n - 1)) for v, m in enumerate(base.adj)] + [nb])
            code, _ = canonical_labeling(g)
            if code not in seen:
                seen[code] = Graph.from_adjacency(code)
    return tuple(seen[c] for c in sorted(seen))


def graphs_up_to_isomorphism(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on n vertices."""
    yield from _classes(n)


def connected_graphs(n: int) -> Iterator[Graph]:
    for g in _classes(n):
        if g.is_connected():
            yield g


def one_vertex_extensions(base: Graph) -> Iterator[Graph]:
    """base plus a new vertex n with every possible neighbourhood (labelled, not deduplicated)."""
    n = base.n + 1
    for nb in range(1 << base.n):
        yield Graph.from_adjacency([m | ((nb >> v & 1) << (n - 1)) for v, m in enumerate(base.adj)] + [nb])
