"""Simple undirected graphs on dense vertex indices, stored as adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .genus import min_genus_complete


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    ``adj[v]`` is an int bitmask of the neighbours of ``v``. Equality and
    hashing are by labelled structure, not isomorphism class.
    """

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"repeated edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj)
        self._edges: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g._edges = None
        return g

    # -- named families -------------------------------------------------
    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls.from_adjacency([full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int, order: Sequence[int] | None = None) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        order = list(range(n)) if order is None else list(order)
        return cls(n, [(order[k], order[(k + 1) % n]) for k in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(k, k + 1) for k in range(n - 1)])

    # -- basic queries --------------------------------------------------
    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v)
        return self._edges

    @property
    def e(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return self.component_of(0) == (1 << self.n) - 1

    def component_of(self, v: int, within: int | None = None) -> int:
        within = (1 << self.n) - 1 if within is None else within
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[list[int]]:
        left = (1 << self.n) - 1
        out = []
        while left:
            v = (left & -left).bit_length() - 1
            comp = self.component_of(v)
            out.append(list(bits(comp)))
            left &= ~comp
        return out

    def is_complete(self) -> bool:
        return all(self.degree(v) == self.n - 1 for v in range(self.n))

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    # -- edits ----------------------------------------------------------
    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_adjacency(adj)

    def remove_vertex(self, v: int) -> "Graph":
        return induced_subgraph(self, [u for u in range(self.n) if u != v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    # -- dunder -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced on ``vs``; vertex ``vs_sorted[k]`` becomes ``k``."""
    vs = sorted(set(vs))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph on {g.n} vertices")
    index = {v: k for k, v in enumerate(vs)}
    adj = [0] * len(vs)
    for k, v in enumerate(vs):
        for u in bits(g.adj[v]):
            if u in index:
                adj[k] |= 1 << index[u]
    return Graph.from_adjacency(adj)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_adjacency([full & ~m & ~(1 << v) for v, m in enumerate(g.adj)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return Graph.from_adjacency(list(g1.adj) + [m << g1.n for m in g2.adj])


def join(g1: Graph, g2: Graph) -> Graph:
    """g1 + g2: vertices of g1 keep their labels, g2's are shifted by g1.n."""
    n1, n2 = g1.n, g2.n
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    return Graph.from_adjacency([m | right for m in g1.adj] + [(m << n1) | left for m in g2.adj])


# ---------------------------------------------------------------------------
# blocks and cutvertices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockCutTree:
    """Blocks, cutvertices and the bipartite block-cutvertex forest.

    Nodes of the forest are ``("B", k)`` for ``blocks[k]`` and ``("C", v)`` for a
    cutvertex ``v``; ``edges`` joins a cutvertex to every block containing it.
    """

    blocks: tuple[frozenset[int], ...]
    block_edges: tuple[tuple[tuple[int, int], ...], ...]
    cutvertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]  # (block index, cutvertex)
    connected: bool

    def degree(self, node: tuple[str, int]) -> int:
        kind, x = node
        if kind == "B":
            return sum(1 for b, _ in self.edges if b == x)
        return sum(1 for _, c in self.edges if c == x)

    def nodes(self) -> list[tuple[str, int]]:
        return [("B", k) for k in range(len(self.blocks))] + [("C", c) for c in sorted(self.cutvertices)]

    def is_forest(self) -> bool:
        # a graph is a forest iff edges = nodes - components
        nodes = self.nodes()
        parent = {x: x for x in nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for b, c in self.edges:
            rb, rc = find(("B", b)), find(("C", c))
            if rb == rc:
                return False
            parent[rb] = rc
        return True


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Biconnected decomposition (Hopcroft-Tarjan, iterative).

    Isolated vertices become singleton blocks so every vertex lies in a block.
    Disconnected input yields a forest with ``connected=False``.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    block_edges: list[tuple[tuple[int, int], ...]] = []
    cut: set[int] = set()
    nbrs = [g.neighbors(v) for v in range(n)]

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        if not nbrs[root]:
            blocks.append(frozenset([root]))
            block_edges.append(())
            continue
        root_children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(nbrs[u])))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cut.add(parent)
                es = []
                while True:
                    a, b = edge_stack.pop()
                    es.append((min(a, b), max(a, b)))
                    if (a, b) == (parent, v):
                        break
                verts = frozenset(x for e in es for x in e)
                blocks.append(verts)
                block_edges.append(tuple(sorted(es)))
        if root_children > 1:
            cut.add(root)

    tree_edges = tuple(sorted((k, c) for k, b in enumerate(blocks) for c in b if c in cut))
    return BlockCutTree(tuple(blocks), tuple(block_edges), frozenset(cut), tree_edges,
                        connected=g.is_connected())


def block_subgraphs(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, b) for b in block_cut_tree(g).blocks]


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------

def contains_clique(g: Graph, m: int) -> list[int] | None:
    """Some m-clique of ``g`` (sorted vertex list), or None. Exact search."""
    if m < 1:
        raise GraphError("clique size must be >= 1")
    if m > g.n:
        return None
    adj = g.adj
    deg = g.degrees()
    # vertices of degree < m-1 can never be in an m-clique
    cand = mask_of(v for v in range(g.n) if deg[v] >= m - 1)

    def grow(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == m:
            return chosen
        need = m - len(chosen)
        if cand.bit_count() < need:
            return None
        # branch on candidates in decreasing degree order
        for v in sorted(bits(cand), key=lambda x: (-deg[x], x)):
            if cand.bit_count() < need:
                return None
            found = grow(chosen + [v], cand & adj[v])
            if found is not None:
                return found
            cand &= ~(1 << v)
        return None

    found = grow([], cand)
    return sorted(found) if found is not None else None


def clique_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    m = 1
    while contains_clique(g, m + 1) is not None:
        m += 1
    return m


def genus_lower_bound_blocks(g: Graph) -> int:
    """Sound lower bound on Euler genus from complete blocks.

    Euler genus is additive over blocks; each complete block K_m (m >= 3)
    contributes its least genus, other blocks contribute 0.
    """
    bct = block_cut_tree(g)
    total = 0
    for verts, es in zip(bct.blocks, bct.block_edges):
        m = len(verts)
        if m >= 3 and len(es) == m * (m - 1) // 2:
            total += min_genus_complete(m)[0]
    return total
