"""Exact list coloring and the constructive coloring procedures.

Colors are non-negative ints. Internally lists are bitmasks over a compact
re-indexing of the colors that occur, so the search never touches Python sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .genus import heawood_number
from .graph import Graph, GraphError, bits, block_cut_tree, contains_clique, induced_subgraph

Coloring = tuple  # tuple[int | None, ...], one entry per vertex


class PreconditionError(ValueError):
    """Inputs do not satisfy the hypothesis an operation is guaranteed under."""


class ColoringCheckError(AssertionError):
    """A produced coloring failed independent verification (a bug, never expected)."""


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists. Empty lists are allowed and make coloring impossible."""

    lists: tuple[frozenset[int], ...]

    def __init__(self, lists: Iterable[Iterable[int]]):
        fixed = tuple(frozenset(L) for L in lists)
        for L in fixed:
            if any((not isinstance(c, int)) or c < 0 for c in L):
                raise ValueError(f"colors must be non-negative ints, got {sorted(L)}")
        object.__setattr__(self, "lists", fixed)

    @classmethod
    def uniform(cls, n: int, k: int) -> "ListAssignment":
        return cls([range(k)] * n)

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def __iter__(self):
        return iter(self.lists)

    def sizes(self) -> list[int]:
        return [len(L) for L in self.lists]

    def palette(self) -> frozenset[int]:
        return frozenset().union(*self.lists) if self.lists else frozenset()

    def restrict(self, vs: Sequence[int]) -> "ListAssignment":
        """Lists of ``vs`` in sorted order, matching :func:`induced_subgraph`."""
        return ListAssignment(self.lists[v] for v in sorted(set(vs)))

    def relabel_colors(self, mapping: dict[int, int]) -> "ListAssignment":
        return ListAssignment({mapping[c] for c in L} for L in self.lists)

    def to_masks(self) -> tuple[list[int], list[int]]:
        """(masks, colors) with ``masks[v]`` indexing into ``colors``."""
        colors = sorted(self.palette())
        index = {c: k for k, c in enumerate(colors)}
        masks = []
        for L in self.lists:
            m = 0
            for c in L:
                m |= 1 << index[c]
            masks.append(m)
        return masks, colors


def check_coloring(g: Graph, lists: ListAssignment | None, coloring: Sequence[int | None],
                   partial: bool = False) -> list[str]:
    """Problems with ``coloring`` (empty list when it is proper and list-respecting).

    Kept deliberately naive so that it stays independent of the search code.
    """
    problems = []
    if len(coloring) != g.n:
        return [f"coloring has {len(coloring)} entries for {g.n} vertices"]
    for v, c in enumerate(coloring):
        if c is None:
            if not partial:
                problems.append(f"vertex {v} uncolored")
        elif lists is not None and c not in lists[v]:
            problems.append(f"vertex {v} has color {c} outside its list {sorted(lists[v])}")
    for u, v in g.edges:
        if coloring[u] is not None and coloring[u] == coloring[v]:
            problems.append(f"edge ({u}, {v}) monochromatic with color {coloring[u]}")
    return problems


def _verified(g: Graph, lists: ListAssignment | None, coloring: Sequence[int | None],
              partial: bool = False) -> Coloring:
    problems = check_coloring(g, lists, coloring, partial)
    if problems:
        raise ColoringCheckError("; ".join(problems))
    return tuple(coloring)


# ---------------------------------------------------------------------------
# exact search
# ---------------------------------------------------------------------------

def color_masks(adj: Sequence[int], masks: Sequence[int], active: int | None = None) -> list[int] | None:
    """Backtracking list coloring on bitmask data.

    Returns the color index per vertex (``-1`` outside ``active``) or None.
    Branches on the vertex with fewest remaining colors (lowest index on
    ties) and forward-checks its uncolored neighbours.
    """
    n = len(adj)
    active = (1 << n) - 1 if active is None else active
    avail = list(masks)
    color = [-1] * n

    def rec(todo: int) -> bool:
        if not todo:
            return True
        best, best_count = -1, 1 << 30
        for v in bits(todo):
            cnt = avail[v].bit_count()
            if cnt < best_count:
                best, best_count = v, cnt
                if cnt <= 1:
                    break
        if best_count == 0:
            return False
        v = best
        rest = todo & ~(1 << v)
        nb = adj[v] & rest
        a = avail[v]
        while a:
            low = a & -a
            a ^= low
            touched = []
            ok = True
            for u in bits(nb):
                if avail[u] & low:
                    avail[u] ^= low
                    touched.append(u)
                    if not avail[u]:
                        ok = False
                        break
            if ok:
                color[v] = low.bit_length() - 1
                if rec(rest):
                    return True
            for u in touched:
                avail[u] |= low
        color[v] = -1
        return False

    # empty lists can only fail
    for v in bits(active):
        if not avail[v]:
            return None
    return color if rec(active) else None


def solve_list_coloring(g: Graph, lists: ListAssignment) -> Coloring | None:
    """A proper coloring choosing each vertex's color from its list, or None."""
    if len(lists) != g.n:
        raise ValueError(f"list assignment covers {len(lists)} vertices, graph has {g.n}")
    masks, colors = lists.to_masks()
    found = color_masks(g.adj, masks)
    if found is None:
        return None
    return _verified(g, lists, [colors[k] for k in found])


def is_colorable(g: Graph, k: int) -> bool:
    return color_masks(g.adj, [(1 << k) - 1] * g.n) is not None


def k_coloring(g: Graph, k: int) -> Coloring | None:
    found = color_masks(g.adj, [(1 << k) - 1] * g.n)
    return None if found is None else _verified(g, ListAssignment.uniform(g.n, k), found)


def chromatic_number(g: Graph) -> int:
    """Smallest k with a proper k-coloring (iterative deepening on k)."""
    if g.n == 0:
        return 0
    k = 1
    while not is_colorable(g, k):
        k += 1
    return k


# ---------------------------------------------------------------------------
# constructive procedures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionResult:
    coloring: Coloring | None
    stuck_vertex: int | None = None
    blocked: frozenset[int] = frozenset()

    def __bool__(self) -> bool:
        return self.coloring is not None


def greedy_extend(g: Graph, lists: ListAssignment, partial: Sequence[int | None],
                  order: Sequence[int]) -> ExtensionResult:
    """Color the uncolored vertices in ``order``, each with its least free list color.

    On failure the result names the vertex whose list was exhausted and the
    colors its neighbours had already taken.
    """
    problems = check_coloring(g, lists, partial, partial=True)
    if problems:
        raise PreconditionError("partial coloring is not proper: " + "; ".join(problems))
    color = list(partial)
    todo = [v for v in order if color[v] is None]
    if len(set(todo)) != sum(c is None for c in color):
        raise PreconditionError("order must list every uncolored vertex exactly once")
    for v in todo:
        used = {color[u] for u in bits(g.adj[v]) if color[u] is not None}
        free = sorted(lists[v] - used)
        if not free:
            return ExtensionResult(None, stuck_vertex=v, blocked=frozenset(used & lists[v]))
        color[v] = free[0]
    return ExtensionResult(_verified(g, lists, color))


def degree_order(g: Graph) -> list[int]:
    """Vertices by nonincreasing degree, ties by index."""
    deg = g.degrees()
    return sorted(range(g.n), key=lambda v: (-deg[v], v))


def degree_order_color(g: Graph, lists: ListAssignment) -> Coloring:
    """Greedy coloring in nonincreasing-degree order for k vertices with (k-2)-lists.

    Guaranteed when at most k-2 vertices have degree >= k-2: each of the first
    k-2 vertices sees at most k-3 colored neighbours, and every later vertex
    has degree at most k-3.
    """
    k = g.n
    if k < 3:
        raise PreconditionError("needs at least 3 vertices")
    small = [v for v in range(k) if len(lists[v]) < k - 2]
    if small:
        raise PreconditionError(f"lists smaller than k-2 = {k - 2} at vertices {small}")
    high = [v for v in range(k) if g.degree(v) >= k - 2]
    if len(high) > k - 2:
        raise PreconditionError(
            f"{len(high)} vertices have degree >= k-2 = {k - 2}; at most {k - 2} allowed")
    result = greedy_extend(g, lists, [None] * k, degree_order(g))
    if not result:
        raise ColoringCheckError(f"degree-order greedy stuck at vertex {result.stuck_vertex}")
    return result.coloring


# ---------------------------------------------------------------------------
# Gallai trees, F-bad cliques
# ---------------------------------------------------------------------------

def is_odd_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.n % 2 == 1 and g.is_connected() and all(d == 2 for d in g.degrees())


def is_gallai_tree(g: Graph) -> bool:
    """Every block is a complete graph or an odd cycle (K1 and K2 count as complete)."""
    if not g.is_connected():
        raise GraphError("is_gallai_tree expects a connected graph")
    bct = block_cut_tree(g)
    for verts, es in zip(bct.blocks, bct.block_edges):
        m = len(verts)
        if len(es) == m * (m - 1) // 2:
            continue
        if m % 2 == 1 and len(es) == m:
            continue  # a 2-connected block with as many edges as vertices is a cycle
        return False
    return True


def find_f_bad_clique(g: Graph, face_vertices: Iterable[int], epsilon: int) -> list[int] | None:
    """A K_{H-1} lying entirely on the face, or None."""
    face = sorted(set(face_vertices))
    m = heawood_number(epsilon) - 1
    sub = induced_subgraph(g, face)
    found = contains_clique(sub, m)
    return None if found is None else [face[k] for k in found]
