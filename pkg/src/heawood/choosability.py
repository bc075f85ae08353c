"""Exhaustive search for list assignments that prevent coloring.

``find_bad_assignment(g, sizes)`` decides whether *every* assignment with
``|L(v)| = sizes[v]`` admits a coloring and, if not, returns a preventing
assignment. The search is exhaustive up to renaming of colors; it is made
tractable by three reductions, each of which only discards assignments that
are certainly colorable:

* core reduction: a vertex whose list is longer than its degree can always be
  colored last, so it is deleted (repeatedly) before enumerating;
* canonical colors: lists are generated vertex by vertex and a list may use
  already-seen colors or the next unseen ones, never an arbitrary new label;
* one-vertex probes: after fixing some lists, if coloring one vertex ``v``
  with a color ``c`` leaves a graph that the core reduction empties (using
  worst-case sizes for vertices not yet assigned), every completion is
  colorable and the branch is cut.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .coloring import ListAssignment, color_masks, is_gallai_tree, solve_list_coloring
from .graph import Graph, bits


class ComplexityGuardError(ValueError):
    """Instance exceeds the configured desk-scale bound."""


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    probe_cuts: int = 0
    core_size: int = 0


@dataclass(frozen=True)
class ChoosabilityResult:
    choosable: bool
    witness: ListAssignment | None = None
    method: str = "brute-force"
    stats: SearchStats | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.choosable


def reduce_core(adj: Sequence[int], sizes: Sequence[int], alive: int) -> int:
    """Repeatedly drop vertices with size > degree among ``alive``; return what is left."""
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if sizes[v] > (adj[v] & alive).bit_count():
                alive &= ~(1 << v)
                changed = True
    return alive


def _search_order(adj: Sequence[int], core: int) -> list[int]:
    """Start at a max-degree vertex, then always take the vertex with most placed neighbours."""
    deg = {v: (adj[v] & core).bit_count() for v in bits(core)}
    order: list[int] = []
    placed = 0
    left = core
    while left:
        v = max(bits(left), key=lambda x: ((adj[x] & placed).bit_count(), deg[x], -x))
        order.append(v)
        placed |= 1 << v
        left &= ~(1 << v)
    return order


def _subsets(pool: int, j: int, start: int = 0):
    """All j-subsets of range(pool) as bitmasks, lexicographic."""
    if j == 0:
        yield 0
        return
    for c in range(start, pool - j + 1):
        for rest in _subsets(pool, j - 1, c + 1):
            yield (1 << c) | rest


def find_bad_assignment(g: Graph, sizes: Sequence[int], palette_bound: int | None = None,
                        stats: SearchStats | None = None, probes: bool = True) -> ListAssignment | None:
    """A list assignment with the given sizes admitting no coloring, or None.

    ``palette_bound`` caps the number of distinct colors; by default it is
    the total list size of the core, which loses nothing.
    """
    n = g.n
    if len(sizes) != n:
        raise ValueError("one size per vertex required")
    stats = stats if stats is not None else SearchStats()
    adj = g.adj
    for v in range(n):
        if sizes[v] <= 0:
            return _complete_witness(g, sizes, {v: 0})

    core = reduce_core(adj, sizes, (1 << n) - 1)
    stats.core_size = core.bit_count()
    if not core:
        return None
    order = _search_order(adj, core)
    m = len(order)
    total = sum(sizes[v] for v in order)
    palette = total if palette_bound is None else min(palette_bound, total)

    lists = [0] * n
    assigned = 0

    def probe_cuts(v: int) -> bool:
        """Does coloring v with some color of its list certify every completion?"""
        rest = core & ~(1 << v)
        nb = adj[v] & rest
        Lv = lists[v]
        while Lv:
            low = Lv & -Lv
            Lv ^= low
            p = {}
            for w in bits(rest):
                if assigned >> w & 1:
                    s = lists[w].bit_count()
                    if nb >> w & 1 and lists[w] & low:
                        s -= 1
                else:
                    s = sizes[w] - (nb >> w & 1)
                p[w] = s
            if not reduce_core(adj, p, rest):
                return True
        return False

    def rec(t: int, pool: int) -> ListAssignment | None:
        nonlocal assigned
        stats.nodes += 1
        if t == m:
            stats.leaves += 1
            found = color_masks(adj, lists, core)
            if found is None:
                return _complete_witness(g, sizes, {v: lists[v] for v in order})
            return None
        v = order[t]
        k = sizes[v]
        fresh_room = palette - pool
        for j in range(min(k, pool), max(0, k - fresh_room) - 1, -1):
            fresh = ((1 << (k - j)) - 1) << pool
            for S in _subsets(pool, j):
                lists[v] = S | fresh
                assigned |= 1 << v
                cut = False
                if probes:
                    if probe_cuts(v):
                        cut = True
                    else:
                        for w in bits(adj[v] & assigned & core):
                            if w != v and probe_cuts(w):
                                cut = True
                                break
                if cut:
                    stats.probe_cuts += 1
                else:
                    found = rec(t + 1, pool + k - j)
                    if found is not None:
                        return found
                assigned &= ~(1 << v)
                lists[v] = 0
        return None

    return rec(0, 0)


def _complete_witness(g: Graph, sizes: Sequence[int], fixed: dict[int, int]) -> ListAssignment:
    """Extend lists on a non-colorable part to the whole graph with fresh colors.

    ``fixed`` maps vertex -> color bitmask. The result is checked to be
    non-colorable before it is returned.
    """
    top = max((m.bit_length() for m in fixed.values()), default=0)
    out = []
    for v in range(g.n):
        if v in fixed:
            out.append([c for c in bits(fixed[v])])
        else:
            out.append(list(range(top, top + sizes[v])))
            top += sizes[v]
    witness = ListAssignment(out)
    if solve_list_coloring(g, witness) is not None:
        raise AssertionError("witness assignment turned out colorable")
    return witness


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def is_k_choosable(g: Graph, k: int, max_n: int = 8, max_k: int = 5,
                   palette_bound: int | None = None) -> ChoosabilityResult:
    """Whether every assignment of k-lists admits a coloring (exhaustive).

    The search space is all k-lists over a palette of ``n * k`` colors up to
    renaming, which contains every assignment up to renaming.
    """
    if g.n > max_n or k > max_k:
        raise ComplexityGuardError(f"is_k_choosable capped at n <= {max_n}, k <= {max_k}")
    if k < 1:
        raise ValueError("k must be >= 1")
    bound = g.n * k if palette_bound is None else palette_bound
    stats = SearchStats()
    witness = find_bad_assignment(g, [k] * g.n, palette_bound=bound, stats=stats)
    return ChoosabilityResult(witness is None, witness, "brute-force", stats)


def degree_choosable(g: Graph, method: str = "auto", max_n: int = 8) -> ChoosabilityResult:
    """Whether g is L-colorable for every L with |L(v)| = deg(v).

    ``method="characterization"`` answers by the Gallai-tree test alone;
    ``"brute-force"`` enumerates assignments (n <= ``max_n``); ``"auto"`` runs
    the brute force when it is within bound and otherwise falls back to the
    characterization, marking the result as characterization-only.
    """
    if not g.is_connected():
        raise ValueError("degree_choosable expects a connected graph")
    if method not in ("auto", "characterization", "brute-force"):
        raise ValueError(f"unknown method {method!r}")
    if method == "characterization" or (method == "auto" and g.n > max_n):
        return ChoosabilityResult(not is_gallai_tree(g), None, "characterization-only")
    if g.n > max_n:
        raise ComplexityGuardError(f"brute-force degree choosability capped at n <= {max_n}")
    stats = SearchStats()
    witness = find_bad_assignment(g, g.degrees(), stats=stats)
    return ChoosabilityResult(witness is None, witness, "brute-force", stats)
