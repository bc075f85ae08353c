"""Critical graphs: brute-force criticality tests, the edge bound for
K_k-free list-critical graphs, and the Special Case edge-count contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .choosability import ComplexityGuardError
from .coloring import (Coloring, ListAssignment, chromatic_number, is_colorable, k_coloring,
                       solve_list_coloring)
from .genus import DomainError, genus_window
from .graph import Graph, contains_clique
from .isomorphism import canonical_form, graphs_up_to_isomorphism, one_vertex_extensions

Deletion = tuple  # ("edge", u, v) or ("vertex", v)


@dataclass(frozen=True)
class CriticalityReport:
    """Verdict plus evidence.

    A critical verdict carries one coloring per single deletion. A negative
    verdict carries either a coloring of the whole graph or the deletion
    whose result is still not colorable.
    """

    is_critical: bool
    coloring: Coloring | None = None
    refuting_deletion: Deletion | None = None
    certificates: tuple[tuple[Deletion, Coloring], ...] = ()

    def __bool__(self) -> bool:
        return self.is_critical


def _delete_vertex(g: Graph, lists: ListAssignment, v: int) -> tuple[Graph, ListAssignment]:
    keep = [u for u in range(g.n) if u != v]
    return g.remove_vertex(v), lists.restrict(keep)


def is_L_critical(g: Graph, lists: ListAssignment, max_n: int = 12) -> CriticalityReport:
    """Not L-colorable, while every single edge or vertex deletion is.

    Single deletions suffice: any proper subgraph lies inside one of them,
    and colorability passes to subgraphs.
    """
    if g.n > max_n:
        raise ComplexityGuardError(f"criticality test capped at n <= {max_n}")
    if len(lists) != g.n:
        raise ValueError(f"list assignment covers {len(lists)} vertices, graph has {g.n}")
    whole = solve_list_coloring(g, lists)
    if whole is not None:
        return CriticalityReport(False, coloring=whole)
    certs = []
    for u, v in g.edges:
        c = solve_list_coloring(g.remove_edge(u, v), lists)
        if c is None:
            return CriticalityReport(False, refuting_deletion=("edge", u, v))
        certs.append((("edge", u, v), c))
    for v in range(g.n):
        h, sub = _delete_vertex(g, lists, v)
        c = solve_list_coloring(h, sub)
        if c is None:
            return CriticalityReport(False, refuting_deletion=("vertex", v))
        certs.append((("vertex", v), c))
    return CriticalityReport(True, certificates=tuple(certs))


def is_k_critical(g: Graph, k: int, max_n: int = 12) -> CriticalityReport:
    """k-critical: chromatic number k and every proper subgraph (k-1)-colorable."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return is_L_critical(g, ListAssignment.uniform(g.n, k - 1), max_n=max_n)


def ks_edge_bound(n: int, e: int, k: int) -> bool:
    """2e >= (k-1)n + k - 3, necessary for K_k-free L-critical graphs with (k-1)-lists."""
    if k < 4:
        raise DomainError(f"the edge bound is stated for k >= 4, got {k}")
    return 2 * e >= (k - 1) * n + k - 3


@dataclass(frozen=True)
class SqueezeReport:
    epsilon: int
    heawood: int
    nprime: int
    lower: int   # forced lower bound on 2e*
    upper: int   # Euler upper bound on 2e*
    margin: int  # lower - upper; positive means contradiction

    @property
    def contradiction(self) -> bool:
        return self.margin > 0


def special_case_squeeze(epsilon: int, nprime: int) -> SqueezeReport:
    """Edge-count squeeze for a critical graph on nprime in {H, H+1} vertices.

    Lower bounds on twice the edge count after adding face diagonals:
    H^2 + 3H - 12 when nprime = H, and H^2 + 2H - 10 when nprime = H + 1.
    The Euler bound is 6(H+1) + 6(eps-2), i.e. twice the triangulation edge
    count of the surface with H+1 vertices.
    """
    w = genus_window(epsilon)
    if not w.special:
        raise DomainError(f"epsilon = {epsilon} is not a Special Case")
    h = w.heawood
    if nprime == h:
        lower = h * h + 3 * h - 12
    elif nprime == h + 1:
        lower = h * h + 2 * h - 10
    else:
        raise DomainError(f"nprime must be H = {h} or H + 1 = {h + 1}, got {nprime}")
    upper = 6 * (h + 1) + 6 * (epsilon - 2)
    return SqueezeReport(epsilon, h, nprime, lower, upper, lower - upper)


# ---------------------------------------------------------------------------
# exhaustive search for small critical graphs
# ---------------------------------------------------------------------------

def _is_candidate(g: Graph, k: int) -> bool:
    """Cheap necessary conditions for k-criticality: min degree >= k-1, chi >= k."""
    if g.n == 0 or min(g.degrees()) < k - 1 or not g.is_connected():
        return False
    return not is_colorable(g, k - 1)


def k_critical_graphs(n: int, k: int, max_n: int = 8) -> list[Graph]:
    """All k-critical graphs on n vertices, one per isomorphism class.

    n <= 7 scans the isomorphism classes directly. n = 8 extends each
    7-vertex class by one vertex in every way (every 8-vertex graph arises
    so), filters by the necessary conditions, tests criticality and then
    removes duplicates by canonical form.
    """
    if n > max_n:
        raise ComplexityGuardError(f"critical-graph search capped at n <= {max_n}")
    if n <= 7:
        return [g for g in graphs_up_to_isomorphism(n) if _is_candidate(g, k) and is_k_critical(g, k)]
    found: dict[tuple, Graph] = {}
    for base in graphs_up_to_isomorphism(n - 1):
        for g in one_vertex_extensions(base):
            if not _is_candidate(g, k):
                continue
            key = canonical_form(g)
            if key in found:
                continue
            if is_k_critical(g, k):
                found[key] = g
    return list(found.values())


@dataclass(frozen=True)
class EdgeBoundCheck:
    graph: Graph
    k: int
    k_free: bool
    holds: bool
    lhs: int
    rhs: int


def edge_bound_survey(k: int, max_n: int = 8) -> list[EdgeBoundCheck]:
    """Every k-critical graph with n <= max_n, tagged with the edge-bound check."""
    out = []
    for n in range(1, max_n + 1):
        for g in k_critical_graphs(n, k, max_n=max_n):
            out.append(EdgeBoundCheck(
                graph=g, k=k, k_free=contains_clique(g, k) is None,
                holds=ks_edge_bound(g.n, g.e, k),
                lhs=2 * g.e, rhs=(k - 1) * g.n + k - 3))
    return out


def chromatic_certificate(g: Graph) -> tuple[int, Coloring | None]:
    """(chi, an optimal coloring) with the coloring checked independently."""
    chi = chromatic_number(g)
    return chi, k_coloring(g, chi)
