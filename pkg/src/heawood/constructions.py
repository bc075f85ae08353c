"""Generators for the named graph families and the polygon edge identifications."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .coloring import ListAssignment, is_colorable
from .embedding import RotationEmbedding, delete_vertex, embedding_from_triangles, trace_faces
from .genus import DomainError, edge_bound, genus_window, heawood_number
from .graph import Graph, GraphError, contains_clique, join


def complete_minus(n: int, missing: Iterable[tuple[int, int]] = ()) -> Graph:
    """K_n without the given pairs."""
    gone = set()
    for u, v in missing:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphError(f"invalid pair ({u}, {v}) for K_{n}")
        key = (min(u, v), max(u, v))
        if key in gone:
            raise GraphError(f"pair ({u}, {v}) listed twice")
        gone.add(key)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in gone])


def gallai_join(k: int) -> Graph:
    """K_{k-3} + C_5 on k + 2 vertices; the clique comes first."""
    if k < 4:
        raise DomainError(f"gallai_join needs k >= 4, got {k}")
    return join(Graph.complete(k - 3), Graph.cycle(5))


@dataclass(frozen=True)
class CliqueFreeInstance:
    i: int
    heawood: int
    epsilon: int
    graph: Graph
    lists: ListAssignment


def clique_free_family(i: int) -> CliqueFreeInstance:
    """K_{H-5} + C_5 with identical (H-3)-lists, for H = 3i + 4 and eps = (3i^2 + 3i)/2."""
    if i < 2:
        raise DomainError(f"the family starts at i = 2, got {i}")
    h = 3 * i + 4
    eps = (3 * i * i + 3 * i) // 2
    g = gallai_join(h - 2)
    return CliqueFreeInstance(i, h, eps, g, ListAssignment.uniform(g.n, h - 3))


# ---------------------------------------------------------------------------
# triangulated polygons
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangulatedPolygon:
    """Polygon 0, 1, ..., n-1 (in cyclic order) with a triangulating diagonal set."""

    n: int
    diagonals: tuple[tuple[int, int], ...]
    triangles: tuple[tuple[int, int, int], ...]
    coloring: tuple[int, ...]

    @property
    def graph(self) -> Graph:
        return Graph(self.n, self.edges())

    def edges(self) -> list[tuple[int, int]]:
        cyc = [(min(k, (k + 1) % self.n), max(k, (k + 1) % self.n)) for k in range(self.n)]
        return sorted(set(cyc) | set(self.diagonals))

    def color_classes(self) -> list[list[int]]:
        return [[v for v in range(self.n) if self.coloring[v] == c] for c in range(3)]

    def rotation(self) -> tuple[tuple[int, ...], ...]:
        """Planar rotation in convex position: neighbours of v by (u - v) mod n."""
        g = self.graph
        return tuple(tuple(sorted(g.neighbors(v), key=lambda u: (u - v) % self.n))
                     for v in range(self.n))

    def embedding(self) -> RotationEmbedding:
        return RotationEmbedding(self.graph, self.rotation())


def _from_triangles(n: int, triangles: list[tuple[int, int, int]]) -> TriangulatedPolygon:
    tris = tuple(tuple(sorted(t)) for t in triangles)
    diag = set()
    for t in tris:
        for u, v in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            if (v - u) % n not in (1, n - 1):
                diag.add((u, v))
    # propagate the forced 3-coloring across shared edges
    color = [-1] * n
    a, b, c = tris[0]
    color[a], color[b], color[c] = 0, 1, 2
    pending = list(tris[1:])
    while pending:
        rest = []
        for t in pending:
            known = [v for v in t if color[v] >= 0]
            if len(known) >= 2:
                for v in t:
                    if color[v] < 0:
                        color[v] = 3 - sum(color[u] for u in known)
            else:
                rest.append(t)
        if len(rest) == len(pending):
            raise GraphError("triangles do not form a triangulated polygon")
        pending = rest
    return TriangulatedPolygon(n, tuple(sorted(diag)), tuple(sorted(tris)), tuple(color))


def _split(i: int, j: int, pick) -> list[tuple[int, int, int]]:
    """Triangulate the sub-polygon i..j (i < j) choosing apexes with ``pick``."""
    out = []
    stack = [(i, j)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        k = pick(lo, hi)
        out.append((lo, k, hi))
        stack.append((lo, k))
        stack.append((k, hi))
    return out


def triangulated_polygon(n: int, shape: str = "fan", seed: int | None = None) -> TriangulatedPolygon:
    """fan: all diagonals at vertex 0; snake: zigzag strip; random: seeded recursive split."""
    if n < 4:
        raise DomainError(f"a triangulated polygon needs n >= 4, got {n}")
    if shape == "fan":
        tris = [(0, j, j + 1) for j in range(1, n - 1)]
    elif shape == "snake":
        seq, lo, hi = [], 0, n - 1
        while lo <= hi:
            seq.append(lo)
            if lo != hi:
                seq.append(hi)
            lo, hi = lo + 1, hi - 1
        tris = [tuple(seq[k:k + 3]) for k in range(n - 2)]
    elif shape == "random":
        rng = random.Random(seed)
        tris = _split(0, n - 1, lambda lo, hi: rng.randrange(lo + 1, hi))
    else:
        raise ValueError(f"unknown shape {shape!r}")
    return _from_triangles(n, tris)


def all_triangulated_polygons(n: int) -> Iterator[TriangulatedPolygon]:
    """Every triangulation of the labelled n-gon (Catalan(n-2) of them)."""
    if n < 4:
        raise DomainError(f"a triangulated polygon needs n >= 4, got {n}")

    def tri(lo: int, hi: int) -> Iterator[list[tuple[int, int, int]]]:
        if hi - lo < 2:
            yield []
            return
        for k in range(lo + 1, hi):
            for left in tri(lo, k):
                for right in tri(k, hi):
                    yield [(lo, k, hi)] + left + right

    for tris in tri(0, n - 1):
        yield _from_triangles(n, tris)


# ---------------------------------------------------------------------------
# edge identification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentificationSpec:
    """Glue boundary edge (first, first+1) to (second, second+1), indices mod n.

    Without a twist, first is merged with second+1 and first+1 with second;
    with a twist, first with second and first+1 with second+1.
    """

    first: int
    second: int
    twist: bool = False

    def merged_pairs(self, n: int) -> tuple[tuple[int, int], tuple[int, int]]:
        a, a1, b, b1 = self.first % n, (self.first + 1) % n, self.second % n, (self.second + 1) % n
        return ((a, b), (a1, b1)) if self.twist else ((a, b1), (a1, b))


class IdentificationError(ValueError):
    pass


@dataclass(frozen=True)
class Identification:
    graph: Graph
    embedding: RotationEmbedding
    vertex_map: tuple[int, ...]         # polygon vertex -> quotient vertex
    spec: IdentificationSpec
    meets_color_condition: bool
    has_k4: bool
    edge_distance: int                  # polygon distance between the two glued edges
    big_face: int | None                # index of a traced face through every vertex


def meets_color_condition(tp: TriangulatedPolygon, spec: IdentificationSpec) -> bool:
    """Some merged pair joins two different color classes, so no 3-coloring survives."""
    return any(tp.coloring[x] != tp.coloring[y] for x, y in spec.merged_pairs(tp.n))


def _polygon_distance(g: Graph, src: Iterable[int], dst: Iterable[int]) -> int:
    dst = set(dst)
    frontier = set(src)
    seen = set(frontier)
    d = 0
    while frontier:
        if frontier & dst:
            return d
        nxt = {u for v in frontier for u in g.neighbors(v)} - seen
        seen |= nxt
        frontier = nxt
        d += 1
    return -1


def identify_edges(tp: TriangulatedPolygon, spec: IdentificationSpec) -> Identification:
    """Quotient of the polygon by gluing two boundary edges, with its embedding.

    The disk with the two edges glued is an annulus (no twist) or a Moebius
    band (twist). The band capped by one disk is the projective plane with
    all vertices on the cap face. For the annulus, the glued edge is placed
    at the outer junction (between the two boundary arcs) at both merged
    vertices; this fuses the two boundary faces and both glued-edge
    triangles into one face through a handle (torus).
    """
    n = tp.n
    (x0, x1), (y0, y1) = spec.merged_pairs(n)
    if len({x0, x1, y0, y1}) != 4:
        raise IdentificationError("the glued edges must be disjoint")
    pg = tp.graph
    for u, v in ((x0, x1), (y0, y1)):
        if pg.has_edge(u, v):
            raise IdentificationError(f"merging adjacent vertices {u} and {v} would create a loop")
    rep = list(range(n))
    rep[x1], rep[y1] = x0, y0
    keep = [v for v in range(n) if rep[v] == v]
    index = {v: k for k, v in enumerate(keep)}
    vmap = tuple(index[rep[v]] for v in range(n))
    qedges: dict[tuple[int, int], tuple[int, int]] = {}
    glued = {(min(x0, y0), max(x0, y0)), (min(x1, y1), max(x1, y1))}
    for u, v in pg.edges:
        e = (min(vmap[u], vmap[v]), max(vmap[u], vmap[v]))
        if e in qedges and not ({(u, v), qedges[e]} <= glued):
            raise IdentificationError(
                f"edges {qedges[e]} and {(u, v)} would become parallel after merging")
        qedges.setdefault(e, (u, v))
    g = Graph(len(keep), sorted(qedges))

    rot = tp.rotation()
    x, y = vmap[x0], vmap[y0]

    def sector(v: int, partner: int) -> list[int]:
        """Rotation at v read from the glued-edge neighbour onwards, without it."""
        r = list(rot[v])
        k = r.index(partner)
        return [vmap[u] for u in r[k + 1:] + r[:k]]

    new_rot = [tuple(vmap[u] for u in rot[v]) for v in keep]
    negative = set()
    if spec.twist:
        # x0 = a, x1 = b, y0 = a+1, y1 = b+1: reflect the b-side sectors
        sa, sb = sector(x0, y0), sector(x1, y1)
        new_rot[x] = tuple([y] + sa + sb[::-1])
        ta, tb = sector(y0, x0), sector(y1, x1)
        new_rot[y] = tuple(ta + [x] + tb[::-1])
        for v, s in ((x, sb), (y, tb)):
            for u in s:
                if u not in (x, y):
                    negative.add((min(u, v), max(u, v)))
    else:
        # x0 = a, x1 = b+1, y0 = a+1, y1 = b
        sa, sb = sector(x0, y0), sector(x1, y1)
        new_rot[x] = tuple(sa + [y] + sb)      # glued edge at the outer junction
        ta, tb = sector(y0, x0), sector(y1, x1)
        new_rot[y] = tuple([x] + ta + tb)      # and at y
    emb = RotationEmbedding(g, tuple(new_rot), frozenset(negative))
    faces = trace_faces(emb)
    big = next((k for k, f in enumerate(faces) if len(f.vertices) == g.n), None)
    a, b = spec.first % n, spec.second % n
    dist = _polygon_distance(pg, (a, (a + 1) % n), (b, (b + 1) % n))
    return Identification(
        graph=g, embedding=emb, vertex_map=vmap, spec=spec,
        meets_color_condition=meets_color_condition(tp, spec),
        has_k4=contains_clique(g, 4) is not None,
        edge_distance=dist, big_face=big,
    )


def valid_identifications(tp: TriangulatedPolygon, twist: bool | None = None) -> Iterator[Identification]:
    """All identifications of two disjoint boundary edges that give a simple quotient."""
    kinds = (False, True) if twist is None else (twist,)
    for a in range(tp.n):
        for b in range(a + 1, tp.n):
            for tw in kinds:
                spec = IdentificationSpec(a, b, tw)
                try:
                    yield identify_edges(tp, spec)
                except IdentificationError:
                    continue


# ---------------------------------------------------------------------------
# small fixed embeddings
# ---------------------------------------------------------------------------

# K6 on the projective plane: the ten triangles of the hemi-icosahedron
PROJECTIVE_K6_TRIANGLES = ((0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
                           (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3))


def projective_k6() -> RotationEmbedding:
    return embedding_from_triangles(6, PROJECTIVE_K6_TRIANGLES)


def projective_k5() -> RotationEmbedding:
    """K5 on the projective plane with one pentagonal face through all five vertices."""
    return delete_vertex(projective_k6(), 0)


def torus_k7() -> RotationEmbedding:
    tris = [(v, (v + 1) % 7, (v + 3) % 7) for v in range(7)]
    tris += [(v, (v + 2) % 7, (v + 3) % 7) for v in range(7)]
    return embedding_from_triangles(7, tris)


# ---------------------------------------------------------------------------
# K_{H+1} - E feasibility
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FeasibilityReport:
    epsilon: int
    heawood: int
    edges: int
    bound: int
    feasible: bool
    special: bool
    status: str | None


def k_h_plus1_minus_E_feasibility(epsilon: int) -> FeasibilityReport:
    """Edge count of K_{H+1} minus an edge against the Euler bound on S_eps."""
    h = heawood_number(epsilon)
    edges = h * (h + 1) // 2 - 1
    bound = edge_bound(h + 1, epsilon)
    w = genus_window(epsilon)
    return FeasibilityReport(epsilon, h, edges, bound, edges <= bound, w.special,
                             w.special_embedding_status())


def three_colorable(g: Graph) -> bool:
    return is_colorable(g, 3)
