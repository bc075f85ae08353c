"""Desk-scale verification runs shared by the CLI, the scripts and the acceptance suite.

Each ``verify_*`` function runs one exhaustive or seeded check and returns a
summary dataclass whose ``passed`` property is the verdict. Witnesses for any
failure are kept in the summary so they can be re-checked independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .choosability import degree_choosable, find_bad_assignment, is_k_choosable
from .coloring import (ListAssignment, chromatic_number, check_coloring, degree_order_color,
                       find_f_bad_clique, is_gallai_tree, solve_list_coloring)
from .constructions import (CliqueFreeInstance, all_triangulated_polygons, gallai_join, clique_free_family,
                            triangulated_polygon, valid_identifications)
from .criticality import SqueezeReport, special_case_squeeze, edge_bound_survey, is_k_critical
from .embedding import (RotationEmbedding, embedding_from_triangles, euler_genus, random_embedding,
                        trace_faces)
from .genus import (DomainError, Orientability, SurfaceGenus, genus_window, heawood_number,
                    is_special_case, largest_embeddable_clique, special_case_epsilon, window_bounds)
from .graph import Graph, clique_number, contains_clique
from .isomorphism import are_isomorphic, connected_graphs


# ---------------------------------------------------------------------------
# Heawood table and Special Cases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    epsilon: int
    heawood: int
    i: int
    case: str
    eps_lo: int
    eps_hi: int
    special: bool
    klein_clique: int | None  # largest clique on the Klein bottle, only on the eps = 2 row


def heawood_table(eps_max: int) -> list[TableRow]:
    if eps_max < 1:
        raise DomainError("eps_max must be >= 1")
    rows = []
    for eps in range(1, eps_max + 1):
        w = genus_window(eps)
        klein = largest_embeddable_clique(SurfaceGenus(2, Orientability.NONORIENTABLE)) if eps == 2 else None
        rows.append(TableRow(eps, w.heawood, w.i, w.case, w.eps_lo, w.eps_hi, w.special, klein))
    return rows


@dataclass
class ArithmeticSummary:
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems


def verify_heawood_windows(max_i: int = 50) -> ArithmeticSummary:
    """Anchor values, window contiguity and agreement for every i <= max_i, Klein exception."""
    out = ArithmeticSummary()
    expected = {1: 6, 2: 7, 3: 7, 4: 8, 5: 9, 9: 10}
    for eps, h in expected.items():
        if heawood_number(eps) != h:
            out.problems.append(f"H({eps}) = {heawood_number(eps)}, expected {h}")
    prev_hi = 0
    for i in range(1, max_i + 1):
        for case, h in zip("abc", (3 * i + 3, 3 * i + 4, 3 * i + 5)):
            lo, hi = window_bounds(i, case)
            if lo != prev_hi + 1:
                out.problems.append(f"window ({i}, {case}) starts at {lo}, previous ended at {prev_hi}")
            size = hi - lo + 1
            if size != (i + 1 if case == "b" else i):
                out.problems.append(f"window ({i}, {case}) has {size} values")
            for eps in range(lo, hi + 1):
                w = genus_window(eps)
                if (w.i, w.heawood, w.eps_lo, w.eps_hi, w.case) != (i, h, lo, hi, case):
                    out.problems.append(f"genus_window({eps}) = {w}")
                if heawood_number(eps) != h:
                    out.problems.append(f"H({eps}) = {heawood_number(eps)} outside window value {h}")
            prev_hi = hi
    if largest_embeddable_clique(SurfaceGenus(2, Orientability.NONORIENTABLE)) != 6:
        out.problems.append("Klein bottle clique bound is not 6")
    if largest_embeddable_clique(SurfaceGenus(2, Orientability.ORIENTABLE)) != 7:
        out.problems.append("torus clique bound is not 7")
    return out


def verify_special_cases(max_i: int = 20) -> ArithmeticSummary:
    out = ArithmeticSummary()
    specials = {special_case_epsilon(i): i for i in range(1, max_i + 1)}
    for eps in range(1, special_case_epsilon(max_i) + 1):
        flagged = is_special_case(eps)
        if flagged != (eps in specials):
            out.problems.append(f"eps = {eps}: special flag {flagged}")
        if eps in specials and heawood_number(eps) != 3 * specials[eps] + 4:
            out.problems.append(f"eps = {eps}: H = {heawood_number(eps)}, expected {3 * specials[eps] + 4}")
    return out


# ---------------------------------------------------------------------------
# small-graph theorem check (n <= H)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmallGraphViolation:
    graph: Graph
    face: tuple[int, ...]
    lists: ListAssignment


@dataclass
class SmallGraphSummary:
    epsilon: int
    heawood: int
    per_n: list[tuple[int, int, int, int]] = field(default_factory=list)  # (n, classes, checked, f-bad)
    violations: list[SmallGraphViolation] = field(default_factory=list)

    @property
    def instances(self) -> int:
        return sum(r[2] for r in self.per_n)

    @property
    def skipped_f_bad(self) -> int:
        return sum(r[3] for r in self.per_n)

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_small_graphs(epsilon: int, max_n: int | None = None, max_classes: int | None = None,
                   palette_bound: int | None = None) -> SmallGraphSummary:
    """For every connected graph with n <= H and every nonempty vertex subset F,
    search all (H-2 on F, H off F) list assignments for one that prevents coloring.

    Instances whose F carries a K_{H-1} are counted and skipped.
    """
    if epsilon not in (1, 2):
        raise DomainError("desk verification covers epsilon in {1, 2}")
    h = heawood_number(epsilon)
    top = h if max_n is None else min(max_n, h)
    summary = SmallGraphSummary(epsilon, h)
    for n in range(1, top + 1):
        classes = checked = bad = 0
        for g in connected_graphs(n):
            if max_classes is not None and classes >= max_classes:
                break
            classes += 1
            for fmask in range(1, 1 << n):
                face = [v for v in range(n) if fmask >> v & 1]
                if find_f_bad_clique(g, face, epsilon) is not None:
                    bad += 1
                    continue
                sizes = [h - 2 if fmask >> v & 1 else h for v in range(n)]
                witness = find_bad_assignment(g, sizes, palette_bound=palette_bound)
                checked += 1
                if witness is not None:
                    summary.violations.append(SmallGraphViolation(g, tuple(face), witness))
        summary.per_n.append((n, classes, checked, bad))
    return summary


# ---------------------------------------------------------------------------
# degree-ordered greedy coloring
# ---------------------------------------------------------------------------

def random_degree_greedy_instance(rng: random.Random, max_k: int = 9) -> tuple[Graph, ListAssignment]:
    """k vertices, at most k-2 of degree >= k-2, lists of size >= k-2."""
    k = rng.randint(3, max_k)
    density = rng.random()
    adj = [set() for _ in range(k)]
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() > density:
            continue
        adj[u].add(v)
        adj[v].add(u)
        if sum(len(s) >= k - 2 for s in adj) > k - 2:
            adj[u].discard(v)
            adj[v].discard(u)
    g = Graph(k, [(u, v) for u in range(k) for v in adj[u] if u < v])
    palette = rng.randint(k - 2, 2 * k)
    lists = []
    for _ in range(k):
        size = min(palette, k - 2 + (rng.random() < 0.2))
        lists.append(rng.sample(range(palette), size))
    return g, ListAssignment(lists)


@dataclass
class DegreeGreedySummary:
    trials: int
    failures: list[tuple[Graph, ListAssignment, str]] = field(default_factory=list)
    by_k: dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_degree_greedy(trials: int = 1000, seed: int = 0, max_k: int = 9) -> DegreeGreedySummary:
    rng = random.Random(seed)
    out = DegreeGreedySummary(trials)
    for _ in range(trials):
        g, lists = random_degree_greedy_instance(rng, max_k)
        out.by_k[g.n] = out.by_k.get(g.n, 0) + 1
        try:
            coloring = degree_order_color(g, lists)
        except Exception as exc:  # any failure is a verdict, not a crash
            out.failures.append((g, lists, repr(exc)))
            continue
        problems = check_coloring(g, lists, coloring)
        if problems:
            out.failures.append((g, lists, "; ".join(problems)))
    return out


# ---------------------------------------------------------------------------
# degree-choosability against the Gallai-tree characterization
# ---------------------------------------------------------------------------

@dataclass
class DegreeChoosabilitySummary:
    per_n: list[tuple[int, int, int]] = field(default_factory=list)  # (n, graphs, gallai trees)
    mismatches: list[Graph] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_degree_choosability(max_n: int = 7, max_classes: int | None = None) -> DegreeChoosabilitySummary:
    out = DegreeChoosabilitySummary()
    for n in range(1, max_n + 1):
        count = trees = 0
        for g in connected_graphs(n):
            if max_classes is not None and count >= max_classes:
                break
            count += 1
            gallai = is_gallai_tree(g)
            trees += gallai
            brute = degree_choosable(g, method="brute-force", max_n=max_n)
            if brute.choosable == gallai:
                out.mismatches.append(g)
        out.per_n.append((n, count, trees))
    return out


# ---------------------------------------------------------------------------
# edge bound for K_k-free critical graphs
# ---------------------------------------------------------------------------

@dataclass
class EdgeBoundSummary:
    found: dict[int, list[tuple[int, int, bool, bool]]] = field(default_factory=dict)  # k -> (n, e, k_free, holds)
    violations: list[tuple[int, Graph]] = field(default_factory=list)
    gallai_unique: dict[int, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations and all(self.gallai_unique.values())


def verify_edge_bound(ks: tuple[int, ...] = (4, 5), max_n: int = 8) -> EdgeBoundSummary:
    """Find every k-critical graph with n <= max_n and test the bound on the K_k-free ones.

    Also records whether K_{k-3} + C_5 is the only k-critical graph on k + 2 vertices.
    """
    out = EdgeBoundSummary()
    for k in ks:
        survey = edge_bound_survey(k, max_n=max_n)
        out.found[k] = [(c.graph.n, c.graph.e, c.k_free, c.holds) for c in survey]
        out.violations += [(k, c.graph) for c in survey if c.k_free and not c.holds]
        if k + 2 <= max_n:
            on_k2 = [c.graph for c in survey if c.graph.n == k + 2]
            out.gallai_unique[k] = len(on_k2) == 1 and are_isomorphic(on_k2[0], gallai_join(k))
    return out


# ---------------------------------------------------------------------------
# the K_{H-5} + C_5 family
# ---------------------------------------------------------------------------

@dataclass
class CliqueFreeSummary:
    instance: CliqueFreeInstance
    clique_number: int
    has_forbidden_clique: bool
    critical: bool
    lists_fail: bool
    chromatic: int

    @property
    def passed(self) -> bool:
        h = self.instance.heawood
        return (self.clique_number == h - 3 and not self.has_forbidden_clique
                and self.critical and self.lists_fail and self.chromatic == h - 2)


def verify_clique_free_family(i: int = 2) -> CliqueFreeSummary:
    inst = clique_free_family(i)
    g, h = inst.graph, inst.heawood
    return CliqueFreeSummary(
        instance=inst,
        clique_number=clique_number(g),
        has_forbidden_clique=contains_clique(g, h - 2) is not None,
        critical=is_k_critical(g, h - 2).is_critical,
        lists_fail=solve_list_coloring(g, inst.lists) is None,
        chromatic=chromatic_number(g),
    )


# ---------------------------------------------------------------------------
# polygon identifications
# ---------------------------------------------------------------------------

@dataclass
class PolygonIdentificationSummary:
    polygons: int = 0
    identifications: int = 0
    qualifying: int = 0
    by_kind: dict[str, int] = field(default_factory=dict)
    violations: list[tuple[str, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_polygon_identifications(max_n: int = 9, min_n: int = 4) -> PolygonIdentificationSummary:
    """Every identification of every triangulated n-gon (n <= max_n) that meets the
    color condition: chi >= 4, not 3-choosable, one traced face through every vertex."""
    out = PolygonIdentificationSummary()
    for n in range(min_n, max_n + 1):
        for tp in all_triangulated_polygons(n):
            out.polygons += 1
            for q in valid_identifications(tp):
                out.identifications += 1
                if not q.meets_color_condition:
                    continue
                out.qualifying += 1
                kind = "twist" if q.spec.twist else "orientable"
                out.by_kind[kind] = out.by_kind.get(kind, 0) + 1
                if chromatic_number(q.graph) < 4:
                    out.violations.append(("3-colorable", (tp, q.spec)))
                if is_k_choosable(q.graph, 3).choosable:
                    out.violations.append(("3-choosable", (tp, q.spec)))
                if q.big_face is None:
                    out.violations.append(("no face through all vertices", (tp, q.spec)))
    return out


# ---------------------------------------------------------------------------
# Special Case edge-count contradiction
# ---------------------------------------------------------------------------

def verify_special_case_squeeze() -> dict[str, SqueezeReport]:
    return {f"({e}, {n})": special_case_squeeze(e, n) for e, n in ((9, 10), (9, 11), (3, 8))}


# ---------------------------------------------------------------------------
# embedding layer
# ---------------------------------------------------------------------------

def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def planar_k4() -> RotationEmbedding:
    return embedding_from_triangles(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])


def cycle_embedding(n: int) -> RotationEmbedding:
    g = Graph.cycle(n)
    return RotationEmbedding(g, tuple(tuple(g.neighbors(v)) for v in range(n)))


@dataclass
class EmbeddingSummary:
    planar_checked: int = 0
    random_checked: int = 0
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.problems


def verify_embedding_layer(trials: int = 500, seed: int = 0, max_n: int = 8) -> EmbeddingSummary:
    out = EmbeddingSummary()
    planar = [("K4", planar_k4())]
    planar += [(f"C{n}", cycle_embedding(n)) for n in range(3, 13)]
    for n in range(4, 13):
        for shape in ("fan", "snake", "random"):
            planar.append((f"polygon {shape} n={n}", triangulated_polygon(n, shape, seed=n).embedding()))
    for name, emb in planar:
        out.planar_checked += 1
        if euler_genus(emb) != 0:
            out.problems.append(f"{name}: genus {euler_genus(emb)}")
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, max_n)
        g = random_connected_graph(rng, n, rng.random())
        emb = random_embedding(g, rng, signed=rng.random() < 0.5)
        faces = trace_faces(emb)
        total = sum(f.length for f in faces)
        out.random_checked += 1
        if total != 2 * g.e:
            out.problems.append(f"{g}: face lengths sum to {total}, 2e = {2 * g.e}")
        if euler_genus(emb, faces) < 0:
            out.problems.append(f"{g}: negative genus")
    return out
