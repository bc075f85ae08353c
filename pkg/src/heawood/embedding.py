"""Signed rotation systems: face tracing, Euler genus, distinguished faces.

A face-tracing state is ``(u, v, s)``: the walk is about to traverse the dart
``u -> v`` with local orientation ``s`` (+1 / -1). Arriving at ``v`` the
orientation is multiplied by the sign of ``uv``; the walk continues to the
successor of ``u`` in the rotation at ``v`` when the orientation is +1 and to
the predecessor otherwise. Every face is met twice, once per direction, and
``reverse(u, v, s) = (v, u, -s * sign(uv))`` pairs the two traversals, so
faces are the orbits taken up to that pairing.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coloring import ListAssignment, find_f_bad_clique
from .genus import heawood_number
from .graph import Graph, bits


class EmbeddingError(ValueError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class RotationEmbedding:
    """A graph with a cyclic neighbour order at each vertex and edge signs.

    ``negative`` holds the edges (as ``(min, max)`` pairs) with sign -1.
    All signs +1 means the embedding is orientable as given.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    negative: frozenset[tuple[int, int]] = frozenset()
    _pos: tuple[dict[int, int], ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        g = self.graph
        rot = tuple(tuple(r) for r in self.rotation)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "negative", frozenset(_edge(u, v) for u, v in self.negative))
        if len(rot) != g.n:
            raise EmbeddingError(f"rotation given for {len(rot)} vertices, graph has {g.n}")
        for v, r in enumerate(rot):
            if len(set(r)) != len(r):
                raise EmbeddingError(f"vertex {v}: rotation repeats a neighbour: {list(r)}")
            if set(r) != set(bits(g.adj[v])):
                missing = sorted(set(bits(g.adj[v])) - set(r))
                extra = sorted(set(r) - set(bits(g.adj[v])))
                raise EmbeddingError(
                    f"vertex {v}: rotation {list(r)} does not match neighbours "
                    f"(missing {missing}, not adjacent {extra})")
        for u, v in self.negative:
            if not g.has_edge(u, v):
                raise EmbeddingError(f"signed edge ({u}, {v}) is not an edge")
        object.__setattr__(self, "_pos", tuple({u: k for k, u in enumerate(r)} for r in rot))

    def sign(self, u: int, v: int) -> int:
        return -1 if _edge(u, v) in self.negative else 1

    def step(self, state: tuple[int, int, int]) -> tuple[int, int, int]:
        u, v, s = state
        s = s * self.sign(u, v)
        r = self.rotation[v]
        nxt = r[(self._pos[v][u] + s) % len(r)]
        return (v, nxt, s)

    def reverse(self, state: tuple[int, int, int]) -> tuple[int, int, int]:
        u, v, s = state
        return (v, u, -s * self.sign(u, v))

    def is_orientable(self) -> bool:
        """True iff some vertex switching makes every sign +1."""
        g = self.graph
        side = [None] * g.n
        for root in range(g.n):
            if side[root] is not None:
                continue
            side[root] = 0
            stack = [root]
            while stack:
                u = stack.pop()
                for v in bits(g.adj[u]):
                    want = side[u] ^ (self.sign(u, v) == -1)
                    if side[v] is None:
                        side[v] = want
                        stack.append(v)
                    elif side[v] != want:
                        return False
        return True


@dataclass(frozen=True)
class Face:
    """A facial walk: darts in traversal order with their local orientation."""

    walk: tuple[tuple[int, int], ...]
    orientation: tuple[int, ...] = ()

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(u for u, _ in self.walk)

    @property
    def length(self) -> int:
        return len(self.walk)

    def digest(self) -> str:
        """Short hash of the sorted vertex set, used to guard face indices."""
        key = ",".join(map(str, sorted(self.vertices))).encode()
        return hashlib.sha1(key).hexdigest()[:8]


def trace_faces(emb: RotationEmbedding) -> list[Face]:
    g = emb.graph
    if g.n == 0:
        raise EmbeddingError("cannot trace faces of the empty graph")
    if not g.is_connected():
        raise EmbeddingError("face tracing requires a connected graph")
    if g.n == 1:
        return [Face(())]
    seen: set[tuple[int, int, int]] = set()
    faces = []
    for u in range(g.n):
        for v in emb.rotation[u]:
            for s in (1, -1):
                start = (u, v, s)
                if start in seen:
                    continue
                orbit = []
                x = start
                while True:
                    orbit.append(x)
                    x = emb.step(x)
                    if x == start:
                        break
                for y in orbit:
                    seen.add(y)
                    seen.add(emb.reverse(y))
                faces.append(Face(tuple((a, b) for a, b, _ in orbit), tuple(t for _, _, t in orbit)))
    return faces


def euler_genus(emb: RotationEmbedding, faces: Sequence[Face] | None = None) -> int:
    """2 - n + e - f for the (connected) embedded graph."""
    faces = trace_faces(emb) if faces is None else faces
    g = emb.graph
    return 2 - g.n + g.e - len(faces)


def distinguished_face(emb: RotationEmbedding, face_index: int) -> Face:
    faces = trace_faces(emb)
    if not 0 <= face_index < len(faces):
        raise IndexError(f"face index {face_index} out of range (embedding has {len(faces)} faces)")
    return faces[face_index]


def switch_vertex(emb: RotationEmbedding, v: int) -> RotationEmbedding:
    """Reverse the rotation at v and flip the sign of every edge at v (same surface)."""
    rot = list(emb.rotation)
    rot[v] = tuple(reversed(rot[v]))
    neg = set(emb.negative)
    for u in bits(emb.graph.adj[v]):
        neg ^= {_edge(u, v)}
    return RotationEmbedding(emb.graph, tuple(rot), frozenset(neg))


def delete_vertex(emb: RotationEmbedding, v: int) -> RotationEmbedding:
    """Induced embedding of G - v; the faces around v merge into one. Labels above v shift down."""
    g = emb.graph
    relabel = {u: u - (u > v) for u in range(g.n) if u != v}
    rot = tuple(tuple(relabel[w] for w in r if w != v) for u, r in enumerate(emb.rotation) if u != v)
    neg = frozenset((relabel[a], relabel[b]) for a, b in emb.negative if v not in (a, b))
    return RotationEmbedding(g.remove_vertex(v), rot, neg)


def normalize_signs(emb: RotationEmbedding) -> RotationEmbedding:
    """Switch vertices so every edge of a BFS spanning tree has sign +1.

    The surface is unchanged. Orientable embeddings end up with no negative
    edges at all.
    """
    g = emb.graph
    flip = [0] * g.n
    seen = 1
    queue = [0]
    for u in queue:
        for v in bits(g.adj[u] & ~seen):
            seen |= 1 << v
            flip[v] = flip[u] ^ (emb.sign(u, v) == -1)
            queue.append(v)
    rot = tuple(tuple(reversed(r)) if flip[v] else r for v, r in enumerate(emb.rotation))
    neg = frozenset(e for e in emb.negative if not flip[e[0]] ^ flip[e[1]]) | frozenset(
        e for e in g.edges if flip[e[0]] ^ flip[e[1]] and e not in emb.negative)
    return RotationEmbedding(g, rot, neg)


# ---------------------------------------------------------------------------
# theorem instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InstanceReport:
    epsilon: int
    heawood: int | None
    face_index: int
    face_vertices: frozenset[int]
    excluded: bool
    theorem_applies: bool
    list_pattern_ok: bool
    list_violations: tuple[tuple[int, int, int], ...]  # (vertex, size, required)
    f_bad_clique: tuple[int, ...] | None

    @property
    def hypothesis_met(self) -> bool:
        return self.theorem_applies and self.list_pattern_ok


def validate_theorem_instance(emb: RotationEmbedding, face_index: int,
                              lists: ListAssignment) -> InstanceReport:
    """Check the list-size pattern and look for a face clique K_{H-1}.

    Face vertices need lists of size >= H-2, all others >= H. Euler genus 0
    yields a report with ``theorem_applies=False``; genus 3 is flagged as
    excluded.
    """
    g = emb.graph
    if len(lists) != g.n:
        raise ValueError(f"list assignment covers {len(lists)} vertices, graph has {g.n}")
    faces = trace_faces(emb)
    eps = euler_genus(emb, faces)
    if not 0 <= face_index < len(faces):
        raise IndexError(f"face index {face_index} out of range (embedding has {len(faces)} faces)")
    face = faces[face_index].vertices
    if eps < 1:
        return InstanceReport(eps, None, face_index, face, False, False, False, (), None)
    h = heawood_number(eps)
    violations = []
    for v in range(g.n):
        need = h - 2 if v in face else h
        if len(lists[v]) < need:
            violations.append((v, len(lists[v]), need))
    bad = find_f_bad_clique(g, face, eps)
    return InstanceReport(
        epsilon=eps, heawood=h, face_index=face_index, face_vertices=face,
        excluded=(eps == 3), theorem_applies=(eps != 3),
        list_pattern_ok=not violations, list_violations=tuple(violations),
        f_bad_clique=None if bad is None else tuple(bad),
    )


# ---------------------------------------------------------------------------
# building and searching rotation systems (fixtures, tests)
# ---------------------------------------------------------------------------

def embedding_from_triangles(n: int, triangles: Iterable[Sequence[int]]) -> RotationEmbedding:
    """Rotation system of a closed-surface triangulation given by its triangles.

    Each vertex link must be a single cycle. Signs mark the edges where the
    two local orientations disagree, normalized so a spanning tree is
    positive (orientable surfaces come out all-positive).
    """
    tris = [tuple(t) for t in triangles]
    edges = set()
    link: dict[int, dict[int, list[int]]] = {v: {} for v in range(n)}
    for a, b, c in tris:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            edges.add(_edge(x, y))
            link[x].setdefault(y, []).append(z)
            link[x].setdefault(z, []).append(y)
    g = Graph(n, sorted(edges))
    rot = []
    for v in range(n):
        nbrs = link[v]
        if any(len(w) != 2 for w in nbrs.values()):
            raise EmbeddingError(f"vertex {v}: link is not a union of cycles")
        start = min(nbrs)
        cyc = [start]
        prev, cur = None, start
        while True:
            a, b = nbrs[cur]
            nxt = a if a != prev else b
            if nxt == start:
                break
            cyc.append(nxt)
            prev, cur = cur, nxt
        if len(cyc) != len(nbrs):
            raise EmbeddingError(f"vertex {v}: link is not a single cycle")
        rot.append(tuple(cyc))
    pos = [{u: k for k, u in enumerate(r)} for r in rot]
    negative = set()
    for u, v in edges:
        ru, rv = rot[u], rot[v]
        succ_u = ru[(pos[u][v] + 1) % len(ru)]
        pred_u = ru[(pos[u][v] - 1) % len(ru)]
        # consistent orientation: the successor of v at u is the predecessor of u at v
        if rv[(pos[v][u] - 1) % len(rv)] != succ_u or rv[(pos[v][u] + 1) % len(rv)] != pred_u:
            negative.add((u, v))
    return normalize_signs(RotationEmbedding(g, tuple(rot), frozenset(negative)))


def random_embedding(g: Graph, rng: random.Random, signed: bool = False) -> RotationEmbedding:
    rot = []
    for v in range(g.n):
        r = g.neighbors(v)
        rng.shuffle(r)
        rot.append(tuple(r))
    neg = frozenset(e for e in g.edges if signed and rng.random() < 0.5)
    return RotationEmbedding(g, tuple(rot), neg)


def search_embedding(g: Graph, seed: int = 0, iterations: int = 200000, restarts: int = 200,
                     orientable: bool = False, target: int | None = None) -> RotationEmbedding:
    """Randomized local search for a low-genus rotation system of a small graph.

    Moves swap two entries of one rotation or (unless ``orientable``) flip one
    edge sign; non-worsening moves are kept, worsening ones rarely. The budget
    is split over ``restarts`` fresh random starts. Returns the best embedding
    seen, stopping early once genus ``target`` is reached.
    """
    rng = random.Random(seed)
    edges = list(g.edges)
    best, best_genus = None, None
    for _ in range(restarts):
        emb = random_embedding(g, rng, signed=not orientable)
        cur = euler_genus(emb)
        for _ in range(iterations // restarts):
            if best_genus is None or cur < best_genus:
                best, best_genus = emb, cur
            if target is not None and best_genus <= target:
                return best
            rot = [list(r) for r in emb.rotation]
            neg = emb.negative
            if not orientable and edges and rng.random() < 0.3:
                neg = neg ^ {rng.choice(edges)}
            else:
                v = rng.randrange(g.n)
                if len(rot[v]) < 3:
                    continue
                i, j = rng.sample(range(len(rot[v])), 2)
                rot[v][i], rot[v][j] = rot[v][j], rot[v][i]
            cand = RotationEmbedding(g, tuple(map(tuple, rot)), neg)
            gen = euler_genus(cand)
            if gen <= cur or rng.random() < 0.02:
                emb, cur = cand, gen
        if cur < best_genus:
            best, best_genus = emb, cur
    return best
