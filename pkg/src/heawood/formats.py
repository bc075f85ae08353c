"""Plain-text file formats for graphs, embeddings and list assignments.

graph::

    n e
    u v            (e lines, 0-based, u < v, sorted)

embedding::

    n
    r_0 r_1 ...    (n lines: cyclic neighbour order of vertex v)
    signs
    u v            (negative edges, u < v, sorted)

lists::

    c c c ...      (n lines; "-" for an empty list)

Parsers skip blank lines and ``#`` comments and report errors with line
numbers. Writers emit the canonical form, so write(parse(write(x))) is
byte-identical.
"""

from __future__ import annotations

from .coloring import ListAssignment
from .embedding import EmbeddingError, RotationEmbedding
from .graph import Graph, GraphError


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(where + message)
        self.line = line


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for k, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if s:
            out.append((k, s))
    return out


def _ints(s: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in s.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {s!r}", lineno) from None


# -- graph --------------------------------------------------------------------

def write_graph(g: Graph) -> str:
    return f"{g.n} {g.e}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    k, head = lines[0]
    nums = _ints(head, k)
    if len(nums) != 2 or min(nums) < 0:
        raise FormatError("header must be 'n e' with non-negative integers", k)
    n, e = nums
    body = lines[1:]
    if len(body) != e:
        raise FormatError(f"header announces {e} edges but {len(body)} edge lines follow", k)
    edges = []
    seen: set[tuple[int, int]] = set()
    for k, s in body:
        pair = _ints(s, k)
        if len(pair) != 2:
            raise FormatError("edge line must be 'u v'", k)
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}", k)
        if u == v:
            raise FormatError(f"self-loop at {u}", k)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"repeated edge ({u}, {v})", k)
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


# -- embedding ----------------------------------------------------------------

def write_embedding(emb: RotationEmbedding) -> str:
    out = [f"{emb.graph.n}\n"]
    out += [(" ".join(map(str, r)) if r else "-") + "\n" for r in emb.rotation]
    out.append("signs\n")
    out += [f"{u} {v}\n" for u, v in sorted(emb.negative)]
    return "".join(out)


def parse_embedding(text: str) -> RotationEmbedding:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty embedding file")
    k, head = lines[0]
    nums = _ints(head, k)
    if len(nums) != 1 or nums[0] < 0:
        raise FormatError("first line must be the vertex count n", k)
    n = nums[0]
    if len(lines) < n + 2 or lines[n + 1][1] != "signs":
        last = lines[min(n + 1, len(lines) - 1)][0]
        raise FormatError(f"expected {n} rotation lines followed by 'signs'", last)
    rot = []
    edges = set()
    for v in range(n):
        k, s = lines[1 + v]
        r = [] if s == "-" else _ints(s, k)
        for u in r:
            if not 0 <= u < n or u == v:
                raise FormatError(f"vertex {v}: invalid neighbour {u}", k)
            edges.add((min(u, v), max(u, v)))
        rot.append(tuple(r))
    for v in range(n):
        for u in rot[v]:
            if v not in rot[u]:
                raise FormatError(f"edge ({v}, {u}) appears at {v} but not in the rotation of {u}",
                                  lines[1 + u][0])
    negative = []
    for k, s in lines[n + 2:]:
        pair = _ints(s, k)
        if len(pair) != 2:
            raise FormatError("sign line must be 'u v'", k)
        u, v = min(pair), max(pair)
        if (u, v) not in edges:
            raise FormatError(f"signed pair ({u}, {v}) is not an edge", k)
        negative.append((u, v))
    try:
        return RotationEmbedding(Graph(n, sorted(edges)), tuple(rot), frozenset(negative))
    except (EmbeddingError, GraphError) as exc:
        raise FormatError(str(exc)) from None


# -- lists --------------------------------------------------------------------

def write_lists(lists: ListAssignment) -> str:
    return "".join((" ".join(map(str, sorted(L))) if L else "-") + "\n" for L in lists)


def parse_lists(text: str, n: int | None = None) -> ListAssignment:
    lines = _lines(text)
    out = []
    for k, s in lines:
        if s == "-":
            out.append([])
            continue
        cs = _ints(s, k)
        if any(c < 0 for c in cs):
            raise FormatError("colors must be non-negative", k)
        if len(set(cs)) != len(cs):
            raise FormatError("repeated color in a list", k)
        out.append(cs)
    if n is not None and len(out) != n:
        raise FormatError(f"expected {n} list lines, found {len(out)}")
    return ListAssignment(out)
