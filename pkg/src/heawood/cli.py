"""Command-line harness.

Exit codes: 0 when every verdict passes, 1 when a claim fails, 2 for usage,
parse or domain errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import formats
from .choosability import ComplexityGuardError, is_k_choosable
from .coloring import ListAssignment, chromatic_number, solve_list_coloring
from .config import DEFAULT_CAPS, DeskCaps
from .constructions import (IdentificationError, IdentificationSpec, gallai_join, identify_edges, k_h_plus1_minus_E_feasibility, projective_k5,
                            projective_k6, torus_k7, triangulated_polygon, valid_identifications)
from .criticality import is_k_critical
from .embedding import EmbeddingError, euler_genus, trace_faces, validate_theorem_instance
from .genus import DomainError
from .graph import Graph, GraphError, clique_number, contains_clique
from . import verify

FORMAT_VERSION = 1


class UsageError(Exception):
    pass


@dataclass
class Verdict:
    name: str
    status: str            # "pass", "fail" or "info"
    detail: str = ""
    certificate: Any = None


@dataclass
class RunReport:
    command: str
    params: dict
    verdicts: list[Verdict] = field(default_factory=list)
    wall_clock: float = 0.0
    format_version: int = FORMAT_VERSION

    def add(self, name: str, ok: bool | None, detail: str = "", certificate: Any = None) -> None:
        status = "info" if ok is None else ("pass" if ok else "fail")
        self.verdicts.append(Verdict(name, status, detail, certificate))

    @property
    def failed(self) -> bool:
        return any(v.status == "fail" for v in self.verdicts)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Graph):
        return {"n": x.n, "edges": [list(e) for e in x.edges]}
    if isinstance(x, ListAssignment):
        return [sorted(L) for L in x]
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: _jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)
                if not f.name.startswith("_")}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def render(report: RunReport, fmt: str, timing: bool = True) -> str:
    if fmt == "json":
        data = _jsonable(report)
        if not timing:
            data.pop("wall_clock")
        return json.dumps(data, indent=2, sort_keys=True)
    lines = [f"# {report.command} " + " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))]
    for v in report.verdicts:
        lines.append(f"{v.status.upper():4}  {v.name}" + (f": {v.detail}" if v.detail else ""))
        if v.certificate is not None and v.status == "fail":
            lines.append(f"      certificate: {json.dumps(_jsonable(v.certificate))}")
    if timing:
        lines.append(f"# {report.wall_clock:.2f}s")
    return "\n".join(lines)


def _caps(args) -> DeskCaps:
    return DEFAULT_CAPS.with_overrides(max_classes=args.max_classes, palette_bound=args.palette_bound)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse(kind: str, path: str, **kw):
    parser = {"graph": formats.parse_graph, "embedding": formats.parse_embedding,
              "lists": formats.parse_lists}[kind]
    try:
        return parser(_read(path), **kw)
    except formats.FormatError as exc:
        raise formats.FormatError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_heawood_table(args, report: RunReport) -> None:
    rows = verify.heawood_table(args.eps_max)
    for r in rows:
        mark = "*" if r.special else ""
        detail = f"H={r.heawood}{mark} i={r.i} case={r.case} window=[{r.eps_lo},{r.eps_hi}]"
        if r.klein_clique is not None:
            detail += f" klein-bottle-clique={r.klein_clique}"
        report.add(f"eps={r.epsilon}", None, detail, r)


def cmd_verify_small_graphs(args, report: RunReport) -> None:
    caps = _caps(args)
    s = verify.verify_small_graphs(args.epsilon, max_n=args.max_n, max_classes=caps.max_classes,
                              palette_bound=caps.palette_bound)
    for n, classes, checked, bad in s.per_n:
        report.add(f"n={n}", None, f"{classes} classes, {checked} face subsets checked, {bad} F-bad skipped")
    report.add("no preventing assignment", s.passed,
               f"{s.instances} instances, {s.skipped_f_bad} F-bad, {len(s.violations)} violations",
               s.violations or None)


def cmd_verify_degree_greedy(args, report: RunReport) -> None:
    s = verify.verify_degree_greedy(trials=args.trials, seed=args.seed, max_k=args.max_k)
    report.add("degree-order greedy colors every instance", s.passed,
               f"{s.trials} trials, k histogram {dict(sorted(s.by_k.items()))}",
               s.failures or None)


def _identification_verdicts(report: RunReport, q, check_choosable: bool) -> None:
    tag = f"{'twist' if q.spec.twist else 'orientable'} ({q.spec.first},{q.spec.second})"
    faces = trace_faces(q.embedding)
    report.add(f"{tag} color condition", None, str(q.meets_color_condition))
    report.add(f"{tag} one face through all vertices", q.big_face is not None,
               f"genus {euler_genus(q.embedding, faces)}, face {q.big_face}"
               + (f" digest {faces[q.big_face].digest()}" if q.big_face is not None else ""),
               None if q.big_face is None else faces[q.big_face].walk)
    report.add(f"{tag} K4 / edge distance", None, f"has K4: {q.has_k4}, distance {q.edge_distance}")
    chi = chromatic_number(q.graph)
    if q.meets_color_condition:
        report.add(f"{tag} chromatic number >= 4", chi >= 4, f"chi = {chi}")
        if check_choosable:
            res = is_k_choosable(q.graph, 3)
            report.add(f"{tag} not 3-choosable", not res.choosable,
                       "witness lists found" if res.witness else "", res.witness)
    else:
        report.add(f"{tag} chromatic number", None, f"chi = {chi}")


def cmd_verify_construction(args, report: RunReport) -> None:
    caps = _caps(args)
    if args.name == "polygon":
        if args.all:
            top = args.max_n or 9
            s = verify.verify_polygon_identifications(max_n=top)
            report.add("all identifications certified", s.passed,
                       f"{s.polygons} polygons, {s.identifications} identifications, "
                       f"{s.qualifying} meet the color condition {s.by_kind}", s.violations or None)
            return
        tp = triangulated_polygon(args.n, args.shape, seed=args.seed)
        if args.n - 2 > caps.choosability_max_n:
            raise ComplexityGuardError(f"quotients above {caps.choosability_max_n} vertices exceed the cap")
        if args.first is not None:
            if args.second is None:
                raise UsageError("--first needs --second")
            try:
                ids = [identify_edges(tp, IdentificationSpec(args.first, args.second, bool(args.twist)))]
            except IdentificationError as exc:
                raise UsageError(f"identification rejected: {exc}") from None
        else:
            ids = list(valid_identifications(tp, twist=args.twist))
        report.params["triangles"] = [list(t) for t in tp.triangles]
        for q in ids:
            _identification_verdicts(report, q, check_choosable=True)
    elif args.name == "clique-free":
        s = verify.verify_clique_free_family(args.i)
        h = s.instance.heawood
        report.add(f"clique number {h - 3}", s.clique_number == h - 3, f"omega = {s.clique_number}")
        report.add(f"no K{h - 2}", not s.has_forbidden_clique)
        report.add(f"{h - 2}-critical", s.critical)
        report.add(f"identical {h - 3}-lists fail", s.lists_fail, "", s.instance.lists)
        feas = k_h_plus1_minus_E_feasibility(s.instance.epsilon)
        report.add("K_{H+1}-E edge count", None,
                   f"{feas.edges} edges vs bound {feas.bound}, status {feas.status}")
    elif args.name == "gallai":
        g = gallai_join(args.k)
        if g.n > caps.critical_max_n:
            raise ComplexityGuardError(f"criticality test capped at n <= {caps.critical_max_n}")
        crit = is_k_critical(g, args.k, max_n=caps.critical_max_n)
        report.add(f"K_{args.k - 3} + C5 is {args.k}-critical", crit.is_critical,
                   f"{len(crit.certificates)} deletion certificates")
        report.add(f"clique number {args.k - 1}", clique_number(g) == args.k - 1)
        report.add(f"no K{args.k}", contains_clique(g, args.k) is None)


def cmd_check_instance(args, report: RunReport) -> None:
    g = _parse("graph", args.graph)
    emb = _parse("embedding", args.embedding)
    if emb.graph != g:
        raise formats.FormatError(f"{args.embedding}: rotation system does not match {args.graph}")
    lists = _parse("lists", args.lists, n=g.n)
    faces = trace_faces(emb)
    eps = euler_genus(emb, faces)
    if eps < 1:
        raise DomainError(f"theorem requires eps >= 1, embedding has Euler genus {eps}")
    if not 0 <= args.face < len(faces):
        raise UsageError(f"face index {args.face} out of range (embedding has {len(faces)} faces)")
    inst = validate_theorem_instance(emb, args.face, lists)
    face = faces[args.face]
    report.add("embedding", True, f"eps={eps} H={inst.heawood} faces={len(faces)} "
               f"face {args.face} digest {face.digest()} |V(F)|={len(face.vertices)}",
               {"face_walk": face.walk})
    solution = solve_list_coloring(g, lists)
    if inst.excluded:
        report.add("excluded by theorem", None, "eps = 3 is outside the theorem")
    if not inst.list_pattern_ok:
        report.add("list sizes below hypothesis", None,
                   "; ".join(f"v{v}: {s} < {r}" for v, s, r in inst.list_violations))
    if inst.f_bad_clique is not None:
        report.add(f"F-bad K{inst.heawood - 1}", None, f"clique {list(inst.f_bad_clique)} on F",
                   inst.f_bad_clique)
    if solution is not None:
        report.add("list coloring", True, "", solution)
    elif inst.hypothesis_met and inst.f_bad_clique is None:
        report.add("list coloring", False, "hypothesis met, no F-bad clique, yet no coloring exists")
    else:
        report.add("list coloring", None, "not colorable; excused by the verdicts above")


def cmd_solve(args, report: RunReport) -> None:
    g = _parse("graph", args.graph)
    lists = _parse("lists", args.lists, n=g.n)
    c = solve_list_coloring(g, lists)
    if c is None:
        report.add("list coloring", None, "no coloring exists")
    else:
        report.add("list coloring", True, " ".join(map(str, c)), c)


def cmd_trace_faces(args, report: RunReport) -> None:
    emb = _parse("embedding", args.embedding)
    faces = trace_faces(emb)
    eps = euler_genus(emb, faces)
    report.add("surface", None, f"eps={eps} faces={len(faces)} orientable={emb.is_orientable()}")
    for k, f in enumerate(faces):
        report.add(f"face {k}", None,
                   f"length {f.length} vertices {sorted(f.vertices)} digest {f.digest()}", f.walk)
    report.add("face lengths sum to 2e", sum(f.length for f in faces) == 2 * emb.graph.e)


def cmd_generate(args, report: RunReport) -> None:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    files: dict[str, str] = {}
    if args.what == "polygon":
        tp = triangulated_polygon(args.n, args.shape, seed=args.seed)
        files["graph.txt"] = formats.write_graph(tp.graph)
        files["embedding.txt"] = formats.write_embedding(tp.embedding())
    elif args.what == "identification":
        tp = triangulated_polygon(args.n, args.shape, seed=args.seed)
        if args.first is None or args.second is None:
            raise UsageError("identification needs --first and --second")
        try:
            q = identify_edges(tp, IdentificationSpec(args.first, args.second, args.twist))
        except IdentificationError as exc:
            raise UsageError(f"identification rejected: {exc}") from None
        files["graph.txt"] = formats.write_graph(q.graph)
        files["embedding.txt"] = formats.write_embedding(q.embedding)
        files["lists.txt"] = formats.write_lists(ListAssignment.uniform(q.graph.n, 3))
        report.params["big_face"] = q.big_face
    elif args.what in ("k5-projective", "k6-projective", "k7-torus"):
        emb = {"k5-projective": projective_k5, "k6-projective": projective_k6,
               "k7-torus": torus_k7}[args.what]()
        files["graph.txt"] = formats.write_graph(emb.graph)
        files["embedding.txt"] = formats.write_embedding(emb)
    elif args.what == "gallai":
        files["graph.txt"] = formats.write_graph(gallai_join(args.k))
    elif args.what == "clique-free":
        from .constructions import clique_free_family
        inst = clique_free_family(args.i)
        files["graph.txt"] = formats.write_graph(inst.graph)
        files["lists.txt"] = formats.write_lists(inst.lists)
    for name, text in files.items():
        (out / name).write_text(text)
        report.add(f"wrote {out / name}", None)


# Older names accepted for the same verbs and construction names.
ALIASES = {
    "verify-lemma31": "verify-small-graphs",
    "verify-lemma42": "verify-degree-greedy",
    "section5": "polygon",
    "prop12": "clique-free",
}

COMMANDS = {
    "heawood-table": cmd_heawood_table,
    "verify-small-graphs": cmd_verify_small_graphs,
    "verify-degree-greedy": cmd_verify_degree_greedy,
    "verify-construction": cmd_verify_construction,
    "check-instance": cmd_check_instance,
    "solve": cmd_solve,
    "trace-faces": cmd_trace_faces,
    "generate": cmd_generate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--max-classes", type=int, default=None)
    common.add_argument("--palette-bound", type=int, default=None)
    common.add_argument("--no-timing", action="store_true", help="omit wall-clock for byte-stable output")

    p = argparse.ArgumentParser(prog="heawood", description="Heawood-number list-coloring toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("heawood-table", parents=[common], help="H(eps) and genus windows")
    s.add_argument("eps_max", type=int)

    s = sub.add_parser("verify-small-graphs", aliases=["verify-lemma31"], parents=[common],
                       help="all small graphs, all face subsets")
    s.add_argument("--epsilon", type=int, default=1)

    s = sub.add_parser("verify-degree-greedy", aliases=["verify-lemma42"], parents=[common],
                       help="seeded degree-order greedy trials")
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--max-k", type=int, default=9)

    s = sub.add_parser("verify-construction", parents=[common], help="check a named construction")
    s.add_argument("name", choices=("polygon", "clique-free", "gallai", "section5", "prop12"))
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--shape", choices=("fan", "snake", "random"), default="snake")
    s.add_argument("--first", type=int)
    s.add_argument("--second", type=int)
    s.add_argument("--twist", action="store_true", default=None)
    s.add_argument("--all", action="store_true", help="every polygon with n <= --max-n (default 9)")
    s.add_argument("--i", type=int, default=2)
    s.add_argument("--k", type=int, default=4)

    s = sub.add_parser("check-instance", parents=[common], help="validate and solve a theorem instance")
    s.add_argument("graph")
    s.add_argument("embedding")
    s.add_argument("face", type=int)
    s.add_argument("lists")

    s = sub.add_parser("solve", parents=[common], help="list-color a graph")
    s.add_argument("graph")
    s.add_argument("lists")

    s = sub.add_parser("trace-faces", parents=[common], help="faces of a rotation system")
    s.add_argument("embedding")

    s = sub.add_parser("generate", parents=[common], help="write fixture files")
    s.add_argument("what", choices=("polygon", "identification", "k5-projective", "k6-projective",
                                    "k7-torus", "gallai", "clique-free", "prop12"))
    s.add_argument("--out", default=".")
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--shape", choices=("fan", "snake", "random"), default="snake")
    s.add_argument("--first", type=int)
    s.add_argument("--second", type=int)
    s.add_argument("--twist", action="store_true")
    s.add_argument("--i", type=int, default=2)
    s.add_argument("--k", type=int, default=4)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.command = ALIASES.get(args.command, args.command)
    for attr in ("name", "what"):
        if hasattr(args, attr):
            setattr(args, attr, ALIASES.get(getattr(args, attr), getattr(args, attr)))
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "no_timing") and v is not None}
    report = RunReport(command=args.command, params=params)
    start = time.perf_counter()
    try:
        COMMANDS[args.command](args, report)
    except (UsageError, formats.FormatError, DomainError, GraphError, EmbeddingError,
            ComplexityGuardError, IndexError, ValueError) as exc:
        print(f"heawood {args.command}: error: {exc}", file=sys.stderr)
        return 2
    report.wall_clock = time.perf_counter() - start
    print(render(report, args.format, timing=not args.no_timing))
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
