"""The ten exit criteria as callable checks with their time limits.

``run(number)`` returns a :class:`CriterionResult`; the pytest suite and
``scripts/run_acceptance.py`` both go through here.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import verify


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    @property
    def within_limit(self) -> bool:
        return self.limit is None or self.seconds <= self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_limit

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        limit = f" / {self.limit:.0f}s" if self.limit is not None else ""
        late = "" if self.within_limit else " (over time limit)"
        return f"[{verdict}] criterion {self.number}: {self.title} ({self.seconds:.2f}s{limit}){late}: {self.detail}"


def _c1():
    s = verify.verify_heawood_windows(max_i=50)
    return s.passed, "; ".join(s.problems[:3]) or "anchors, windows i <= 50, Klein bottle exception"


def _c2():
    s = verify.verify_special_cases(max_i=20)
    return s.passed, "; ".join(s.problems[:3]) or "special exactly at (3i^2+3i)/2 for i <= 20, H = 3i+4"


def _c3():
    s = verify.verify_small_graphs(1)
    return s.passed, (f"{s.instances} instances checked, {s.skipped_f_bad} F-bad skipped, "
                      f"{len(s.violations)} violations")


def _c4():
    s = verify.verify_degree_greedy(trials=1000, seed=0, max_k=9)
    return s.passed, f"{s.trials} instances, {len(s.failures)} failures"


def _c5():
    s = verify.verify_degree_choosability(max_n=7)
    graphs = sum(r[1] for r in s.per_n)
    trees = sum(r[2] for r in s.per_n)
    return s.passed, f"{graphs} connected graphs ({trees} Gallai trees), {len(s.mismatches)} mismatches"


def _c6():
    s = verify.verify_edge_bound(ks=(4, 5), max_n=8)
    counts = {k: sum(1 for r in v if r[2]) for k, v in s.found.items()}
    return s.passed, (f"K_k-free k-critical graphs per k: {counts}, {len(s.violations)} violations, "
                      f"Gallai join unique on k+2 vertices: {s.gallai_unique}")


def _c7():
    s = verify.verify_clique_free_family(2)
    return s.passed, (f"omega = {s.clique_number}, K8 present: {s.has_forbidden_clique}, "
                      f"8-critical: {s.critical}, identical 7-lists fail: {s.lists_fail}")


def _c8():
    s = verify.verify_polygon_identifications(max_n=9)
    return s.passed, (f"{s.polygons} polygons, {s.qualifying} qualifying identifications {s.by_kind}, "
                      f"{len(s.violations)} violations")


def _c9():
    r = verify.verify_special_case_squeeze()
    a, b, c = r["(9, 10)"], r["(9, 11)"], r["(3, 8)"]
    ok = ((a.lower, a.upper) == (118, 108) and a.contradiction
          and (b.lower, b.upper) == (110, 108) and b.contradiction
          and not c.contradiction)
    return ok, (f"(9,10): {a.lower} > {a.upper}; (9,11): {b.lower} > {b.upper}; "
                f"(3,8): {c.lower} vs {c.upper}, margin {c.margin} (anomaly)")


def _c10():
    s = verify.verify_embedding_layer(trials=500, seed=0, max_n=8)
    return s.passed, (f"{s.planar_checked} planar rotations at genus 0, {s.random_checked} random "
                      f"rotation systems with face lengths summing to 2e")


CRITERIA: dict[int, tuple[str, float | None, Callable[[], tuple[bool, str]]]] = {
    1: ("Heawood table and windows", 1.0, _c1),
    2: ("Special Case detection", 1.0, _c2),
    3: ("small-graph theorem check, eps = 1", 600.0, _c3),
    4: ("degree-ordered greedy, 1000 instances", 30.0, _c4),
    5: ("degree-choosability vs Gallai trees, n <= 7", 900.0, _c5),
    6: ("edge bound for K_k-free k-critical graphs, n <= 8", 600.0, _c6),
    7: ("K5 + C5 instance", 300.0, _c7),
    8: ("polygon identifications, n <= 9", 600.0, _c8),
    9: ("Special Case edge-count margins", None, _c9),
    10: ("face tracing layer", 30.0, _c10),
}


def run(number: int) -> CriterionResult:
    title, limit, fn = CRITERIA[number]
    start = time.perf_counter()
    passed, detail = fn()
    return CriterionResult(number, title, passed, detail, time.perf_counter() - start, limit)
