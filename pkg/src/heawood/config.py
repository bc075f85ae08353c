"""Size caps for the exhaustive searches. All of them can be overridden from the CLI."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class DeskCaps:
    choosability_max_n: int = 8    # brute-force choosability / degree-choosability
    choosability_max_k: int = 5
    solver_oracle_max_n: int = 6   # naive-enumeration cross-check of the solver
    critical_max_n: int = 12       # single-deletion criticality tests
    critical_search_max_n: int = 8 # exhaustive search for k-critical graphs
    max_classes: int | None = None # cap on isomorphism classes per vertex count
    palette_bound: int | None = None

    def with_overrides(self, **kw) -> "DeskCaps":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


DEFAULT_CAPS = DeskCaps()
