"""Exact integer arithmetic for Heawood numbers and genus windows.

Everything here is integer-only. ``math.isqrt`` is exact, so values such as
``24 * 7 + 1 == 169`` never suffer float rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import isqrt
from typing import Mapping


class DomainError(ValueError):
    """Argument outside the range where a formula is defined."""


class Orientability(str, enum.Enum):
    ORIENTABLE = "orientable"
    NONORIENTABLE = "nonorientable"
    EITHER = "either"


@dataclass(frozen=True)
class SurfaceGenus:
    """A surface identified by Euler genus plus an orientability hint.

    The hint only matters for the Klein bottle (``epsilon == 2``,
    nonorientable), where K6 rather than K7 is the largest clique.
    """

    epsilon: int
    orientability: Orientability = Orientability.EITHER

    def __post_init__(self) -> None:
        if self.epsilon < 0:
            raise DomainError(f"Euler genus must be >= 0, got {self.epsilon}")
        object.__setattr__(self, "orientability", Orientability(self.orientability))
        if self.epsilon == 0 and self.orientability is Orientability.NONORIENTABLE:
            raise DomainError("the sphere is orientable")

    @property
    def is_klein_bottle(self) -> bool:
        return self.epsilon == 2 and self.orientability is Orientability.NONORIENTABLE


def heawood_number(epsilon: int) -> int:
    """H(eps) = floor((7 + sqrt(24 eps + 1)) / 2), exactly.

    >>> [heawood_number(e) for e in (1, 2, 3, 4, 9)]
    [6, 7, 7, 8, 10]
    """
    if epsilon <= 0:
        raise DomainError(f"Heawood number is defined for epsilon >= 1, got {epsilon}")
    # floor((7 + s)/2) == (7 + floor(s)) // 2 for real s >= 0
    return (7 + isqrt(24 * epsilon + 1)) // 2


def min_genus_complete(n: int) -> tuple[int, bool]:
    """Least Euler genus of a surface carrying K_n, and the K7 Klein flag.

    Returns ``(ceil((n-3)(n-4)/6), n == 7)``; the flag records that K7 embeds
    on the torus but not on the Klein bottle.
    """
    if n < 3:
        raise DomainError(f"min_genus_complete needs n >= 3, got {n}")
    return -(-(n - 3) * (n - 4) // 6), n == 7


@dataclass(frozen=True)
class GenusWindow:
    """The run of Euler genera sharing one Heawood number.

    ``special`` marks the top of a ``H = 3i + 4`` window, the only genera where
    Euler's formula leaves room for K_{H+1} minus an edge.
    """

    i: int
    heawood: int
    eps_lo: int
    eps_hi: int
    special: bool

    @property
    def case(self) -> str:
        return "abc"[self.heawood - 3 * self.i - 3]

    @property
    def size(self) -> int:
        return self.eps_hi - self.eps_lo + 1

    def special_embedding_status(self) -> str | None:
        """Literature status of K_{H+1} - E on a Special Case surface.

        ``None`` outside the Special Cases. ``H = 7`` (i = 1) is known not to
        embed; ``H = 1, 4, 10 (mod 12)`` embeds; ``H = 7 (mod 12)`` with
        ``i > 1`` is reported as unknown.
        """
        if not self.special:
            return None
        if self.i == 1:
            return "non-embeddable"
        if self.heawood % 12 in (1, 4, 10):
            return "embeddable"
        return "unknown"


def window_bounds(i: int, case: str) -> tuple[int, int]:
    """(eps_lo, eps_hi) for the window with parameter ``i`` and case a/b/c."""
    if i < 1:
        raise DomainError(f"window parameter i must be >= 1, got {i}")
    if case == "a":
        return (3 * i * i - i) // 2, (3 * i * i + i - 2) // 2
    if case == "b":
        return (3 * i * i + i) // 2, (3 * i * i + 3 * i) // 2
    if case == "c":
        return (3 * i * i + 3 * i + 2) // 2, (3 * i * i + 5 * i) // 2
    raise DomainError(f"unknown window case {case!r}")


def genus_window(epsilon: int) -> GenusWindow:
    h = heawood_number(epsilon)
    i = (h - 3) // 3
    case = "abc"[h - 3 * i - 3]
    lo, hi = window_bounds(i, case)
    assert lo <= epsilon <= hi, (epsilon, i, case, lo, hi)
    return GenusWindow(i=i, heawood=h, eps_lo=lo, eps_hi=hi,
                       special=(case == "b" and epsilon == hi))


def special_case_epsilon(i: int) -> int:
    """Euler genus of the i-th Special Case, (3i^2 + 3i) / 2."""
    if i < 1:
        raise DomainError(f"i must be >= 1, got {i}")
    return (3 * i * i + 3 * i) // 2


def is_special_case(epsilon: int) -> bool:
    return genus_window(epsilon).special


def largest_embeddable_clique(surface: SurfaceGenus) -> int:
    if surface.epsilon < 1:
        raise DomainError("largest_embeddable_clique needs epsilon >= 1")
    if surface.is_klein_bottle:
        return 6
    return heawood_number(surface.epsilon)


def edge_bound(n: int, epsilon: int) -> int:
    """Max edges of a graph on S_eps whose faces all have length >= 3."""
    if n < 3:
        raise DomainError(f"edge_bound needs n >= 3, got {n}")
    return 3 * n + 3 * (epsilon - 2)


def inequality_star(epsilon: int, n: int) -> int:
    """Right-hand side 6(eps - 1) - (H - 6) n of the face-degree inequality."""
    h = heawood_number(epsilon)
    if n < h + 1:
        raise DomainError(f"inequality_star needs n >= H + 1 = {h + 1}, got {n}")
    return 6 * (epsilon - 1) - (h - 6) * n


@dataclass(frozen=True)
class DegreeProfile:
    """Degree counts of an embedded graph relative to a distinguished face.

    ``counts`` maps degree -> number of vertices; ``face_high_count`` is the
    number of vertices on the face with degree >= H(eps).
    """

    n: int
    counts: Mapping[int, int] = field(default_factory=dict)
    face_high_count: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", {d: c for d, c in sorted(self.counts.items()) if c})

    @classmethod
    def from_degrees(cls, degrees, face_high_count: int = 0) -> "DegreeProfile":
        counts: dict[int, int] = {}
        for d in degrees:
            counts[d] = counts.get(d, 0) + 1
        return cls(n=sum(counts.values()), counts=counts, face_high_count=face_high_count)

    def d(self, degree: int) -> int:
        return self.counts.get(degree, 0)

    def d_at_least(self, degree: int) -> int:
        return sum(c for d, c in self.counts.items() if d >= degree)

    def validate(self, epsilon: int | None = None) -> None:
        if any(c < 0 for c in self.counts.values()) or self.face_high_count < 0:
            raise ValueError("degree counts must be non-negative")
        if sum(self.counts.values()) != self.n:
            raise ValueError(f"degree counts sum to {sum(self.counts.values())}, expected n = {self.n}")
        if epsilon is not None and self.face_high_count > self.d_at_least(heawood_number(epsilon)):
            raise ValueError("face_high_count exceeds the number of vertices of degree >= H")


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: int
    rhs: int
    holds: bool
    strict: bool = False

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class ProfileReport:
    epsilon: int
    heawood: int
    n: int
    in_induction_range: bool
    special_case: bool
    excluded: bool
    checks: dict[str, InequalityCheck]
    status: str


def check_profile_inequalities(profile: DegreeProfile, epsilon: int) -> ProfileReport:
    """Evaluate the degree-profile inequalities for a graph on S_eps.

    ``star``: d_{H-1} + 2 d^F_{>=H} <= 6(eps-1) - (H-6) n
    ``double_star``: (H-5) n <= 6(eps-1) + d_{H-2} + d_H
    ``triple_star``: (H-6) n < 6(eps-1)

    The status follows the induction: a profile with high-degree face
    vertices is judged by ``star``; otherwise ``double_star`` decides, and a
    profile made only of degrees H-2 and H is the "block case", settled by the
    block-cutvertex argument.
    """
    profile.validate(epsilon)
    h = heawood_number(epsilon)
    n = profile.n
    window = genus_window(epsilon)
    high_face = profile.d(h - 1) + 2 * profile.face_high_count

    star = InequalityCheck("star", high_face, 6 * (epsilon - 1) - (h - 6) * n,
                           high_face <= 6 * (epsilon - 1) - (h - 6) * n)
    dstar_lhs = (h - 5) * n
    dstar_rhs = 6 * (epsilon - 1) + profile.d(h - 2) + profile.d(h)
    dstar = InequalityCheck("double_star", dstar_lhs, dstar_rhs, dstar_lhs <= dstar_rhs)
    tstar = InequalityCheck("triple_star", (h - 6) * n, 6 * (epsilon - 1),
                            (h - 6) * n < 6 * (epsilon - 1), strict=True)

    in_range = n >= h + 1
    if high_face > 0:
        if not in_range:
            status = "out of theorem range"
        elif not star.holds:
            status = "contradiction reached"
        else:
            status = "special-case slack"
    elif not dstar.holds:
        status = "contradiction reached"
    elif n == profile.d(h - 2) + profile.d(h):
        status = "block case"
    elif not tstar.holds:
        status = "contradiction reached"
    else:
        status = "no contradiction"

    return ProfileReport(
        epsilon=epsilon, heawood=h, n=n, in_induction_range=in_range,
        special_case=window.special, excluded=(epsilon == 3),
        checks={"star": star, "double_star": dstar, "triple_star": tstar},
        status=status,
    )
