"""Two-sided bounds on Matveev complexity from volume and triangulation size.

For a closed orientable hyperbolic 3-manifold M the volume satisfies
vol(M) < c(M) * v3, where c(M) is the Matveev complexity and
v3 = 2 Lambda(pi/6) = 1.0149... is the maximal tetrahedron volume; hence the
least integer k with k * v3 > vol(M) is a certified lower bound for c(M).
Any concrete triangulation with t tetrahedra gives the upper bound
c(M) <= t.  For the two families this produces

    Loebell:    lower(n) <= c <= 32(2n - 1), with vol = l(n) ~ 10n * v3,
    Fibonacci:  lower(n) <= c <= 3n,         with vol(M(n)) ~ 2n * v3,

so the complexity grows linearly in n and the lower bound approaches the
asymptotic coefficients 10n resp. 2n from below.  Because the approach is
from below, lower(n) >= 10n (resp. 2n) only from some finite n onward;
each report carries the asymptotic value and a flag saying whether it is
attained at that specific n.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .coloring import canonical_coloring
from .polytope import FIBONACCI, LOBELL, build_lobell_polytope
from .triangulation import triangulate_fibonacci, triangulate_lobell
from .volume import VolumeResult, fibonacci_volume, lobell_volume, v3


def lobell_tet_count(n: int) -> int:
    """Closed formula for the size of the fan-and-cone triangulation."""
    return 32 * (2 * n - 1)


def fibonacci_tet_count(n: int) -> int:
    """Closed formula for the size of the apex-cone triangulation."""
    return 3 * n


def lower_bound_from_volume(volume: VolumeResult) -> int:
    """Least integer k with k * v3 strictly above the volume.

    The quadrature error bound is added to the value first, so the result
    is a certified bound for every true volume inside the interval.
    """
    return math.floor((volume.value + volume.error_bound) / v3()) + 1


@dataclass
class BoundsReport:
    """Certified complexity window for one manifold of a family."""

    family: str
    n: int
    volume: VolumeResult
    lower_bound: int
    upper_bound: int
    asymptotic_lower: int
    asymptotic_attained: bool

    @property
    def ratios(self) -> dict[str, float]:
        return {
            "volumeOverV3Upper": self.volume.value / (v3() * self.upper_bound),
            "lowerOverUpper": self.lower_bound / self.upper_bound,
        }

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "volume": self.volume.to_json_dict(),
            "lowerBound": self.lower_bound,
            "upperBound": self.upper_bound,
            "asymptoticLower": self.asymptotic_lower,
            "asymptoticAttained": self.asymptotic_attained,
            "ratios": self.ratios,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def as_text(self) -> str:
        ratios = self.ratios
        rows = [
            ("family", self.family),
            ("n", str(self.n)),
            ("volume", f"{self.volume.value:.9f}"),
            ("volume error bound", f"{self.volume.error_bound:.9e}"),
            ("lower bound", str(self.lower_bound)),
            ("upper bound", str(self.upper_bound)),
            ("asymptotic lower", str(self.asymptotic_lower)),
            ("asymptotic attained", "yes" if self.asymptotic_attained else "no"),
            ("volume / (v3 * upper)", f"{ratios['volumeOverV3Upper']:.9f}"),
            ("lower / upper", f"{ratios['lowerOverUpper']:.9f}"),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {val}" for k, val in rows)


def bounds_report(family: str, n: int) -> BoundsReport:
    """Volume, certified lower bound, and witnessed upper bound for one n.

    The upper bound is the tetrahedron count of the actually constructed
    triangulation, cross-checked against the closed formula.
    """
    if family == LOBELL:
        volume = lobell_volume(n)
        tri = triangulate_lobell(canonical_coloring(build_lobell_polytope(n)))
        expected = lobell_tet_count(n)
        asymptotic = 10 * n
    elif family == FIBONACCI:
        volume = fibonacci_volume(n)
        tri = triangulate_fibonacci(n)
        expected = fibonacci_tet_count(n)
        asymptotic = 2 * n
    else:
        raise ValueError(f"unknown family {family!r}")
    if tri.tet_count != expected:
        raise RuntimeError(
            f"triangulation of {family} n={n} has {tri.tet_count} tetrahedra, "
            f"but the closed formula gives {expected}"
        )
    lower = lower_bound_from_volume(volume)
    return BoundsReport(
        family=family,
        n=n,
        volume=volume,
        lower_bound=lower,
        upper_bound=tri.tet_count,
        asymptotic_lower=asymptotic,
        asymptotic_attained=lower >= asymptotic,
    )
