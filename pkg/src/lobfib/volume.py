"""Hyperbolic volumes of the two families, via the Lobachevskii function

    L(x) = -Integral_0^x log|2 sin t| dt.

L is odd, pi-periodic, and attains its maximum at pi/6.  Every evaluation is
range-reduced to [0, pi/2] and computed there with the endpoint singularity
removed analytically:

    L(r) = r - r*log(2r) - Integral_0^r log(sin t / t) dt,

whose integrand is analytic on [0, pi/2], so adaptive quadrature resolves it
to near machine precision and supplies an error estimate.  No special
function library is used on this path; the test suite checks it against an
independent quadrature of the defining integral and the duplication identity
L(2x) = 2 L(x) + 2 L(x + pi/2).

Volume formulas (v3 = 2 L(pi/6) is the volume of the regular ideal
tetrahedron, 1.014941...):

Lobell manifolds, built from 8 colored copies of R(n):

    ell(n) = 4n * (2 L(th) + L(th + pi/n) + L(th - pi/n) - L(2 th - pi/2)),
    th(n)  = pi/2 - arccos(1 / (2 cos(pi/n))),

with th decreasing to pi/6, so ell(n) ~ 10n * v3 (always from below).

Fibonacci manifolds M(n), the closed-up capped antiprisms Y(n):

    vol M(n) = 2n * (L(a + b) + L(a - b)),
    b(n) = pi/n,   a(n) = arccos(cos(2 b(n)) - 1/2) / 2,

with a decreasing to pi/6, so vol M(n) ~ 2n * v3, again from below.
At n = 4 the angle a is exactly pi/3 and the volume collapses to 4 L(pi/6).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad

_HALF_PI = math.pi / 2.0


# ---------------------------------------------------------------------------
# the Lobachevskii function
# ---------------------------------------------------------------------------

def _log_sinc(t: float) -> float:
    # log(sin t / t), extended by 0 at t = 0; analytic on [0, pi/2]
    if t == 0.0:
        return 0.0
    return math.log(math.sin(t) / t)


@lru_cache(maxsize=200000)
def _core(r: float) -> tuple[float, float]:
    """(value, error bound) of L on the reduced range [0, pi/2]."""
    if r == 0.0:
        return 0.0, 0.0
    smooth, err = quad(_log_sinc, 0.0, r, epsabs=1e-14, epsrel=1e-14, limit=200)
    value = r - r * math.log(2.0 * r) - smooth
    # quadrature estimate plus a cushion for the closed-form terms
    return value, err + 4e-16 * (abs(value) + 1.0)


def lobachevsky_with_error(x: float) -> tuple[float, float]:
    """L(x) together with a conservative absolute error bound."""
    if not math.isfinite(x):
        raise ValueError(f"argument must be finite, got {x!r}")
    r = math.remainder(x, math.pi)  # periodicity: L(x) = L(r), r in [-pi/2, pi/2]
    sign = -1.0 if r < 0.0 else 1.0
    value, err = _core(abs(r))
    return sign * value, err


def lobachevsky(x: float) -> float:
    """The Lobachevskii function L(x) = -Integral_0^x log|2 sin t| dt."""
    return lobachevsky_with_error(x)[0]


def v3() -> float:
    """Volume of the regular ideal tetrahedron, 2 L(pi/6) = 1.014941..."""
    return 2.0 * lobachevsky(math.pi / 6.0)


# ---------------------------------------------------------------------------
# volume formulas
# ---------------------------------------------------------------------------

@dataclass
class VolumeResult:
    """A volume value with a conservative error bound and the intermediate
    angles that produced it."""

    value: float
    error_bound: float
    parameters: dict[str, float]

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "errorBound": self.error_bound,
            "parameters": dict(self.parameters),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def theta(n: int) -> float:
    """Dihedral-angle parameter of the Lobell volume formula; decreases
    strictly to pi/6 as n grows."""
    if n < 5:
        raise ValueError("Andreev condition fails below n=5")
    return _HALF_PI - math.acos(1.0 / (2.0 * math.cos(math.pi / n)))


def lobell_volume(n: int) -> VolumeResult:
    """Volume ell(n) shared by every manifold glued from 8 colored copies of
    R(n); equals 8 times the volume of the right-angled R(n) itself."""
    th = theta(n)
    step = math.pi / n
    t1, e1 = lobachevsky_with_error(th)
    t2, e2 = lobachevsky_with_error(th + step)
    t3, e3 = lobachevsky_with_error(th - step)
    t4, e4 = lobachevsky_with_error(2.0 * th - _HALF_PI)
    value = 4.0 * n * (2.0 * t1 + t2 + t3 - t4)
    err = 4.0 * n * (2.0 * e1 + e2 + e3 + e4) + 8e-16 * (abs(value) + 1.0)
    return VolumeResult(value, err, {"theta": th})


def fibonacci_parameters(n: int) -> tuple[float, float]:
    """The angle pair (a, b) of the Fibonacci volume formula."""
    if n < 4:
        raise ValueError("capped antiprism needs n >= 4")
    b = math.pi / n
    a = 0.5 * math.acos(math.cos(2.0 * b) - 0.5)
    return a, b


def fibonacci_volume(n: int) -> VolumeResult:
    """Volume of the Fibonacci manifold M(n)."""
    a, b = fibonacci_parameters(n)
    t1, e1 = lobachevsky_with_error(a + b)
    t2, e2 = lobachevsky_with_error(a - b)
    value = 2.0 * n * (t1 + t2)
    err = 2.0 * n * (e1 + e2) + 8e-16 * (abs(value) + 1.0)
    return VolumeResult(value, err, {"a": a, "b": b})
