"""Closed-form limiting objects: the curved shape, the semicircle law, the
escape-angle law, the interface-angle law, and the parabolic growth region.

Everything here is deterministic analysis; the Monte Carlo experiments in
the harness compare their empirical output against these functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError

_TOL = 1e-12
_MAX_ITER = 200


def omega_star(u: float) -> float:
    """The curved limiting boundary in rotated coordinates.

    (2/pi) * (u*arcsin(u/2) + sqrt(4 - u^2)) for |u| <= 2, and |u| outside:
    even, 1-Lipschitz, and tangent to |u| at u = +-2.
    """
    a = abs(u)
    if a >= 2.0:
        return a
    return (2.0 / math.pi) * (u * math.asin(u / 2.0) + math.sqrt(4.0 - u * u))


def omega_star_slope(u: float) -> float:
    """Derivative of omega_star; (2/pi)*arcsin(u/2) inside [-2, 2]."""
    if u <= -2.0:
        return -1.0
    if u >= 2.0:
        return 1.0
    return (2.0 / math.pi) * math.asin(u / 2.0)


def semicircle_density(w: float) -> float:
    """sqrt(4 - w^2) / (2*pi) on [-2, 2], zero outside."""
    if abs(w) >= 2.0:
        return 0.0
    return math.sqrt(4.0 - w * w) / (2.0 * math.pi)


def semicircle_cdf(t: float) -> float:
    """Distribution function of the radius-2 semicircle law."""
    if t <= -2.0:
        return 0.0
    if t >= 2.0:
        return 1.0
    return 0.5 + (t * math.sqrt(4.0 - t * t) / 4.0 + math.asin(t / 2.0)) / math.pi


def _bisect(
    f: Callable[[float], float], lo: float, hi: float, target: float
) -> float:
    """Root of f(x) = target for nondecreasing f on [lo, hi]."""
    flo, fhi = f(lo) - target, f(hi) - target
    if flo > 0 or fhi < 0:
        raise DomainError(f"target {target} outside range [{flo + target}, {fhi + target}]")
    for _ in range(_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if hi - lo < _TOL:
            return mid
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def semicircle_quantile(p: float) -> float:
    """Inverse of semicircle_cdf on [0, 1], by bisection to 1e-12."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p}")
    if p == 0.0:
        return -2.0
    if p == 1.0:
        return 2.0
    return _bisect(semicircle_cdf, -2.0, 2.0, p)


def semicircle_sample(rng: np.random.Generator, size: int | None = None):
    """Draws from the semicircle law via quantile transformation."""
    if size is None:
        return semicircle_quantile(rng.random())
    return np.array([semicircle_quantile(p) for p in rng.random(size)])


def theta_of_w(w: float) -> float:
    """Escape angle assigned to a boundary position w in [-2, 2].

    The two-argument arctangent of the boundary point in the original
    (unrotated) quadrant: the point at rotated coordinate w sits at
    ((omega_star(w) + w)/2, (omega_star(w) - w)/2) up to scale, so the angle
    is atan2(omega - w, omega + w).  Strictly decreasing, with values
    pi/2 at w = -2, pi/4 at 0, and 0 at w = 2.
    """
    if not -2.0 <= w <= 2.0:
        raise DomainError(f"w must be in [-2, 2], got {w}")
    v = omega_star(w)
    return math.atan2(v - w, v + w)


def theta_of_w_printed(w: float) -> float:
    """The same angle via the arc-cotangent expression, for cross-checking.

    pi/4 - arctan(1/A) with A = (2/pi)(arcsin(w/2) + sqrt(4 - w^2)/w); the
    removable singularity at w = 0 is the value pi/4.  Kept only so tests
    can verify the two forms agree; use theta_of_w.
    """
    if not -2.0 <= w <= 2.0:
        raise DomainError(f"w must be in [-2, 2], got {w}")
    if w == 0.0:
        return math.pi / 4.0
    a = (2.0 / math.pi) * (math.asin(w / 2.0) + math.sqrt(4.0 - w * w) / w)
    return math.pi / 4.0 - math.atan(1.0 / a)


def theta_inverse(s: float) -> float:
    """The boundary position whose escape angle is s in [0, pi/2]."""
    if not 0.0 <= s <= math.pi / 2.0:
        raise DomainError(f"angle must be in [0, pi/2], got {s}")
    # theta_of_w decreases, so invert the decreasing map via its negation
    return _bisect(lambda w: -theta_of_w(w), -2.0, 2.0, -s)


def theta_cdf(s: float) -> float:
    """Distribution function of the escape angle: 1 - F_sc(theta_inverse)."""
    if not 0.0 <= s <= math.pi / 2.0:
        raise DomainError(f"angle must be in [0, pi/2], got {s}")
    return 1.0 - semicircle_cdf(theta_inverse(s))


def theta_quantile(p: float) -> float:
    """Inverse of theta_cdf, via the exact composition with the semicircle."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p}")
    return theta_of_w(semicircle_quantile(1.0 - p))


def theta_density(s: float) -> float:
    """Density of the escape angle.

    Chain rule: the angle map has derivative -(2/pi)sqrt(4-w^2)/(omega^2+w^2)
    (from d/dw omega_star = (2/pi)arcsin(w/2)), and dividing the semicircle
    density by its magnitude collapses to (omega_star(w)^2 + w^2)/4 at
    w = theta_inverse(s).  Bounded, with value 2 at both endpoints and
    4/pi^2 at pi/4.
    """
    if not 0.0 <= s <= math.pi / 2.0:
        raise DomainError(f"angle must be in [0, pi/2], got {s}")
    w = theta_inverse(s)
    v = omega_star(w)
    return (v * v + w * w) / 4.0


def phi_cdf(x: float) -> float:
    """Distribution function of the interface angle on [0, pi/2].

    sqrt(sin x) / (sqrt(sin x) + sqrt(cos x)).
    """
    if not 0.0 <= x <= math.pi / 2.0:
        raise DomainError(f"angle must be in [0, pi/2], got {x}")
    if x == math.pi / 2.0:
        return 1.0  # cos(fl(pi/2)) is 6e-17, not 0; pin the endpoint
    s, c = math.sqrt(max(math.sin(x), 0.0)), math.sqrt(max(math.cos(x), 0.0))
    return s / (s + c)


def phi_density(x: float) -> float:
    """Density of the interface angle: 1/(2 sqrt(sin x cos x) (sqrt(sin x)+sqrt(cos x))^2).

    Unbounded at both endpoints; defined on the open interval.
    """
    if not 0.0 < x < math.pi / 2.0:
        raise DomainError(f"angle must be in (0, pi/2), got {x}")
    s, c = math.sin(x), math.cos(x)
    return 1.0 / (2.0 * math.sqrt(s * c) * (math.sqrt(s) + math.sqrt(c)) ** 2)


def phi_quantile(p: float) -> float:
    """Inverse of phi_cdf on [0, 1], by bisection."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must be in [0, 1], got {p}")
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return math.pi / 2.0
    return _bisect(phi_cdf, 0.0, math.pi / 2.0, p)


def rost_shape_contains(x: float, y: float) -> bool:
    """Whether (x, y) lies in the limiting growth region sqrt(x)+sqrt(y) <= 1."""
    if x < 0 or y < 0:
        raise DomainError("coordinates must be nonnegative")
    return math.sqrt(x) + math.sqrt(y) <= 1.0


def rost_boundary_v(u: float) -> float:
    """The growth region's boundary in rotated coordinates: v = (1 + u^2)/2."""
    if not -1.0 <= u <= 1.0:
        raise DomainError(f"u must be in [-1, 1], got {u}")
    return 0.5 * (1.0 + u * u)


@dataclass(frozen=True)
class LawTable:
    """A named law bundled with its evaluables, for export and fitting."""

    name: str
    support: tuple[float, float]
    cdf: Callable[[float], float]
    quantile: Callable[[float], float]
    density: Callable[[float], float] | None = None


def law_table(name: str) -> LawTable:
    """The bundled (cdf, quantile, density) for a law name."""
    if name == "semicircle":
        return LawTable(
            "semicircle", (-2.0, 2.0),
            semicircle_cdf, semicircle_quantile, semicircle_density,
        )
    if name == "theta":
        return LawTable(
            "theta", (0.0, math.pi / 2.0),
            theta_cdf, theta_quantile, theta_density,
        )
    if name == "phi":
        return LawTable(
            "phi", (0.0, math.pi / 2.0),
            phi_cdf, phi_quantile,
            lambda x: phi_density(x) if 0.0 < x < math.pi / 2.0 else math.inf,
        )
    raise DomainError(f"unknown law {name!r}")
