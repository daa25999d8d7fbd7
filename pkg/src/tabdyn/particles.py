"""Exclusion-particle views of diagram growth, and the corner growth model.

A diagram's staircase boundary, read left to right, is a sequence of
down-slopes (particles) and up-slopes (holes) on the half-integer lattice;
growing the diagram by one box makes one particle hop right into a hole.
Tracking the distinguished hole/particle pair created by the first box
turns growth traces into second-class-particle trajectories.  The corner
growth model runs the same combinatorics in continuous time via
last-passage percolation over exponential weights.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .core import Box, StandardTableau, YoungDiagram
from .errors import EmptyTrace, WindowTooSmall
from .plancherel import GrowthTrace
from .taquin import LatticePath, MissingEntries, infinite_path_prefix


# ---------------------------------------------------------------------------
# Rost's diagram <-> particle correspondence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParticleConfig:
    """Occupancies on sites lo..hi; site m stands for the point m + 1/2.

    The background is a step: far left all particles, far right all holes.
    ``second_class`` is the contracted-pair site when one is being tracked.
    """

    lo: int
    occupancy: tuple[bool, ...]
    second_class: int | None = None

    @property
    def hi(self) -> int:
        return self.lo + len(self.occupancy) - 1

    def occupied(self, m: int) -> bool:
        if m < self.lo:
            return True
        if m > self.hi:
            return False
        return self.occupancy[m - self.lo]

    def particle_points(self) -> list[float]:
        """Physical positions (m + 1/2) of particles inside the window."""
        return [m + 0.5 for m in range(self.lo, self.hi + 1) if self.occupied(m)]

    def hole_points(self) -> list[float]:
        return [m + 0.5 for m in range(self.lo, self.hi + 1) if not self.occupied(m)]


def diagram_to_particles(
    diagram: YoungDiagram, window: tuple[int, int]
) -> ParticleConfig:
    """Occupancies of the diagram's boundary over the window of sites.

    Site m is occupied exactly when the boundary profile has slope -1 over
    [m, m+1], which happens for m = row(j) - j, j = 1, 2, ... (rows beyond
    the diagram count with length 0).
    """
    lo, hi = window
    height = diagram.n_rows
    width = diagram.rows[0] if diagram.rows else 0
    if lo > -height - 1 or hi < width + 1:
        raise WindowTooSmall(
            f"window [{lo}, {hi}] must cover [{-height - 1}, {width + 1}]"
        )
    down = {diagram.row(j) - j for j in range(1, height + 1)}
    occ = tuple(m in down or m < -height for m in range(lo, hi + 1))
    return ParticleConfig(lo, occ)


def particles_to_diagram(config: ParticleConfig) -> YoungDiagram:
    """Read the staircase back from occupancies (inverse of the above)."""
    if not config.occupancy or not config.occupancy[0]:
        raise WindowTooSmall("window must start inside the all-particle tail")
    positions = [m for m in range(config.lo, config.hi + 1) if config.occupied(m)]
    positions.reverse()  # largest first
    rows: list[int] = []
    for j, m in enumerate(positions, start=1):
        r = m + j
        if r <= 0:
            break
        rows.append(r)
    return YoungDiagram(tuple(rows))


# ---------------------------------------------------------------------------
# second-class (starred-pair) trajectories
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SecondClassTrajectory:
    """Pair position X and jump count v after each growth step.

    X(0) = 0 and v(0) = 0 at the step that creates the pair; each later
    step changes (X, v) by (+1, 1), (-1, 1), or (0, 0).
    """

    positions: tuple[int, ...]
    jumps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.positions)


def second_class_from_growth(
    trace: GrowthTrace, engine: str = "auto"
) -> SecondClassTrajectory:
    """Pair trajectory read off the lazy walk of the growth trace.

    With (a, b) the lazy-walk position after n + 1 boxes, X(n) = a - b and
    v(n) = a + b - 2.
    """
    if len(trace) == 0:
        raise EmptyTrace("trace has no steps")
    if trace.boxes[0] != (1, 1):
        raise ValueError("growth must start at box (1,1)")
    use_kernel = engine == "kernel" or (
        engine == "auto" and _kernels.HAVE_NUMBA and len(trace) >= 64
    )
    if use_kernel:
        bi = np.fromiter((b[0] for b in trace.boxes), np.int64, len(trace))
        bj = np.fromiter((b[1] for b in trace.boxes), np.int64, len(trace))
        qi, qj = _kernels.lazy_walk(bi, bj)
        return SecondClassTrajectory(
            tuple((qi - qj).tolist()), tuple((qi + qj - 2).tolist())
        )
    xs: list[int] = []
    vs: list[int] = []
    ci, cj = 0, 0
    for m, (i, j) in enumerate(trace.boxes):
        if m == 0 or (i, j) in ((ci + 1, cj), (ci, cj + 1)):
            ci, cj = i, j
        xs.append(ci - cj)
        vs.append(ci + cj - 2)
    return SecondClassTrajectory(tuple(xs), tuple(vs))


def simulate_enhanced(
    trace: GrowthTrace, engine: str = "auto"
) -> SecondClassTrajectory:
    """Pair trajectory from a direct particle-level replay of the trace.

    Independent of the lazy-walk route: each growth box (i, j) makes the
    particle on site i-j-1 hop one site right; the starred pair advances
    when its own particle hops and retreats when a hop lands on its hole.
    Agreement with second_class_from_growth is a standing property test.
    """
    if len(trace) == 0:
        raise EmptyTrace("trace has no steps")
    if trace.boxes[0] != (1, 1):
        raise ValueError("growth must start at box (1,1)")
    us = [i - j for i, j in trace.boxes]
    use_kernel = engine == "kernel" or (
        engine == "auto" and _kernels.HAVE_NUMBA and len(trace) >= 64
    )
    if use_kernel:
        arr = np.asarray(us, dtype=np.int64)
        lo = int(arr.min()) - 2
        width = int(arr.max()) + 3 - lo
        status, x, v = _kernels.enhanced_replay(arr, lo, width)
        if status != 0:
            raise ValueError("trace encodes an illegal particle jump")
        return SecondClassTrajectory(tuple(x.tolist()), tuple(v.tolist()))
    flips: set[int] = set()  # sites whose state differs from the step background

    def occupied(m: int) -> bool:
        return (m < 0) != (m in flips)

    def hop(m: int) -> None:
        if not occupied(m) or occupied(m + 1):
            raise ValueError("trace encodes an illegal particle jump")
        flips.symmetric_difference_update((m, m + 1))

    hop(-1)
    s = -1  # starred hole site; the starred particle sits at s + 1
    jumps = 0
    xs, vs = [0], [0]
    for u in us[1:]:
        a = u - 1
        hop(a)
        if a == s + 1:
            s += 1
            jumps += 1
        elif a + 1 == s:
            s -= 1
            jumps += 1
        xs.append(s + 1)
        vs.append(jumps)
    return SecondClassTrajectory(tuple(xs), tuple(vs))


# ---------------------------------------------------------------------------
# corner growth / last-passage percolation
# ---------------------------------------------------------------------------

GREEN, RED, UNCOLORED = 1, 2, 0


@dataclass(frozen=True)
class CornerGrowthRun:
    """An m x m realization of growth at rate 1 per addable corner.

    weights[i-1, j-1] ~ Exp(1); g holds passage times (the moment box (i,j)
    is grown); colors mark the two competing infections seeded on the first
    column (green) and first row (red).
    """

    weights: np.ndarray
    g: np.ndarray
    colors: np.ndarray

    @property
    def m(self) -> int:
        return self.weights.shape[0]

    def growth_order(self) -> list[Box]:
        """Boxes sorted by passage time; a valid growth path of the square."""
        flat = np.argsort(self.g, axis=None)
        a, b = np.unravel_index(flat, self.g.shape)
        return list(zip((a + 1).tolist(), (b + 1).tolist()))

    def recording_tableau(self) -> StandardTableau:
        """Ranks of the passage times, as a standard filling of the square."""
        flat = np.argsort(np.argsort(self.g, axis=None))
        ranks = (flat + 1).reshape(self.g.shape)
        return StandardTableau(
            tuple(tuple(ranks[:, b].tolist()) for b in range(self.g.shape[1]))
        )

    def color_of(self, box: Box) -> int:
        i, j = box
        return int(self.colors[i - 1, j - 1])


def corner_growth_sample(m: int, rng: np.random.Generator) -> CornerGrowthRun:
    """Sample an m x m run: weights, passage times, and infection colors."""
    if m < 1:
        raise ValueError("m must be >= 1")
    w = rng.exponential(1.0, size=(m, m))
    g = _kernels.lpp_grid(w)
    colors = _kernels.color_grid(g)
    return CornerGrowthRun(w, g, colors)


def lpp_times_reference(w: np.ndarray) -> np.ndarray:
    """Pure-Python passage-time recursion; reference for the compiled one."""
    m, k = w.shape
    g = np.zeros((m, k))
    for a in range(m):
        for b in range(k):
            best = 0.0
            if a > 0:
                best = max(best, g[a - 1, b])
            if b > 0:
                best = max(best, g[a, b - 1])
            g[a, b] = w[a, b] + best
    return g


def competition_interface(run: CornerGrowthRun) -> LatticePath:
    """The staircase path separating the green and red regions.

    Equals the sliding path of the run's recording tableau; computed here
    by comparing passage times directly (identical comparisons, no tableau
    materialization).
    """
    pi, pj = _kernels.g_interface_walk(run.g)
    return LatticePath(tuple(zip(pi.tolist(), pj.tolist())))


def interface_from_colors(run: CornerGrowthRun) -> LatticePath:
    """The interface walked using only the color field.

    From path box (i, j), the diagonal box (i+1, j+1) is green exactly when
    the path turns east and red when it turns north; the walk ends when the
    diagonal leaves the grid, so this certifies a prefix of the interface.
    """
    m = run.m
    colors = run.colors
    a, b = 0, 0
    boxes: list[Box] = [(1, 1)]
    while a + 1 < m and b + 1 < m:
        c = colors[a + 1, b + 1]
        if c == GREEN:
            a += 1
        elif c == RED:
            b += 1
        else:  # pragma: no cover - diagonal boxes are always colored
            raise AssertionError("interior box left uncolored")
        boxes.append((a + 1, b + 1))
    return LatticePath(tuple(boxes))


def interface_via_tableau(run: CornerGrowthRun) -> LatticePath:
    """The interface via the recording tableau's sliding path (slow route)."""
    return infinite_path_prefix(run.recording_tableau(), MissingEntries.INFINITY)


@dataclass(frozen=True)
class ContinuousTrajectory:
    """Event-time positions of the pair in the continuous-time model."""

    times: tuple[float, ...]
    positions: tuple[int, ...]

    def position_at(self, t: float) -> int:
        """X(t): the last position whose event time is <= t (0 before any)."""
        k = int(np.searchsorted(np.asarray(self.times), t, side="right"))
        return self.positions[k - 1] if k else 0


def tasep_second_class(
    run: CornerGrowthRun, horizon: float | None = None
) -> ContinuousTrajectory:
    """Second-class trajectory of the continuous-time model.

    The pair sits at u = i - j of the interface tip; each interface box is
    an event at its passage time.  With a horizon, events after it are
    dropped (the caller must size the grid so the horizon is reached before
    the interface can touch the boundary; this is asserted).
    """
    path = competition_interface(run)
    g = run.g
    times = [float(g[i - 1, j - 1]) for i, j in path.boxes]
    positions = [i - j for i, j in path.boxes]
    if horizon is not None:
        keep = 0
        while keep < len(times) and times[keep] <= horizon:
            keep += 1
        if keep == len(times):
            raise ValueError("grid exhausted before the horizon; enlarge m")
        xi, xj = path.boxes[keep - 1] if keep else (1, 1)
        if max(xi, xj) >= run.m:
            raise ValueError("interface reached the grid edge before the horizon")
        times, positions = times[:keep], positions[:keep]
    return ContinuousTrajectory(tuple(times), tuple(positions))


def event_driven_corner_growth(
    m: int, rng: np.random.Generator
) -> tuple[list[Box], list[float]]:
    """Small event-queue oracle for the corner growth law (m <= 6).

    Every currently addable corner of the staircase (inside the m x m box)
    grows at rate 1; equivalent in law to the passage-time recursion, and
    used only to validate it.
    """
    if m > 6:
        raise ValueError("event-driven oracle is for m <= 6 only")
    rows = [0] * m  # current column count per row index 0..m-1
    boxes: list[Box] = []
    times: list[float] = []
    t = 0.0
    for _ in range(m * m):
        corners = [
            (rows[j] + 1, j + 1)
            for j in range(m)
            if rows[j] < m and (j == 0 or rows[j - 1] > rows[j])
        ]
        t += rng.exponential(1.0 / len(corners))
        i, j = corners[rng.integers(len(corners))]
        rows[j - 1] += 1
        boxes.append((i, j))
        times.append(t)
    return boxes, times
