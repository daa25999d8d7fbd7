"""Sliding dynamics on standard tableaux.

The slide empties the corner box (1,1): the hole repeatedly swaps with the
smaller of its east and north neighbors until it exits the shape, and then
every entry drops by 1 so the result is standard again.  The trail of the
hole is the sliding path.  Iterating the slide moves deep entries toward the
corner; the direction in which the path endpoint escapes is what the angle
estimator measures.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .core import (
    Box,
    StandardTableau,
    YoungDiagram,
    cover_box,
)
from .errors import EmptyTableau, Exhausted, NotACover


class MissingEntries(Enum):
    """How a walk treats neighbors outside the tableau's shape.

    INFINITY: outside entries compare larger than everything (the finite
    slide semantics; the walk runs to an outer corner).
    UNDETERMINED: the tableau is a truncation of something bigger, and the
    walk emits only the provably-correct prefix.  Any entry outside a
    truncation exceeds every entry inside it, so the emitted boxes coincide
    with INFINITY mode; the difference is the flag marking that the true
    path continues beyond the last emitted box.
    """

    INFINITY = "infinity"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class LatticePath:
    """An up-right path of boxes starting at (1,1)."""

    boxes: tuple[Box, ...]
    undetermined_tail: bool = False

    def __post_init__(self) -> None:
        if self.boxes and self.boxes[0] != (1, 1):
            raise ValueError("path must start at (1,1)")
        for (a, b), (c, d) in zip(self.boxes, self.boxes[1:]):
            if (c - a, d - b) not in ((1, 0), (0, 1)):
                raise ValueError("path steps must be +(1,0) or +(0,1)")

    def __len__(self) -> int:
        return len(self.boxes)

    @property
    def end(self) -> Box:
        return self.boxes[-1]


@dataclass(frozen=True)
class NaturalParamPath:
    """The lazy walk: one position per entry, moving only onto fresh boxes.

    positions[m-1] is where the walker sits once entries 1..m are present;
    jumped[m-2] says whether the step to entry m moved it.  Dropping
    consecutive repeats from ``positions`` recovers a LatticePath prefix.
    """

    positions: tuple[Box, ...]
    jumped: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.jumped) != max(len(self.positions) - 1, 0):
            raise ValueError("need one jump flag per step")

    def distinct_path(self) -> LatticePath:
        boxes: list[Box] = []
        for q in self.positions:
            if not boxes or q != boxes[-1]:
                boxes.append(q)
        return LatticePath(tuple(boxes), undetermined_tail=False)


def _walk(t: StandardTableau) -> list[Box]:
    """The hole's trail: start at (1,1), step to the smaller neighbor."""
    path: list[Box] = [(1, 1)]
    i, j = 1, 1
    while True:
        east = t.entry_or_none((i + 1, j))
        north = t.entry_or_none((i, j + 1))
        if east is None and north is None:
            return path
        if north is None or (east is not None and east < north):
            i += 1
        else:
            j += 1
        path.append((i, j))


def infinite_path_prefix(
    t: StandardTableau,
    treat_missing_as: MissingEntries | str = MissingEntries.UNDETERMINED,
) -> LatticePath:
    """The sliding path of a tableau, with the chosen boundary semantics."""
    mode = MissingEntries(treat_missing_as)
    if t.size == 0:
        return LatticePath((), undetermined_tail=mode is MissingEntries.UNDETERMINED)
    boxes = tuple(_walk(t))
    return LatticePath(boxes, undetermined_tail=mode is MissingEntries.UNDETERMINED)


def jdt_slide(t: StandardTableau) -> tuple[StandardTableau, LatticePath]:
    """One slide: empty (1,1), pull entries down the path, relabel by -1."""
    if t.size == 0:
        raise EmptyTableau("cannot slide the empty tableau")
    path = _walk(t)
    rows = [list(r) for r in t.rows]
    for (i, j), nxt in zip(path, path[1:]):
        rows[j - 1][i - 1] = t.entry(nxt)
    li, lj = path[-1]
    assert li == len(rows[lj - 1]), "path must end at an outer corner"
    rows[lj - 1].pop()
    if not rows[lj - 1]:
        rows.pop()
    slid = StandardTableau(tuple(tuple(v - 1 for v in row) for row in rows))
    return slid, LatticePath(tuple(path))


def jdt_inverse(s: StandardTableau, nu: YoungDiagram) -> StandardTableau:
    """The unique tableau of shape ``nu`` whose slide gives back ``s``.

    Run the slide backwards: bump all entries up by 1, open the hole at the
    box nu gains over shape(s), and repeatedly pull in the larger of the
    hole's west and south neighbors until the hole reaches (1,1), which then
    receives the entry 1.
    """
    hole = cover_box(s.shape, nu)  # raises NotACover when shapes don't fit
    grid: list[list[int | None]] = [
        [None] * r for r in nu.rows
    ]
    for j, row in enumerate(s.rows):
        for i, v in enumerate(row):
            grid[j][i] = v + 1
    i, j = hole
    while (i, j) != (1, 1):
        west = grid[j - 1][i - 2] if i >= 2 else None
        south = grid[j - 2][i - 1] if j >= 2 else None
        if south is None or (west is not None and west > south):
            grid[j - 1][i - 1] = west
            grid[j - 1][i - 2] = None
            i -= 1
        else:
            grid[j - 1][i - 1] = south
            grid[j - 2][i - 1] = None
            j -= 1
    grid[0][0] = 1
    return StandardTableau(tuple(tuple(row) for row in grid))


def natural_param(t: StandardTableau) -> NaturalParamPath:
    """Follow the lazy walker through the tableau's growth history.

    The walker starts on the box of entry 1 and moves onto the box of a
    later entry exactly when that box appears immediately east or north of
    it.  Its position after entry m equals the endpoint of the sliding path
    of the size-m truncation.
    """
    order = t.growth_order()
    positions: list[Box] = []
    jumped: list[bool] = []
    ci, cj = 0, 0
    for m, (i, j) in enumerate(order, start=1):
        if m == 1:
            ci, cj = i, j
        else:
            moves = (i, j) in ((ci + 1, cj), (ci, cj + 1))
            jumped.append(moves)
            if moves:
                ci, cj = i, j
        positions.append((ci, cj))
    return NaturalParamPath(tuple(positions), tuple(jumped))


def apply_J(t: StandardTableau) -> StandardTableau:
    """The slide as a self-map on truncations: drop entry 1, relabel."""
    slid, _ = jdt_slide(t)
    return slid


def estimate_angle(t: StandardTableau, k: int = 1, min_entries: int = 1) -> float:
    """Direction (radians from the i-axis) in which the k-th slide escapes.

    Applies the slide k-1 times and returns the two-argument arctangent of
    the final lazy-walk position, atan2(j, i).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if t.size - (k - 1) < max(min_entries, 1):
        raise Exhausted(
            f"tableau of size {t.size} cannot support {k - 1} slides "
            f"with {min_entries} entries remaining"
        )
    cur = t
    for _ in range(k - 1):
        cur = apply_J(cur)
    i, j = _walk(cur)[-1]
    return math.atan2(j, i)
