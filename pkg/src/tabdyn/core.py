"""Young diagrams, standard tableaux, staircase profiles, and hook counting.

Coordinate convention used by the whole package: a box address (i, j) is
Cartesian.  i is the column index (1-based, growing to the right) and j is
the row index (1-based, growing upward), so the bottom-left box of every
diagram is (1, 1).  A diagram is stored as its row lengths from the bottom
row up, which therefore form a weakly decreasing sequence.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    DuplicateEntry,
    EmptyTableau,
    NonPositiveRow,
    NotACover,
    NotWeaklyDecreasing,
)

Box = tuple[int, int]


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class YoungDiagram:
    """A partition drawn as a stack of left-justified rows of boxes."""

    rows: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def row(self, j: int) -> int:
        """Length of row j, with rows above the diagram having length 0."""
        if j < 1:
            raise ValueError(f"row index must be >= 1, got {j}")
        return self.rows[j - 1] if j <= len(self.rows) else 0

    def column(self, i: int) -> int:
        """Height of column i (number of rows of length >= i)."""
        if i < 1:
            raise ValueError(f"column index must be >= 1, got {i}")
        # rows are weakly decreasing, so rows >= i form a prefix
        return bisect_right([-r for r in self.rows], -i)

    def contains(self, box: Box) -> bool:
        i, j = box
        return 1 <= j <= len(self.rows) and 1 <= i <= self.rows[j - 1]

    def addable_boxes(self) -> list[Box]:
        """Boxes whose addition leaves a valid diagram, bottom row first."""
        out: list[Box] = []
        for j, r in enumerate(self.rows, start=1):
            if j == 1 or self.rows[j - 2] > r:
                out.append((r + 1, j))
        out.append((1, len(self.rows) + 1))
        return out

    def removable_boxes(self) -> list[Box]:
        """Boxes whose removal leaves a valid diagram, bottom row first."""
        out: list[Box] = []
        for j, r in enumerate(self.rows, start=1):
            if j == len(self.rows) or self.rows[j] < r:
                out.append((r, j))
        return out

    def with_box(self, box: Box) -> "YoungDiagram":
        """The diagram with one more box at ``box``."""
        i, j = box
        if j == len(self.rows) + 1 and i == 1:
            return YoungDiagram(self.rows + (1,))
        if 1 <= j <= len(self.rows) and i == self.rows[j - 1] + 1:
            if j == 1 or self.rows[j - 2] >= i:
                rows = list(self.rows)
                rows[j - 1] += 1
                return YoungDiagram(tuple(rows))
        raise NotACover(f"box {box} is not addable to {self.rows}")

    def transpose(self) -> "YoungDiagram":
        if not self.rows:
            return self
        cols = [self.column(i) for i in range(1, self.rows[0] + 1)]
        return YoungDiagram(tuple(cols))

    def __contains__(self, box: Box) -> bool:
        return self.contains(box)


EMPTY_DIAGRAM = YoungDiagram(())


def diagram_from_rows(rows: Sequence[int]) -> YoungDiagram:
    """Validate a row-length sequence and build the diagram it describes."""
    rows = tuple(int(r) for r in rows)
    for r in rows:
        if r <= 0:
            raise NonPositiveRow(f"row lengths must be positive, got {r}")
    for a, b in zip(rows, rows[1:]):
        if b > a:
            raise NotWeaklyDecreasing(f"row lengths must weakly decrease, got {rows}")
    return YoungDiagram(rows)


def is_cover(small: YoungDiagram, large: YoungDiagram) -> bool:
    """True when ``large`` is ``small`` plus exactly one box."""
    try:
        cover_box(small, large)
    except NotACover:
        return False
    return True


def cover_box(small: YoungDiagram, large: YoungDiagram) -> Box:
    """The unique box of ``large`` not in ``small``; NotACover otherwise."""
    a, b = small.rows, large.rows
    if len(b) == len(a) + 1:
        if b[-1] == 1 and b[:-1] == a:
            return (1, len(b))
        raise NotACover(f"{b} does not cover {a}")
    if len(b) != len(a):
        raise NotACover(f"{b} does not cover {a}")
    seen: Box | None = None
    for j, (x, y) in enumerate(zip(a, b), start=1):
        if y == x + 1 and seen is None:
            seen = (y, j)
        elif y != x:
            raise NotACover(f"{b} does not cover {a}")
    if seen is None:
        raise NotACover(f"{b} does not cover {a}")
    return seen


def transpose_box(box: Box) -> Box:
    i, j = box
    return (j, i)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[YoungDiagram]:
    """All partitions of n, largest first part first."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    cap = n if max_part is None else max_part
    for rows in gen(n, cap):
        yield YoungDiagram(rows)


# ---------------------------------------------------------------------------
# hook counting
# ---------------------------------------------------------------------------

def hook_lengths(diagram: YoungDiagram) -> list[list[int]]:
    """Hook lengths, indexed [j-1][i-1] like tableau rows."""
    rows = diagram.rows
    if not rows:
        return []
    cols = [diagram.column(i) for i in range(1, rows[0] + 1)]
    return [
        [(rows[j] - i) + (cols[i] - j - 1) for i in range(rows[j])]
        for j in range(len(rows))
    ]


def count_syt(diagram: YoungDiagram) -> int:
    """Exact number of standard fillings, as a big integer.

    n! divided by the product of hook lengths; the division is exact.
    """
    n = diagram.size
    prod = 1
    for row in hook_lengths(diagram):
        for h in row:
            prod *= h
    return math.factorial(n) // prod


def count_syt_log(diagram: YoungDiagram) -> float:
    """log of count_syt, computed in floating point for large diagrams."""
    n = diagram.size
    total = math.lgamma(n + 1)
    for row in hook_lengths(diagram):
        for h in row:
            total -= math.log(h)
    return total


# ---------------------------------------------------------------------------
# standard tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StandardTableau:
    """A filling of a diagram by 1..n increasing along rows and up columns.

    rows[j-1][i-1] is the entry in box (i, j).  Instances are built through
    tableau_from_rows / tableau_from_path / tableau_from_boxes, which
    validate; the constructor itself trusts its input.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    def entry(self, box: Box) -> int:
        i, j = box
        return self.rows[j - 1][i - 1]

    def entry_or_none(self, box: Box) -> int | None:
        i, j = box
        if 1 <= j <= len(self.rows) and 1 <= i <= len(self.rows[j - 1]):
            return self.rows[j - 1][i - 1]
        return None

    def growth_order(self) -> list[Box]:
        """Boxes listed by increasing entry; position m-1 holds entry m's box."""
        out: list[Box] = [(0, 0)] * self.size
        for j, row in enumerate(self.rows, start=1):
            for i, v in enumerate(row, start=1):
                out[v - 1] = (i, j)
        return out

    def box_of(self, value: int) -> Box:
        for j, row in enumerate(self.rows, start=1):
            for i, v in enumerate(row, start=1):
                if v == value:
                    return (i, j)
        raise KeyError(f"entry {value} not present")

    def restrict(self, m: int) -> "StandardTableau":
        """The sub-tableau of entries <= m (a prefix of every row)."""
        rows = []
        for row in self.rows:
            k = bisect_right(row, m)
            if k:
                rows.append(row[:k])
        return StandardTableau(tuple(rows))

    def transpose(self) -> "StandardTableau":
        if not self.rows:
            return self
        width = len(self.rows[0])
        cols = []
        for i in range(width):
            col = tuple(row[i] for row in self.rows if len(row) > i)
            cols.append(col)
        return StandardTableau(tuple(cols))


EMPTY_TABLEAU = StandardTableau(())


def tableau_from_rows(rows: Sequence[Sequence[int]]) -> StandardTableau:
    """Validate row data (shape, entry set, monotonicity) and build a tableau."""
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    diagram_from_rows([len(r) for r in rows])  # shape checks
    n = sum(len(r) for r in rows)
    seen = set()
    for row in rows:
        for v in row:
            if v in seen:
                raise DuplicateEntry(f"entry {v} appears twice")
            if not 1 <= v <= n:
                raise ValueError(f"entries must be 1..{n}, got {v}")
            seen.add(v)
    for row in rows:
        for a, b in zip(row, row[1:]):
            if b <= a:
                raise ValueError(f"row entries must increase, got {row}")
    for lower, upper in zip(rows, rows[1:]):
        for a, b in zip(lower, upper):
            if b <= a:
                raise ValueError("column entries must increase upward")
    return StandardTableau(rows)


def tableau_from_path(diagrams: Sequence[YoungDiagram]) -> StandardTableau:
    """Fold a growth path (starting at the empty diagram) into a tableau.

    Entry m is written in the box added at step m.
    """
    if not diagrams or diagrams[0].rows != ():
        raise NotACover("growth path must start at the empty diagram")
    boxes = [cover_box(a, b) for a, b in zip(diagrams, diagrams[1:])]
    return tableau_from_boxes(boxes)


def tableau_from_boxes(boxes: Sequence[Box]) -> StandardTableau:
    """Build a tableau whose entry m sits at boxes[m-1].

    The box sequence must grow a diagram one addable corner at a time.
    """
    rows: list[list[int]] = []
    for m, (i, j) in enumerate(boxes, start=1):
        if j == len(rows) + 1 and i == 1:
            rows.append([m])
        elif 1 <= j <= len(rows) and i == len(rows[j - 1]) + 1 and (
            j == 1 or len(rows[j - 2]) >= i
        ):
            rows[j - 1].append(m)
        else:
            raise NotACover(f"box {(i, j)} is not addable at step {m}")
    return StandardTableau(tuple(tuple(r) for r in rows))


def path_from_tableau(tableau: StandardTableau) -> list[YoungDiagram]:
    """The growth path of a tableau, from the empty diagram to its shape."""
    path = [EMPTY_DIAGRAM]
    rows: list[int] = []
    for i, j in tableau.growth_order():
        if j == len(rows) + 1:
            rows.append(1)
        else:
            rows[j - 1] += 1
        path.append(YoungDiagram(tuple(rows)))
    return path


def all_tableaux(diagram: YoungDiagram) -> Iterator[StandardTableau]:
    """Enumerate every standard filling of a diagram.

    Recursive: the largest entry must occupy a removable box.
    """
    n = diagram.size
    grid: dict[Box, int] = {}

    def rec(rows: tuple[int, ...], m: int) -> Iterator[None]:
        if m == 0:
            yield None
            return
        d = YoungDiagram(rows)
        for box in d.removable_boxes():
            grid[box] = m
            i, j = box
            smaller = list(rows)
            smaller[j - 1] -= 1
            if smaller[-1] == 0:
                smaller.pop()
            yield from rec(tuple(smaller), m - 1)
            del grid[box]

    for _ in rec(diagram.rows, n):
        yield StandardTableau(
            tuple(
                tuple(grid[(i, j)] for i in range(1, r + 1))
                for j, r in enumerate(diagram.rows, start=1)
            )
        )


# ---------------------------------------------------------------------------
# staircase profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Profile:
    """The boundary of a diagram drawn over the u-axis in rotated coordinates.

    Box (i, j) occupies u in [i - j - 1, i - j + 1] at height up to i + j; the
    boundary is a piecewise-linear function of slopes exactly +-1 that agrees
    with |u| outside the diagram's support.  ``vertices`` lists the points
    where the slope changes (the staircase's inner and outer corners),
    left to right; it is empty for the empty diagram.
    """

    vertices: tuple[tuple[float, float], ...]

    def value(self, u: float) -> float:
        vs = self.vertices
        if not vs or u <= vs[0][0] or u >= vs[-1][0]:
            return abs(u)
        k = bisect_right([p[0] for p in vs], u)
        (u0, v0), (u1, v1) = vs[k - 1], vs[k]
        t = (u - u0) / (u1 - u0)
        return v0 + t * (v1 - v0)

    @property
    def support(self) -> tuple[float, float]:
        if not self.vertices:
            return (0.0, 0.0)
        return (self.vertices[0][0], self.vertices[-1][0])


def profile(diagram: YoungDiagram) -> Profile:
    """The staircase boundary of a diagram in rotated (u, v) coordinates.

    The slope over [m, m+1] is -1 exactly when m is of the form
    row(j) - j for some j >= 1, and +1 otherwise.
    """
    rows = diagram.rows
    if not rows:
        return Profile(())
    h = len(rows)
    occupied = {rows[j - 1] - j for j in range(1, h + 1)}
    lo, hi = -h, rows[0]  # support [lo, hi]; outside it the profile is |u|
    verts: list[tuple[float, float]] = [(float(lo), float(-lo))]
    v = -lo
    prev_slope = -1  # the profile arrives along |u| from the left
    for m in range(lo, hi):
        slope = -1 if (m in occupied or m < -h) else 1
        if slope != prev_slope:
            if (float(m), float(v)) != verts[-1]:
                verts.append((float(m), float(v)))
            prev_slope = slope
        v += slope
    verts.append((float(hi), float(v)))
    return Profile(tuple(verts))


def rescaled_profile(diagram: YoungDiagram, scale: float | None = None) -> Profile:
    """The profile shrunk by ``scale`` in both axes (default sqrt of size)."""
    if scale is None:
        n = diagram.size
        scale = math.sqrt(n) if n else 1.0
    if scale <= 0:
        raise ValueError("scale must be positive")
    base = profile(diagram)
    return Profile(tuple((u / scale, v / scale) for u, v in base.vertices))
