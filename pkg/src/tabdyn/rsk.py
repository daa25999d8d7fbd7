"""Row insertion of real sequences and the recording of the boxes it creates.

insert() bumps a value through the rows of a tableau of reals: in each row
the smallest entry larger than the incoming value is displaced upward, and
the cascade ends when a value lands at the end of a row.  Feeding a whole
sequence through records, for each step, the single box by which the shape
grew; those boxes form a standard tableau (the recording tableau), while the
displaced values settle into the insertion tableau.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .core import Box, StandardTableau, YoungDiagram, tableau_from_boxes
from .errors import DuplicateEntry, EmptyInput


@dataclass(frozen=True)
class RealTableau:
    """Rows of distinct reals, increasing along rows and up columns."""

    rows: tuple[tuple[float, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    def entry(self, box: Box) -> float:
        i, j = box
        return self.rows[j - 1][i - 1]

    def first_row(self) -> tuple[float, ...]:
        return self.rows[0] if self.rows else ()


EMPTY_REAL_TABLEAU = RealTableau(())


def insert(tableau: RealTableau, x: float) -> tuple[RealTableau, Box]:
    """Insert one value; return the new tableau and the box it grew by."""
    rows = [list(r) for r in tableau.rows]
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            box = (1, r + 1)
            break
        row = rows[r]
        pos = bisect_left(row, x)
        if pos < len(row) and row[pos] == x:
            raise DuplicateEntry(f"value {x!r} is already present")
        if pos == len(row):
            row.append(x)
            box = (pos + 1, r + 1)
            break
        x, row[pos] = row[pos], x
        r += 1
    return RealTableau(tuple(tuple(r) for r in rows)), box


class StreamingRecorder:
    """Feed values one at a time; keeps the insertion state and the box log.

    Mutable on purpose: this is the engine behind the one-shot helpers and
    behind samplers that push millions of values.
    """

    def __init__(self) -> None:
        self._rows: list[list[float]] = []
        self._boxes: list[Box] = []

    def push(self, x: float) -> Box:
        rows = self._rows
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                box = (1, r + 1)
                break
            row = rows[r]
            pos = bisect_left(row, x)
            if pos < len(row) and row[pos] == x:
                raise DuplicateEntry(f"value {x!r} is already present")
            if pos == len(row):
                row.append(x)
                box = (pos + 1, r + 1)
                break
            x, row[pos] = row[pos], x
            r += 1
        self._boxes.append(box)
        return box

    def extend(self, xs: Iterable[float]) -> None:
        for x in xs:
            self.push(x)

    @property
    def count(self) -> int:
        return len(self._boxes)

    @property
    def boxes(self) -> list[Box]:
        return list(self._boxes)

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self._rows))

    def insertion_tableau(self) -> RealTableau:
        return RealTableau(tuple(tuple(r) for r in self._rows))

    def recording_tableau(self) -> StandardTableau:
        return tableau_from_boxes(self._boxes)


@dataclass(frozen=True)
class RskOutput:
    """The pair produced by inserting a finite sequence."""

    insertion: RealTableau
    recording: StandardTableau

    @property
    def shape(self) -> YoungDiagram:
        return self.insertion.shape


def rsk_finite(xs: Sequence[float]) -> RskOutput:
    """Insert a whole sequence of distinct reals."""
    rec = StreamingRecorder()
    rec.extend(xs)
    return RskOutput(rec.insertion_tableau(), rec.recording_tableau())


def rec_last_box(xs: Sequence[float]) -> Box:
    """The box created by the final insertion of the sequence."""
    if len(xs) == 0:
        raise EmptyInput("need at least one value")
    return record_boxes(xs)[-1]


def record_box_arrays(
    xs: Sequence[float], engine: str = "auto"
) -> tuple[np.ndarray, np.ndarray]:
    """Box log of inserting ``xs`` as 1-based (i, j) int64 arrays.

    engine="kernel" forces the compiled loop, "python" the reference loop,
    "auto" picks by size.  Both produce identical logs (tested).
    """
    n = len(xs)
    use_kernel = engine == "kernel" or (
        engine == "auto" and _kernels.HAVE_NUMBA and n >= 64
    )
    if not use_kernel:
        rec = StreamingRecorder()
        rec.extend(xs)
        arr = np.asarray(rec.boxes, dtype=np.int64).reshape(-1, 2)
        return arr[:, 0], arr[:, 1]
    arr = np.ascontiguousarray(xs, dtype=np.float64)
    cap = int(3.5 * math.sqrt(n)) + 16
    while True:
        status, bi, bj, _, _ = _kernels.insertion_record(arr, cap)
        if status == _kernels.OK:
            return bi, bj
        if status == _kernels.DUPLICATE:
            raise DuplicateEntry("duplicate value in input sequence")
        cap *= 2  # extraordinarily long first row or column; retry bigger
        if cap > 4 * n + 16:
            raise AssertionError("insertion buffer grew past its hard bound")


def record_boxes(xs: Sequence[float], engine: str = "auto") -> list[Box]:
    """The full box log of inserting ``xs``; the fast path for long inputs."""
    bi, bj = record_box_arrays(xs, engine=engine)
    return list(zip(bi.tolist(), bj.tolist()))
