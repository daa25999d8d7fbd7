"""Random growth of diagrams weighted by squared filling counts.

Two independent samplers produce the same growth law: one pushes i.i.d.
uniforms through row insertion and records the boxes, the other walks the
diagram graph directly, choosing each new box with probability proportional
to the filling count of the grown shape.  Keeping both honest against each
other is a standing cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .core import (
    Box,
    EMPTY_DIAGRAM,
    StandardTableau,
    YoungDiagram,
    count_syt,
    partitions_of,
    tableau_from_boxes,
)
from .errors import NTooLarge
from .rsk import StreamingRecorder, record_boxes


@dataclass(frozen=True)
class GrowthTrace:
    """The box added at each step of a growth run, plus stream bookkeeping."""

    boxes: tuple[Box, ...]
    rng_label: str | None = None

    def __len__(self) -> int:
        return len(self.boxes)

    def to_tableau(self) -> StandardTableau:
        return tableau_from_boxes(self.boxes)

    def final_shape(self) -> YoungDiagram:
        rows: list[int] = []
        for i, j in self.boxes:
            if j == len(rows) + 1:
                rows.append(1)
            else:
                rows[j - 1] += 1
        return YoungDiagram(tuple(rows))

    def shapes(self) -> list[YoungDiagram]:
        """All prefix shapes, starting from the empty diagram."""
        out = [EMPTY_DIAGRAM]
        rows: list[int] = []
        for i, j in self.boxes:
            if j == len(rows) + 1:
                rows.append(1)
            else:
                rows[j - 1] += 1
            out.append(YoungDiagram(tuple(rows)))
        return out

    def u_coords(self) -> list[int]:
        return [i - j for i, j in self.boxes]


@dataclass(frozen=True)
class PieriSample:
    """u-coordinates of the strip a sorted block of insertions adds."""

    n: int
    k: int
    u_coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.u_coords)) != len(self.u_coords):
            raise ValueError("strip boxes must have distinct u-coordinates")


def sample_growth_rsk(
    n: int, rng: np.random.Generator, rng_label: str | None = None,
    engine: str = "auto",
) -> GrowthTrace:
    """Grow for n steps by inserting n i.i.d. uniforms and logging the boxes."""
    if n < 0:
        raise ValueError("n must be >= 0")
    draws = rng.random(n)
    boxes = record_boxes(draws, engine=engine) if n else []
    return GrowthTrace(tuple(boxes), rng_label)


def _affected_hooks(rows: Sequence[int], cols: Sequence[int], box: Box) -> Iterator[int]:
    """Hooks (in the pre-growth diagram) that grow when ``box`` is added.

    Adding at (i, j) lengthens the hooks of the boxes to its left in row j
    and below it in column i; every other hook is untouched.
    """
    i, j = box
    for ip in range(1, i):
        yield (rows[j - 1] - ip) + (cols[ip - 1] - j) + 1
    for jp in range(1, j):
        yield (rows[jp - 1] - i) + (cols[i - 1] - jp) + 1


def transition_probs(
    diagram: YoungDiagram, mode: str = "rational"
) -> list[tuple[YoungDiagram, Fraction | float]]:
    """Growth probabilities to each diagram one box larger.

    The chance of adding a given box is the product, over hooks that the new
    box lengthens, of h/(h+1); equivalently the ratio of filling counts
    f(grown)/((n+1) f(current)).  mode="rational" returns exact Fractions,
    mode="log" floats computed in log space.
    """
    if mode not in ("rational", "log"):
        raise ValueError(f"unknown mode {mode!r}")
    rows = diagram.rows
    cols = [diagram.column(i) for i in range(1, rows[0] + 1)] if rows else []
    out: list[tuple[YoungDiagram, Fraction | float]] = []
    for box in diagram.addable_boxes():
        if mode == "rational":
            p: Fraction | float = math.prod(
                (Fraction(h, h + 1) for h in _affected_hooks(rows, cols, box)),
                start=Fraction(1),
            )
        else:
            p = math.exp(
                sum(
                    math.log(h) - math.log(h + 1)
                    for h in _affected_hooks(rows, cols, box)
                )
            )
        out.append((diagram.with_box(box), p))
    return out


def sample_growth_markov(
    n: int, rng: np.random.Generator, rng_label: str | None = None
) -> GrowthTrace:
    """Grow for n steps by sampling each transition from its hook ratios.

    Same law as sample_growth_rsk through an unrelated mechanism; kept as a
    cross-check oracle.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    rows: list[int] = []
    cols: list[int] = []
    boxes: list[Box] = []
    for step in range(n):
        candidates: list[Box] = []
        probs: list[float] = []
        for j in range(1, len(rows) + 2):
            if j <= len(rows):
                i = rows[j - 1] + 1
                if j > 1 and rows[j - 2] < i:
                    continue
            else:
                i = 1
            candidates.append((i, j))
            logp = sum(
                math.log(h) - math.log(h + 1)
                for h in _affected_hooks(rows, cols, (i, j))
            )
            probs.append(math.exp(logp))
        r = rng.random()
        acc = 0.0
        chosen = candidates[-1]  # guard against r landing on accumulated 1.0
        for cand, p in zip(candidates, probs):
            acc += p
            if r < acc:
                chosen = cand
                break
        i, j = chosen
        if j == len(rows) + 1:
            rows.append(1)
        else:
            rows[j - 1] += 1
        if i == len(cols) + 1:
            cols.append(1)
        else:
            cols[i - 1] += 1
        boxes.append(chosen)
    return GrowthTrace(tuple(boxes), rng_label)


def trace_probability(boxes: Sequence[Box]) -> Fraction:
    """Exact probability that a growth run starts with exactly these boxes.

    Product of the rational transition probabilities along the trace; it
    telescopes to f(final shape)/n!, which the tests verify independently.
    """
    rows: list[int] = []
    cols: list[int] = []
    p = Fraction(1)
    for i, j in boxes:
        if j == len(rows) + 1:
            if i != 1:
                raise ValueError(f"box {(i, j)} is not addable")
        elif not 1 <= j <= len(rows):
            raise ValueError(f"box {(i, j)} is not addable")
        elif i != rows[j - 1] + 1 or (j > 1 and rows[j - 2] < i):
            raise ValueError(f"box {(i, j)} is not addable")
        p *= math.prod(
            (Fraction(h, h + 1) for h in _affected_hooks(rows, cols, (i, j))),
            start=Fraction(1),
        )
        if j == len(rows) + 1:
            rows.append(1)
        else:
            rows[j - 1] += 1
        if i == len(cols) + 1:
            cols.append(1)
        else:
            cols[i - 1] += 1
    return p


def pieri_growth(n: int, k: int, rng: np.random.Generator) -> PieriSample:
    """Grow n steps from uniforms, then insert a sorted block of k more.

    The k boxes the sorted block adds form a horizontal strip; their
    u-coordinates are returned in insertion order (which is increasing).
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    head = rng.random(n)
    block = np.sort(rng.random(k))
    boxes = record_boxes(np.concatenate([head, block]))
    return PieriSample(n, k, tuple(i - j for i, j in boxes[n:]))


def exact_plancherel(n: int) -> list[tuple[YoungDiagram, Fraction]]:
    """The exact shape distribution after n growth steps, as rationals."""
    if n > 8:
        raise NTooLarge("exact enumeration supported only for n <= 8")
    if n < 0:
        raise ValueError("n must be >= 0")
    fact = math.factorial(n)
    return [
        (lam, Fraction(count_syt(lam) ** 2, fact)) for lam in partitions_of(n)
    ]
