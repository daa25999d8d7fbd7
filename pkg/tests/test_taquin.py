import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tabdyn import _kernels, rng as rng_mod
from tabdyn.core import (
    YoungDiagram,
    all_tableaux,
    partitions_of,
    tableau_from_boxes,
    tableau_from_rows,
)
from tabdyn.errors import EmptyTableau, Exhausted
from tabdyn.plancherel import sample_growth_rsk
from tabdyn.taquin import (
    LatticePath,
    MissingEntries,
    apply_J,
    estimate_angle,
    infinite_path_prefix,
    jdt_inverse,
    jdt_slide,
    natural_param,
)

# ---------------------------------------------------------------------------
# a 7x7 window of a much larger tableau, before and after one slide;
# entries are global ranks, so only order comparisons are meaningful.
# rows bottom-up (j = 1 first), columns left to right (i = 1 first).
# ---------------------------------------------------------------------------
WINDOW_BEFORE = (
    (1, 3, 4, 7, 12, 13, 17),
    (2, 8, 9, 10, 16, 20, 33),
    (5, 11, 21, 24, 26, 28, 36),
    (6, 14, 23, 30, 45, 64, 80),
    (15, 25, 27, 32, 54, 79, 82),
    (19, 34, 39, 40, 57, 86, 100),
    (29, 38, 48, 85, 94, 104, 123),
)
WINDOW_AFTER = (
    (2, 3, 4, 7, 12, 13, 17),
    (5, 8, 9, 10, 16, 20, 33),
    (6, 11, 21, 24, 26, 28, 36),
    (14, 23, 27, 30, 45, 64, 80),
    (15, 25, 32, 40, 54, 79, 82),
    (19, 34, 39, 57, 86, 100, 123),
    (29, 38, 48, 85, 94, 104, 135),
)
WINDOW_PATH = (
    (1, 1), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4),
    (3, 5), (4, 5), (4, 6), (5, 6), (6, 6), (7, 6),
)


def _window_walk(grid) -> list[tuple[int, int]]:
    """Comparison walk on a square window: step to the smaller of the
    east/north neighbors while both are inside the window."""
    size = len(grid)
    i = j = 1
    path = [(1, 1)]
    while i + 1 <= size and j + 1 <= size:
        east = grid[j - 1][i]       # (i + 1, j)
        north = grid[j][i - 1]      # (i, j + 1)
        if east < north:
            i += 1
        else:
            j += 1
        path.append((i, j))
    return path


def test_window_walk_matches_fixture_path():
    assert tuple(_window_walk(WINDOW_BEFORE)) == WINDOW_PATH


def test_window_slide_moves_entries_along_path():
    # along the path every box inherits the next path box's old entry
    for k in range(len(WINDOW_PATH) - 1):
        i, j = WINDOW_PATH[k]
        ni, nj = WINDOW_PATH[k + 1]
        assert WINDOW_AFTER[j - 1][i - 1] == WINDOW_BEFORE[nj - 1][ni - 1]
    # the walk continued north out of the window top: (7,6) got (7,7)'s entry
    assert WINDOW_AFTER[5][6] == WINDOW_BEFORE[6][6]
    # off-path cells are untouched; (7,7) was refilled from outside
    path_cells = set(WINDOW_PATH) | {(7, 7)}
    for j in range(1, 8):
        for i in range(1, 8):
            if (i, j) not in path_cells:
                assert WINDOW_AFTER[j - 1][i - 1] == WINDOW_BEFORE[j - 1][i - 1]
    assert WINDOW_AFTER[6][6] not in {v for row in WINDOW_BEFORE for v in row}


# ---------------------------------------------------------------------------
# slide mechanics on honest standard tableaux
# ---------------------------------------------------------------------------

def test_slide_worked_example():
    t = tableau_from_rows(((1, 3, 4), (2, 5)))
    slid, path = jdt_slide(t)
    assert path.boxes == ((1, 1), (1, 2), (2, 2))
    assert slid.rows == ((1, 2, 3), (4,))
    assert jdt_inverse(slid, t.shape) == t


def test_slide_single_box():
    t = tableau_from_rows(((1,),))
    slid, path = jdt_slide(t)
    assert slid.size == 0
    assert path.boxes == ((1, 1),)
    with pytest.raises(EmptyTableau):
        jdt_slide(slid)


def test_slide_round_trip_exhaustive():
    for n in range(2, 7):
        for d in partitions_of(n):
            for t in all_tableaux(d):
                slid, path = jdt_slide(t)
                assert slid.shape.with_box(path.boxes[-1]) == d
                assert jdt_inverse(slid, d) == t


def test_inverse_then_slide_exhaustive():
    for n in range(1, 6):
        for d in partitions_of(n):
            for t in all_tableaux(d):
                for box in d.addable_boxes():
                    bigger = d.with_box(box)
                    lifted = jdt_inverse(t, bigger)
                    slid, path = jdt_slide(lifted)
                    assert slid == t
                    assert path.boxes[-1] == box


def test_lattice_path_validation():
    with pytest.raises(ValueError):
        LatticePath(((2, 1),))
    with pytest.raises(ValueError):
        LatticePath(((1, 1), (2, 2)))
    p = LatticePath(((1, 1), (2, 1)))
    assert len(p) == 2 and p.end == (2, 1)


def test_infinite_path_modes_agree_on_boxes():
    rng = rng_mod.stream(11)
    trace = sample_growth_rsk(200, rng)
    t = tableau_from_boxes(list(trace.boxes))
    inf_path = infinite_path_prefix(t, MissingEntries.INFINITY)
    und_path = infinite_path_prefix(t, MissingEntries.UNDETERMINED)
    assert inf_path.boxes == und_path.boxes
    assert not inf_path.undetermined_tail
    assert und_path.undetermined_tail
    # the walk's first box is the origin and it ends on the boundary
    assert inf_path.boxes[0] == (1, 1)
    i, j = inf_path.end
    assert (i + 1, j) not in t.shape and (i, j + 1) not in t.shape


def test_infinite_path_matches_slide_path():
    # on a finite tableau the infinity-mode walk is the slide's hole trail
    rng = rng_mod.stream(13)
    trace = sample_growth_rsk(60, rng)
    t = tableau_from_boxes(list(trace.boxes))
    _, slide_path = jdt_slide(t)
    assert infinite_path_prefix(t, MissingEntries.INFINITY).boxes == slide_path.boxes


def test_mode_accepts_plain_strings():
    assert MissingEntries("infinity") is MissingEntries.INFINITY
    assert MissingEntries("undetermined") is MissingEntries.UNDETERMINED


def test_natural_param_against_restrictions():
    rng = rng_mod.stream(17)
    trace = sample_growth_rsk(40, rng)
    t = tableau_from_boxes(list(trace.boxes))
    q = natural_param(t)
    assert len(q.positions) == 40
    assert len(q.jumped) == 39
    assert q.positions[0] == (1, 1)
    for m in range(1, 41):
        end = infinite_path_prefix(
            t.restrict(m), MissingEntries.INFINITY
        ).boxes[-1]
        assert q.positions[m - 1] == end
    # jumped flags mark exactly the strict advances
    for k, flag in enumerate(q.jumped):
        moved = q.positions[k + 1] != q.positions[k]
        assert flag == moved
    # distinct positions form a monotone staircase from the origin
    distinct = q.distinct_path()
    assert distinct.boxes[0] == (1, 1)


def test_natural_param_matches_kernel_walk():
    rng = rng_mod.stream(23)
    trace = sample_growth_rsk(500, rng)
    boxes = np.asarray(trace.boxes, dtype=np.int64)
    qi, qj = _kernels.lazy_walk(boxes[:, 0], boxes[:, 1])
    t = tableau_from_boxes(list(trace.boxes))
    q = natural_param(t)
    assert [ (int(a), int(b)) for a, b in zip(qi, qj) ] == list(q.positions)


def test_apply_J_shrinks_by_one():
    rng = rng_mod.stream(29)
    trace = sample_growth_rsk(50, rng)
    t = tableau_from_boxes(list(trace.boxes))
    u = apply_J(t)
    assert u.size == t.size - 1
    again = apply_J(u)
    assert again.size == t.size - 2


def test_estimate_angle_basics():
    t = tableau_from_rows(((1, 3, 4), (2, 5)))
    end = infinite_path_prefix(t, MissingEntries.INFINITY).boxes[-1]
    assert estimate_angle(t, k=1) == pytest.approx(math.atan2(end[1], end[0]))
    with pytest.raises(ValueError):
        estimate_angle(t, k=0)
    with pytest.raises(Exhausted):
        estimate_angle(t, k=1, min_entries=6)
    with pytest.raises(Exhausted):
        estimate_angle(t, k=6)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=2**31), st.integers(2, 40))
def test_slide_then_inverse_random(seed, n):
    rng = rng_mod.stream(seed)
    trace = sample_growth_rsk(n, rng)
    t = tableau_from_boxes(list(trace.boxes))
    slid, path = jdt_slide(t)
    assert jdt_inverse(slid, t.shape) == t
    steps = set(
        (b[0] - a[0], b[1] - a[1]) for a, b in zip(path.boxes, path.boxes[1:])
    )
    assert steps <= {(1, 0), (0, 1)}
