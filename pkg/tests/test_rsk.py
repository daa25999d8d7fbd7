import math
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tabdyn import rng as rng_mod
from tabdyn.errors import DuplicateEntry, EmptyInput
from tabdyn.rsk import (
    EMPTY_REAL_TABLEAU,
    StreamingRecorder,
    insert,
    rec_last_box,
    record_box_arrays,
    record_boxes,
    rsk_finite,
)

from oracles import lds_patience, lis_patience

distinct_floats = st.lists(
    st.floats(min_value=0.0, max_value=1.0, allow_nan=False, width=64),
    min_size=1,
    max_size=120,
    unique=True,
)


def test_worked_example():
    out = rsk_finite([0.3, 0.1, 0.4, 0.15, 0.9])
    assert out.shape.rows == (3, 2)
    assert out.insertion.rows == ((0.1, 0.15, 0.9), (0.3, 0.4))
    assert out.recording.rows == ((1, 3, 5), (2, 4))


def test_insert_single():
    t, box = insert(EMPTY_REAL_TABLEAU, 0.5)
    assert box == (1, 1)
    assert t.rows == ((0.5,),)
    with pytest.raises(DuplicateEntry):
        insert(t, 0.5)


def test_rec_last_box_empty_input():
    with pytest.raises(EmptyInput):
        rec_last_box([])


@settings(max_examples=80, deadline=None)
@given(distinct_floats)
def test_insertion_tableau_is_ordered(xs):
    p = rsk_finite(xs).insertion
    for row in p.rows:
        assert all(a < b for a, b in zip(row, row[1:]))
    for lower, upper in zip(p.rows, p.rows[1:]):
        for idx, v in enumerate(upper):
            assert lower[idx] < v


@settings(max_examples=80, deadline=None)
@given(distinct_floats)
def test_first_row_is_lis_and_height_is_lds(xs):
    shape = rsk_finite(xs).shape
    assert shape.row(1) == lis_patience(xs)
    assert len(shape.rows) == lds_patience(xs)


@settings(max_examples=80, deadline=None)
@given(distinct_floats)
def test_recording_matches_shape_growth(xs):
    rec = StreamingRecorder()
    shapes = []
    for x in xs:
        rec.push(x)
        shapes.append(rec.shape)
    q = rec.recording_tableau()
    assert q.shape == shapes[-1]
    for m in range(1, len(xs) + 1):
        assert q.restrict(m).shape == shapes[m - 1]


def test_engines_agree_small_and_large():
    for n in (1, 5, 63, 64, 65, 300, 1024):
        rng = rng_mod.stream(42, n)
        xs = rng.random(n)
        py = record_boxes(xs, engine="python")
        kr = record_boxes(xs, engine="kernel")
        assert py == kr
        bi, bj = record_box_arrays(xs)
        assert list(zip(bi.tolist(), bj.tolist())) == py


def test_kernel_duplicate_detection():
    xs = np.array([0.3, 0.7, 0.3])
    with pytest.raises(DuplicateEntry):
        record_boxes(xs, engine="kernel")
    with pytest.raises(DuplicateEntry):
        record_boxes(xs, engine="python")


def test_symmetries_exhaustive_small():
    for k in range(1, 6):
        for perm in permutations(range(1, k + 1)):
            xs = [v / (k + 1) for v in perm]
            base = rsk_finite(xs).shape
            assert rsk_finite(xs[::-1]).shape == base.transpose()
            assert rsk_finite([1 - x for x in xs]).shape == base.transpose()
            assert rsk_finite([1 - x for x in xs[::-1]]).shape == base


def test_long_input_shape_plausible():
    n = 4096
    rng = rng_mod.stream(7)
    boxes = record_boxes(rng.random(n))
    assert len(boxes) == n
    width = max(i for i, _ in boxes)
    # first row length concentrates near 2 sqrt(n) = 128
    assert 100 < width < 160
