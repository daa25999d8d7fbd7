import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tabdyn import rng as rng_mod
from tabdyn.core import (
    EMPTY_DIAGRAM,
    EMPTY_TABLEAU,
    YoungDiagram,
    all_tableaux,
    count_syt,
    count_syt_log,
    diagram_from_rows,
    hook_lengths,
    partitions_of,
    path_from_tableau,
    profile,
    rescaled_profile,
    tableau_from_boxes,
    tableau_from_path,
    tableau_from_rows,
)
from tabdyn.errors import (
    DuplicateEntry,
    NonPositiveRow,
    NotACover,
    NotWeaklyDecreasing,
)

from oracles import profile_points_slow, syt_count_backtrack

# number of partitions of 1..10
PARTITION_COUNTS = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_counts():
    for n, expected in enumerate(PARTITION_COUNTS, start=1):
        assert sum(1 for _ in partitions_of(n)) == expected
    assert [d.rows for d in partitions_of(0)] == [()]


def test_partitions_are_valid_and_distinct():
    for n in range(1, 9):
        seen = set()
        for d in partitions_of(n):
            assert d.size == n
            assert all(a >= b for a, b in zip(d.rows, d.rows[1:]))
            assert d.rows not in seen
            seen.add(d.rows)


def test_diagram_validation():
    with pytest.raises(NotWeaklyDecreasing):
        diagram_from_rows([1, 2])
    with pytest.raises(NonPositiveRow):
        diagram_from_rows([2, 0])
    assert diagram_from_rows([]) == EMPTY_DIAGRAM


def test_row_and_column_lengths():
    d = YoungDiagram((4, 3, 1))
    assert [d.row(j) for j in (1, 2, 3, 4)] == [4, 3, 1, 0]
    assert [d.column(i) for i in (1, 2, 3, 4, 5)] == [3, 2, 2, 1, 0]
    assert d.transpose().rows == (3, 2, 2, 1)
    assert d.transpose().transpose() == d


def test_addable_removable():
    d = YoungDiagram((4, 3, 1))
    assert d.addable_boxes() == [(5, 1), (4, 2), (2, 3), (1, 4)]
    assert d.removable_boxes() == [(4, 1), (3, 2), (1, 3)]
    for b in d.addable_boxes():
        bigger = d.with_box(b)
        assert bigger.size == d.size + 1
        assert b in bigger and b not in d
    with pytest.raises(NotACover):
        d.with_box((6, 1))
    with pytest.raises(NotACover):
        d.with_box((4, 3))


def test_hook_lengths_known():
    # (4, 3, 1): hooks listed per row bottom-up
    hooks = hook_lengths(YoungDiagram((4, 3, 1)))
    assert [list(r) for r in hooks] == [[6, 4, 3, 1], [4, 2, 1], [1]]


def test_count_syt_known_values():
    assert count_syt(EMPTY_DIAGRAM) == 1
    assert count_syt(YoungDiagram((1,))) == 1
    assert count_syt(YoungDiagram((2, 1))) == 2
    assert count_syt(YoungDiagram((3, 2))) == 5
    assert count_syt(YoungDiagram((4, 3, 1))) == 70
    # n-box hook walk sanity: f of a single row or column is 1
    assert count_syt(YoungDiagram((7,))) == 1
    assert count_syt(YoungDiagram((1,) * 7)) == 1


def test_count_syt_against_backtracking():
    for n in range(1, 8):
        for d in partitions_of(n):
            assert count_syt(d) == syt_count_backtrack(d.rows)


def test_count_syt_squares_sum_to_factorial():
    for n in range(1, 11):
        assert sum(count_syt(d) ** 2 for d in partitions_of(n)) == math.factorial(n)


def test_count_syt_log_matches_exact():
    for n in range(1, 9):
        for d in partitions_of(n):
            assert count_syt_log(d) == pytest.approx(
                math.log(count_syt(d)), abs=1e-10
            )


def test_all_tableaux_counts_and_validity():
    for n in range(1, 7):
        for d in partitions_of(n):
            tabs = list(all_tableaux(d))
            assert len(tabs) == count_syt(d)
            assert len(set(tabs)) == len(tabs)
            for t in tabs:
                assert t.shape == d


def test_tableau_from_rows_validation():
    t = tableau_from_rows(((1, 3, 4), (2, 5)))
    assert t.entry((2, 1)) == 3
    assert t.entry_or_none((9, 9)) is None
    with pytest.raises(DuplicateEntry):
        tableau_from_rows(((1, 2), (2,)))
    with pytest.raises(ValueError):
        tableau_from_rows(((2, 1),))  # not increasing along the row
    with pytest.raises(ValueError):
        tableau_from_rows(((2, 3), (1,)))  # not increasing up the column


def test_growth_order_and_box_of():
    t = tableau_from_rows(((1, 3, 4), (2, 5)))
    order = t.growth_order()
    assert order == [(1, 1), (1, 2), (2, 1), (3, 1), (2, 2)]
    for v in range(1, 6):
        assert t.box_of(v) == order[v - 1]


def test_restrict_prefix():
    t = tableau_from_rows(((1, 3, 4), (2, 5)))
    assert t.restrict(3).rows == ((1, 3), (2,))
    assert t.restrict(5) == t
    assert t.restrict(0) == EMPTY_TABLEAU


def test_path_round_trip_exhaustive():
    for n in range(1, 7):
        for d in partitions_of(n):
            for t in all_tableaux(d):
                path = path_from_tableau(t)
                assert path[0] == EMPTY_DIAGRAM
                assert path[-1] == d
                assert len(path) == n + 1
                assert tableau_from_path(path) == t


def test_tableau_from_boxes_matches_growth_order():
    t = tableau_from_rows(((1, 3, 4), (2, 5)))
    assert tableau_from_boxes(t.growth_order()) == t
    with pytest.raises(NotACover):
        tableau_from_boxes([(2, 1)])  # cannot start away from the corner


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(1, 60))
def test_random_growth_round_trip(seed, n):
    rng = rng_mod.stream(seed)
    from tabdyn.plancherel import sample_growth_rsk

    trace = sample_growth_rsk(n, rng)
    t = tableau_from_boxes(list(trace.boxes))
    assert t.growth_order() == list(trace.boxes)
    assert tableau_from_path(path_from_tableau(t)) == t


def test_transpose_tableau():
    t = tableau_from_rows(((1, 3, 4), (2, 5)))
    tt = t.transpose()
    assert tt.shape == t.shape.transpose()
    for v in range(1, 6):
        i, j = t.box_of(v)
        assert tt.box_of(v) == (j, i)


def test_profile_known_vertices():
    # single box: peak at (0, 2), feet on |u| at (-1, 1) and (1, 1)
    p = profile(YoungDiagram((1,)))
    assert p.vertices == ((-1, 1), (0, 2), (1, 1))
    assert p.value(0) == 2
    assert p.value(5) == 5
    assert p.value(-3.5) == 3.5
    # the worked (4, 3, 1) boundary
    p = profile(YoungDiagram((4, 3, 1)))
    assert p.vertices == (
        (-3, 3), (-2, 4), (-1, 3), (1, 5), (2, 4), (3, 5), (4, 4),
    )


def test_profile_matches_box_scan():
    for rows in [(1,), (2,), (1, 1), (4, 3, 1), (5, 5, 2, 1), (3, 3, 3)]:
        d = YoungDiagram(rows)
        p = profile(d)
        us = list(range(-(len(rows) + 3), rows[0] + 4))
        assert [p.value(u) for u in us] == profile_points_slow(rows, us)


def test_profile_area_identity():
    # area between the profile and |u| equals twice the box count
    for rows in [(1,), (4, 3, 1), (6, 4, 4, 2, 1)]:
        d = YoungDiagram(rows)
        p = profile(d)
        us = [u / 2 for u in range(-2 * (len(rows) + 2), 2 * (rows[0] + 2) + 1)]
        vals = [p.value(u) - abs(u) for u in us]
        area = sum(
            (vals[k] + vals[k + 1]) / 2 * (us[k + 1] - us[k])
            for k in range(len(us) - 1)
        )
        assert area == pytest.approx(2 * d.size)


def test_rescaled_profile_scaling():
    d = YoungDiagram((4, 3, 1))
    p = rescaled_profile(d)
    root = math.sqrt(8)
    assert p.value(0) == pytest.approx(profile(d).value(0) / root)
    assert p.value(4 / root) == pytest.approx(4 / root)
