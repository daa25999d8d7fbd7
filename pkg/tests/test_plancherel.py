import math
from fractions import Fraction

import pytest

from tabdyn import rng as rng_mod
from tabdyn.core import (
    EMPTY_DIAGRAM,
    YoungDiagram,
    all_tableaux,
    count_syt,
    partitions_of,
)
from tabdyn.errors import NTooLarge
from tabdyn.plancherel import (
    GrowthTrace,
    PieriSample,
    exact_plancherel,
    pieri_growth,
    sample_growth_markov,
    sample_growth_rsk,
    trace_probability,
    transition_probs,
)


def test_transition_probs_row_one():
    out = dict(
        (d.rows, p) for d, p in transition_probs(YoungDiagram((1,)))
    )
    assert out == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}


def test_transition_probs_hook_shape():
    out = dict(
        (d.rows, p) for d, p in transition_probs(YoungDiagram((2, 1)))
    )
    assert out == {
        (3, 1): Fraction(3, 8),
        (2, 2): Fraction(1, 4),
        (2, 1, 1): Fraction(3, 8),
    }


def test_transition_probs_from_empty():
    out = transition_probs(EMPTY_DIAGRAM)
    assert len(out) == 1
    assert out[0][0] == YoungDiagram((1,)) and out[0][1] == Fraction(1)


def test_transition_probs_sum_to_one():
    for n in range(0, 11):
        for d in partitions_of(n):
            assert sum(p for _, p in transition_probs(d)) == Fraction(1)


def test_transition_probs_match_count_ratio():
    for n in range(0, 9):
        for d in partitions_of(n):
            f = count_syt(d)
            for grown, p in transition_probs(d):
                assert p == Fraction(count_syt(grown), (n + 1) * f)


def test_log_mode_matches_rational():
    for d in (YoungDiagram((4, 3, 1)), YoungDiagram((5, 5, 2, 1))):
        exact = transition_probs(d, mode="rational")
        approx = transition_probs(d, mode="log")
        for (d1, p), (d2, q) in zip(exact, approx):
            assert d1 == d2
            assert q == pytest.approx(float(p), rel=1e-12)
    with pytest.raises(ValueError):
        transition_probs(EMPTY_DIAGRAM, mode="exact")


def test_trace_probability_telescopes():
    # over every filling of every shape of size <= 5: the probability of the
    # corresponding growth trace is f(shape)/n!
    for n in range(1, 6):
        fact = math.factorial(n)
        for d in partitions_of(n):
            f = count_syt(d)
            want = Fraction(f, fact)
            fillings = list(all_tableaux(d))
            assert len(fillings) == f
            for t in fillings:
                assert trace_probability(t.growth_order()) == want


def test_trace_probability_rejects_bad_trace():
    with pytest.raises(ValueError):
        trace_probability([(1, 1), (2, 2)])
    with pytest.raises(ValueError):
        trace_probability([(2, 1)])


def test_exact_plancherel_sums_to_one():
    for n in range(0, 9):
        table = exact_plancherel(n)
        assert sum(p for _, p in table) == Fraction(1)
    assert exact_plancherel(0) == [(EMPTY_DIAGRAM, Fraction(1))]
    with pytest.raises(NTooLarge):
        exact_plancherel(9)
    with pytest.raises(ValueError):
        exact_plancherel(-1)


def test_growth_trace_bookkeeping():
    rng = rng_mod.stream(3)
    trace = sample_growth_rsk(30, rng, rng_label="philox4x64:3")
    assert len(trace) == 30
    assert trace.rng_label == "philox4x64:3"
    shapes = trace.shapes()
    assert shapes[0] == EMPTY_DIAGRAM
    assert shapes[-1] == trace.final_shape()
    assert trace.to_tableau().shape == trace.final_shape()
    assert trace.u_coords() == [i - j for i, j in trace.boxes]
    assert len(sample_growth_rsk(0, rng)) == 0


def test_markov_sampler_matches_insertion_law_exactly():
    # empirical check is in the acceptance suite; here just shape validity
    # and agreement of the exact prefix probabilities both samplers induce
    rng = rng_mod.stream(5)
    for _ in range(20):
        trace = sample_growth_markov(12, rng)
        assert trace.final_shape().size == 12
        p = trace_probability(trace.boxes)
        d = trace.final_shape()
        assert p == Fraction(count_syt(d), math.factorial(12))


def test_samplers_reject_negative_n():
    rng = rng_mod.stream(1)
    with pytest.raises(ValueError):
        sample_growth_rsk(-1, rng)
    with pytest.raises(ValueError):
        sample_growth_markov(-1, rng)


def test_pieri_growth_distinct_columns():
    rng = rng_mod.stream(7)
    for _ in range(25):
        s = pieri_growth(200, 8, rng)
        assert s.n == 200 and s.k == 8
        assert len(s.u_coords) == 8
        # strictly increasing u along the strip: a horizontal strip hits
        # each diagonal at most once and the block lands left to right
        assert all(a < b for a, b in zip(s.u_coords, s.u_coords[1:]))
    with pytest.raises(ValueError):
        pieri_growth(0, 1, rng)
    with pytest.raises(ValueError):
        pieri_growth(1, 0, rng)
    with pytest.raises(ValueError):
        PieriSample(4, 2, (1, 1))


def test_growth_trace_final_shape_agrees_with_tableau():
    trace = GrowthTrace(((1, 1), (2, 1), (1, 2), (3, 1), (2, 2)))
    assert trace.final_shape() == YoungDiagram((3, 2))
    assert trace.to_tableau().rows == ((1, 2, 4), (3, 5))
