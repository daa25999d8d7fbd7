import math

import numpy as np
import pytest
from scipy import stats

from oracles import ks_brute
from tabdyn import rng as rng_mod
from tabdyn.core import YoungDiagram
from tabdyn.errors import EmptySample
from tabdyn.harness import (
    EmpiricalSample,
    THRESHOLDS,
    THRESHOLDS_VERSION,
    ExperimentReport,
    batch_median_ks,
    experiment_pieri,
    experiment_theta,
    hausdorff_to_parabola,
    ks_distance,
    ks_two_sample,
    profile_sup_distance,
    threshold,
)
from tabdyn.laws import omega_star, semicircle_cdf, theta_cdf


def _uniform_pm1(x: float) -> float:
    return min(max((x + 1.0) / 2.0, 0.0), 1.0)


def test_threshold_table_is_versioned_and_annotated():
    assert THRESHOLDS_VERSION == "1"
    for name, (value, kind) in THRESHOLDS.items():
        assert kind == "calibration"
        assert 0 < value
        assert threshold(name) == value
    with pytest.raises(KeyError):
        threshold("not-a-threshold")


def test_empirical_sample():
    s = EmpiricalSample.from_values([3.0, 1, 2])
    assert s.values == (1.0, 2.0, 3.0)
    assert len(s) == 3
    with pytest.raises(EmptySample):
        EmpiricalSample.from_values([])


def test_ks_distance_hand_case():
    # three points at -1, 0, 1 against the uniform law on [-1, 1]
    assert ks_distance([-1.0, 0.0, 1.0], _uniform_pm1) == pytest.approx(1 / 3)
    assert ks_brute([-1.0, 0.0, 1.0], _uniform_pm1) == pytest.approx(1 / 3)


def test_ks_distance_midpoint_grid():
    # the centered grid (i - 1/2)/n against U(0, 1) scores exactly 1/(2n)
    for n in (1, 4, 25):
        xs = [(i - 0.5) / n for i in range(1, n + 1)]
        assert ks_distance(xs, lambda x: x) == pytest.approx(1 / (2 * n))


def test_ks_distance_matches_oracle_random():
    rng = rng_mod.stream(101)
    xs = rng.uniform(-2, 2, size=200)
    d = ks_distance(xs, semicircle_cdf)
    assert d == pytest.approx(ks_brute(xs, semicircle_cdf), abs=1e-12)
    assert d == pytest.approx(
        stats.kstest(xs, np.vectorize(semicircle_cdf)).statistic, abs=1e-12
    )
    assert ks_distance(EmpiricalSample.from_values(xs), semicircle_cdf) == d
    with pytest.raises(EmptySample):
        ks_distance([], semicircle_cdf)


def test_ks_two_sample():
    assert ks_two_sample([1.0, 2.0, 3.0], [1.0, 2.0, 3.0]) == 0.0
    assert ks_two_sample([0.0], [1.0]) == 1.0
    rng = rng_mod.stream(103)
    a, b = rng.normal(size=150), rng.normal(0.3, size=120)
    assert ks_two_sample(a, b) == pytest.approx(
        stats.ks_2samp(a, b).statistic, abs=1e-12
    )
    with pytest.raises(EmptySample):
        ks_two_sample([], [1.0])


def test_profile_sup_distance_single_box():
    # one box: the rescaled boundary peaks at 2 over the curve's 4/pi
    d = profile_sup_distance(YoungDiagram((1,)))
    assert d == pytest.approx(2.0 - omega_star(0.0), abs=1e-9)
    with pytest.raises(ValueError):
        profile_sup_distance(YoungDiagram(()))


def test_profile_sup_distance_matches_dense_scan():
    from tabdyn.core import rescaled_profile

    d = YoungDiagram((5, 3, 3, 1))
    prof = rescaled_profile(d)
    verts = np.asarray(prof.vertices)
    grid = np.linspace(-4, 4, 80001)
    xp = np.concatenate([[-10], verts[:, 0], [10]])
    fp = np.concatenate([[10], verts[:, 1], [10]])
    vals = np.interp(grid, xp, fp)
    curve = np.array([omega_star(u) for u in grid])
    brute = np.max(np.abs(vals - curve))
    assert profile_sup_distance(d) == pytest.approx(brute, abs=1e-7)


def test_hausdorff_hand_cases():
    # unit square vs the region: farthest point (1,1) is 1 away from both
    # axis endpoints and farther from the arc
    assert hausdorff_to_parabola([1], t=1.0) == pytest.approx(1.0, abs=1e-9)
    # empty region: conventionally distance 1
    assert hausdorff_to_parabola([0, 0], t=5.0) == 1.0
    # region column heights sampled from the parabola itself stay close
    t = 400.0
    cols = int(t)
    heights = [  # sample at each column's left edge: the boundary is steep
        math.ceil(t * (1.0 - math.sqrt((i - 1) / t)) ** 2) for i in range(1, cols + 1)
    ]
    assert hausdorff_to_parabola(heights, t) < 0.02


def test_hausdorff_detects_overshoot():
    # a staircase sticking far out along the x-axis
    t = 100.0
    heights = [int(t * (1.0 - math.sqrt(i / t)) ** 2) for i in range(1, 100)]
    heights += [1] * 40  # a thin whisker out to x = 1.39
    d = hausdorff_to_parabola(heights, t)
    assert d > 0.3


def test_report_payload_and_summary():
    rep = ExperimentReport(
        name="demo", params={"n": 3}, seed=9,
        statistics={"ks": 0.123456789, "count": 7},
        thresholds={"ks": 0.05}, passed=False, runtime_s=123.0,
    )
    assert "runtime" not in rep.payload()
    assert rep.payload()["thresholds_version"] == THRESHOLDS_VERSION
    line = rep.summary_line()
    assert line.startswith("[FAIL] demo: ")
    assert "count=7" in line and "ks=0.123457" in line


def test_experiment_reproducible_and_parallel_identical():
    a = experiment_theta(n=60, trials=24, seed=5)
    b = experiment_theta(n=60, trials=24, seed=5)
    assert a.payload() == b.payload()
    c = experiment_theta(n=60, trials=24, seed=5, jobs=2)
    assert c.payload() == a.payload()
    d = experiment_theta(n=60, trials=24, seed=6)
    assert d.payload() != a.payload()
    assert set(a.payload()["statistics"]) == {"ks", "median_angle"}
    assert len(a.details["samples"]) == 24


def test_batch_median_ks_decreases_with_n():
    small = batch_median_ks(n=25, trials=150, seed=11, batches=3)
    large = batch_median_ks(n=2500, trials=150, seed=12, batches=3)
    assert large < small


def test_experiment_pieri_smoke():
    rep = experiment_pieri(n=400, k=5, trials=30, seed=21)
    assert {"mean_m1", "mean_m2", "mean_m4"} == set(rep.statistics)
    assert abs(rep.statistics["mean_m1"]) < 0.5
    assert rep.params == {"n": 400, "k": 5, "trials": 30}
