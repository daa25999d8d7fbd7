"""The acceptance gate: one callable per shipped guarantee.

Every check returns an ExperimentReport whose summary_line() is the
user-facing verdict.  The same functions back ``tabdyn verify`` and the
test suite, so there is exactly one definition of "passing".

Exact checks (1-8) admit no tolerance.  Monte Carlo checks (9-20) run at
the fixed default seed below with the sample sizes given in FULL_PARAMS;
"small" is a quick smoke profile with the same structure.
"""
from __future__ import annotations

import math
import time
from fractions import Fraction
from itertools import permutations
from typing import Callable

import numpy as np

from . import harness, rng as rng_mod
from .core import (
    EMPTY_DIAGRAM,
    YoungDiagram,
    all_tableaux,
    count_syt,
    partitions_of,
    tableau_from_boxes,
)
from .harness import ExperimentReport, _report, threshold
from .laws import theta_cdf, theta_density
from .plancherel import (
    exact_plancherel,
    sample_growth_markov,
    sample_growth_rsk,
    transition_probs,
)
from .particles import (
    GrowthTrace,
    competition_interface,
    corner_growth_sample,
    interface_from_colors,
    interface_via_tableau,
    second_class_from_growth,
    simulate_enhanced,
)
from .rsk import rsk_finite
from .taquin import apply_J, jdt_inverse, jdt_slide

ACCEPTANCE_SEED = 20260814


# ---------------------------------------------------------------------------
# scale presets
# ---------------------------------------------------------------------------

FULL_PARAMS: dict[str, dict] = {
    "count-identity": {"max_n": 8, "max_sum_n": 10},
    "slide-bijection": {"max_n": 7},
    "slide-shift-commutation": {"max_perm": 6, "random_trials": 10_000, "max_len": 9},
    "insertion-symmetries": {"max_n": 6},
    "slide-measure-preservation": {"n": 4},
    "pair-replay-equivalence": {"traces": 10_000, "length": 1_000},
    "interface-dual-computation": {"runs": 1_000, "m": 50},
    "transition-sampler-agreement": {"max_sum_n": 12, "chi2_n": 6,
                                     "trials": 20_000},
    "angle-law": {"n": 10_000, "trials": 2_000, "trend_n": 1_000, "batches": 5},
    "pair-speed-law": {"n": 10_000, "trials": 2_000},
    "lazy-endpoint-vs-new-box": {"n": 50, "trials": 10_000},
    "limit-shape": {"ns": [1_000, 10_000, 100_000], "trials": 50},
    "strip-moments": {"n": 10_000, "k": 10, "trials": 200},
    "insertion-determinism": {"zs": [0.2, 0.5, 0.8], "n": 100_000, "trials": 100},
    "slide-determinism": {"zs": [0.2, 0.5, 0.8], "n": 100_000, "trials": 100},
    "sequence-recovery": {"n": 100_000, "trials": 200, "depth": 2},
    "growth-region-shape": {"target_boxes": 100_000, "runs": 50},
    "interface-angle-law": {"k": 1_000, "runs": 2_000},
    "continuous-pair-speed": {"target_events": 100_000, "runs": 2_000},
    "angle-density-shape": {"grid": 2_001},
}

SMALL_PARAMS: dict[str, dict] = {
    "count-identity": {"max_n": 6, "max_sum_n": 8},
    "slide-bijection": {"max_n": 5},
    "slide-shift-commutation": {"max_perm": 5, "random_trials": 500, "max_len": 7},
    "insertion-symmetries": {"max_n": 5},
    "slide-measure-preservation": {"n": 3},
    "pair-replay-equivalence": {"traces": 300, "length": 200},
    "interface-dual-computation": {"runs": 100, "m": 15},
    "transition-sampler-agreement": {"max_sum_n": 8, "chi2_n": 5, "trials": 4_000},
    "angle-law": {"n": 2_000, "trials": 400, "trend_n": 200, "batches": 4},
    "pair-speed-law": {"n": 2_000, "trials": 400},
    "lazy-endpoint-vs-new-box": {"n": 30, "trials": 2_000},
    "limit-shape": {"ns": [500, 2_000, 8_000], "trials": 20},
    "strip-moments": {"n": 2_000, "k": 7, "trials": 60},
    "insertion-determinism": {"zs": [0.2, 0.5, 0.8], "n": 10_000, "trials": 40},
    "slide-determinism": {"zs": [0.2, 0.5, 0.8], "n": 10_000, "trials": 40},
    "sequence-recovery": {"n": 10_000, "trials": 60, "depth": 2},
    "growth-region-shape": {"target_boxes": 20_000, "runs": 20},
    "interface-angle-law": {"k": 200, "runs": 400},
    "continuous-pair-speed": {"target_events": 20_000, "runs": 400},
    "angle-density-shape": {"grid": 501},
}

SCALES = {"full": FULL_PARAMS, "small": SMALL_PARAMS}


def _params(scale: str, name: str) -> dict:
    return SCALES[scale][name]


# ---------------------------------------------------------------------------
# exact checks
# ---------------------------------------------------------------------------

def check_count_identity(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    """Squared counts sum to n!; hook products match brute-force enumeration."""
    p = _params(scale, "count-identity")
    t0 = time.perf_counter()
    checked = 0
    ok = True
    for n in range(1, p["max_sum_n"] + 1):
        if sum(count_syt(d) ** 2 for d in partitions_of(n)) != math.factorial(n):
            ok = False
    for n in range(1, p["max_n"] + 1):
        for d in partitions_of(n):
            if count_syt(d) != sum(1 for _ in all_tableaux(d)):
                ok = False
            checked += 1
    return _report(
        "count-identity", p, seed, {"shapes_checked": checked}, {}, ok, t0
    )


def check_slide_bijection(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    """One slide is a bijection onto tableaux of the covered shapes.

    Both directions are exhausted: slide then invert returns the input, and
    invert (from every covered shape and every smaller tableau) then slide
    returns the input.  That pins the map as a bijection outright.
    """
    p = _params(scale, "slide-bijection")
    t0 = time.perf_counter()
    ok = True
    forward = 0
    backward = 0
    for n in range(2, p["max_n"] + 1):
        for big in partitions_of(n):
            for t in all_tableaux(big):
                slid, path = jdt_slide(t)
                if slid.shape.with_box(path.boxes[-1]) != big:
                    ok = False
                if jdt_inverse(slid, big) != t:
                    ok = False
                forward += 1
    # inverse direction: from every covered pair (small shape, target shape)
    for n in range(2, p["max_n"] + 1):
        for big in partitions_of(n):
            for box in big.removable_boxes():
                small_rows = list(big.rows)
                small_rows[box[1] - 1] -= 1
                while small_rows and small_rows[-1] == 0:
                    small_rows.pop()
                small = YoungDiagram(tuple(small_rows))
                for s in all_tableaux(small):
                    t = jdt_inverse(s, big)
                    slid, _ = jdt_slide(t)
                    if slid != s:
                        ok = False
                    backward += 1
    return _report(
        "slide-bijection", p, seed,
        {"forward_checked": forward, "backward_checked": backward}, {}, ok, t0,
    )


def check_slide_shift_commutation(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    """Sliding the recording tableau equals recording the shifted input."""
    p = _params(scale, "slide-shift-commutation")
    t0 = time.perf_counter()
    ok = True
    checked = 0
    for k in range(2, p["max_perm"] + 1):
        for perm in permutations(range(1, k + 1)):
            xs = [v / (k + 1) for v in perm]
            lhs = apply_J(rsk_finite(xs).recording)
            rhs = rsk_finite(xs[1:]).recording
            if lhs != rhs:
                ok = False
            checked += 1
    rng = rng_mod.stream(seed, 0)
    for _ in range(p["random_trials"]):
        ln = int(rng.integers(2, p["max_len"] + 1))
        xs = rng.random(ln).tolist()
        if apply_J(rsk_finite(xs).recording) != rsk_finite(xs[1:]).recording:
            ok = False
        checked += 1
    return _report(
        "slide-shift-commutation", p, seed, {"inputs_checked": checked}, {}, ok, t0
    )


def check_insertion_symmetries(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    """Shape symmetries under input reversal and value flip, exhaustively."""
    p = _params(scale, "insertion-symmetries")
    t0 = time.perf_counter()
    ok = True
    checked = 0
    for k in range(1, p["max_n"] + 1):
        for perm in permutations(range(1, k + 1)):
            xs = [v / (k + 1) for v in perm]
            base = rsk_finite(xs).shape
            rev = rsk_finite(xs[::-1]).shape
            flip = rsk_finite([1.0 - x for x in xs]).shape
            both = rsk_finite([1.0 - x for x in xs[::-1]]).shape
            if rev != base.transpose() or flip != base.transpose() or both != base:
                ok = False
            checked += 1
    return _report(
        "insertion-symmetries", p, seed, {"inputs_checked": checked}, {}, ok, t0
    )


def check_slide_measure_preservation(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    """Pushing the exact size-(n+1) measure through one slide gives size-n."""
    p = _params(scale, "slide-measure-preservation")
    t0 = time.perf_counter()
    n = p["n"]
    big_n = n + 1
    fact_big = math.factorial(big_n)
    fact_small = math.factorial(n)
    pushed: dict = {}
    for d in partitions_of(big_n):
        weight = Fraction(count_syt(d), fact_big)
        for t in all_tableaux(d):
            s, _ = jdt_slide(t)
            pushed[s] = pushed.get(s, Fraction(0)) + weight
    ok = True
    count = 0
    for d in partitions_of(n):
        target = Fraction(count_syt(d), fact_small)
        for s in all_tableaux(d):
            if pushed.get(s, Fraction(0)) != target:
                ok = False
            count += 1
    if sum(pushed.values()) != 1:
        ok = False
    return _report(
        "slide-measure-preservation", p, seed,
        {"targets_checked": count}, {}, ok, t0,
    )


def _random_trace(n: int, rng) -> GrowthTrace:
    from .rsk import record_box_arrays

    bi, bj = record_box_arrays(rng.random(n))
    return GrowthTrace(tuple(zip(bi.tolist(), bj.tolist())))


def check_pair_replay_equivalence(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    """Lazy-walk trajectory and window replay agree event by event."""
    p = _params(scale, "pair-replay-equivalence")
    t0 = time.perf_counter()
    ok = True
    mismatch = 0
    for trial in range(p["traces"]):
        rng = rng_mod.stream(seed, trial)
        trace = _random_trace(p["length"], rng)
        a = second_class_from_growth(trace)
        b = simulate_enhanced(trace)
        if a.positions != b.positions or a.jumps != b.jumps:
            ok = False
            mismatch += 1
    # a slice of forced pure-python traversals against the compiled path
    for trial in range(min(50, p["traces"])):
        rng = rng_mod.stream(seed, 10_000_000 + trial)
        trace = _random_trace(100, rng)
        a = second_class_from_growth(trace, engine="python")
        b = simulate_enhanced(trace, engine="python")
        c = second_class_from_growth(trace, engine="auto")
        if not (a.positions == b.positions == c.positions and a.jumps == b.jumps):
            ok = False
            mismatch += 1
    return _report(
        "pair-replay-equivalence", p, seed,
        {"traces": p["traces"], "mismatches": mismatch}, {}, ok, t0,
    )


def check_interface_dual(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    """Color boundary equals the slide path of the rank tableau, exactly."""
    p = _params(scale, "interface-dual-computation")
    t0 = time.perf_counter()
    ok = True
    mismatch = 0
    for trial in range(p["runs"]):
        rng = rng_mod.stream(seed, trial)
        run = corner_growth_sample(p["m"], rng)
        full = competition_interface(run)
        via_tab = interface_via_tableau(run)
        via_colors = interface_from_colors(run)
        if via_tab.boxes != full.boxes:
            ok = False
            mismatch += 1
        k = len(via_colors.boxes)
        if not (p["m"] <= k <= len(full.boxes)) or via_colors.boxes != full.boxes[:k]:
            ok = False
            mismatch += 1
    return _report(
        "interface-dual-computation", p, seed,
        {"runs": p["runs"], "mismatches": mismatch}, {}, ok, t0,
    )


def check_transition_sampler_agreement(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    """Exact transition rows sum to one; the two samplers agree in law."""
    from scipy.stats import chi2

    p = _params(scale, "transition-sampler-agreement")
    t0 = time.perf_counter()
    ok = True
    rows_checked = 0
    for n in range(0, p["max_sum_n"] + 1):
        shapes = list(partitions_of(n)) if n else [EMPTY_DIAGRAM]
        for d in shapes:
            probs = transition_probs(d)
            if sum(pr for _, pr in probs) != 1:
                ok = False
            rows_checked += 1
    # exact measure at small n doubles as a distribution check
    for n in range(1, min(p["max_sum_n"], 8) + 1):
        if sum(pr for _, pr in exact_plancherel(n)) != 1:
            ok = False

    n = p["chi2_n"]
    trials = p["trials"]
    cells = {d.rows: i for i, d in enumerate(partitions_of(n))}
    counts = np.zeros((2, len(cells)))
    for trial in range(trials):
        rng_a = rng_mod.stream(seed, 2 * trial)
        rng_b = rng_mod.stream(seed, 2 * trial + 1)
        counts[0, cells[sample_growth_rsk(n, rng_a).final_shape().rows]] += 1
        counts[1, cells[sample_growth_markov(n, rng_b).final_shape().rows]] += 1
    col = counts.sum(axis=0)
    keep = col > 0
    expected = np.outer(counts.sum(axis=1), col[keep]) / counts.sum()
    stat = float((((counts[:, keep] - expected) ** 2) / expected).sum())
    dof = int(keep.sum()) - 1
    p_value = float(chi2.sf(stat, dof))
    if p_value <= threshold("sampler_chi2_p"):
        ok = False
    return _report(
        "transition-sampler-agreement", p, seed,
        {"rows_checked": rows_checked, "chi2": stat, "dof": dof, "p_value": p_value},
        {"p_value": threshold("sampler_chi2_p")},
        ok, t0,
    )


# ---------------------------------------------------------------------------
# Monte Carlo checks (delegate to the experiment functions)
# ---------------------------------------------------------------------------

def check_angle_law(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    p = _params(scale, "angle-law")
    t0 = time.perf_counter()
    rep = harness.experiment_theta(p["n"], p["trials"], seed, jobs=jobs)
    angles = np.asarray([a for a, _ in rep.details["samples"]])
    med_large = float(np.median(
        [harness.ks_distance(c, theta_cdf) for c in np.array_split(angles, p["batches"])]
    ))
    med_small = harness.batch_median_ks(
        p["trend_n"], p["trials"], seed + 1, batches=p["batches"], jobs=jobs
    )
    ok = rep.passed and med_large < med_small
    stats = dict(rep.statistics)
    stats.update({"median_ks_small_n": med_small, "median_ks_large_n": med_large})
    stats.pop("median_angle", None)
    return _report("angle-law", p, seed, stats,
                   {"ks": threshold("angle_ks"), "trend": 0.0}, ok, t0)


def check_pair_speed_law(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    p = _params(scale, "pair-speed-law")
    rep = harness.experiment_second_class(p["n"], p["trials"], seed, jobs=jobs)
    rep.name = "pair-speed-law"
    return rep


def check_lazy_endpoint_vs_new_box(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    p = _params(scale, "lazy-endpoint-vs-new-box")
    return harness.experiment_qn_equals_dn(p["n"], p["trials"], seed, jobs=jobs)


def check_limit_shape(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    """Sup-distance medians shrink along a size ladder; p95 gate at mid size."""
    p = _params(scale, "limit-shape")
    t0 = time.perf_counter()
    meds = []
    p95_mid = None
    for idx, n in enumerate(p["ns"]):
        rep = harness.experiment_limit_shape(n, p["trials"], seed + idx, jobs=jobs)
        meds.append(rep.statistics["median"])
        if idx == 1:
            p95_mid = rep.statistics["p95"]
    ok = meds[-1] < meds[0] and p95_mid < threshold("limit_shape_p95")
    return _report(
        "limit-shape", p, seed,
        {"medians": [round(m, 9) for m in meds], "p95_mid": p95_mid},
        {"p95_mid": threshold("limit_shape_p95"), "trend": 0.0},
        ok, t0,
    )


def check_strip_moments(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    p = _params(scale, "strip-moments")
    return harness.experiment_pieri(p["n"], p["k"], p["trials"], seed, jobs=jobs)


def _multi_z(fn, p, seed, jobs, name) -> ExperimentReport:
    t0 = time.perf_counter()
    stats: dict = {}
    ok = True
    for idx, z in enumerate(p["zs"]):
        rep = fn(z, p["n"], p["trials"], seed + idx, jobs=jobs)
        stats[f"mae_u_z{z}"] = rep.statistics["mae_u"]
        ok = ok and rep.passed
    return _report(name, p, seed, stats,
                   {"mae_u": threshold("insertion_determinism_mae")}, ok, t0)


def check_insertion_determinism(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    p = _params(scale, "insertion-determinism")
    return _multi_z(harness.experiment_det_rsk, p, seed, jobs, "insertion-determinism")


def check_slide_determinism(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    p = _params(scale, "slide-determinism")
    return _multi_z(harness.experiment_det_jdt, p, seed, jobs, "slide-determinism")


def check_sequence_recovery(scale: str, seed: int, jobs: int = 1) -> ExperimentReport:
    p = _params(scale, "sequence-recovery")
    return harness.experiment_inverse_rsk(
        p["n"], p["trials"], p["depth"], seed, jobs=jobs
    )


def check_growth_region_shape(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    p = _params(scale, "growth-region-shape")
    return harness.experiment_rost_shape(p["target_boxes"], p["runs"], seed, jobs=jobs)


def check_interface_angle_law(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    p = _params(scale, "interface-angle-law")
    return harness.experiment_interface_angle(p["k"], p["runs"], seed, jobs=jobs)


def check_continuous_pair_speed(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    p = _params(scale, "continuous-pair-speed")
    return harness.experiment_tasep_speed(
        p["target_events"], p["runs"], seed, jobs=jobs
    )


def check_angle_density_shape(
    scale: str, seed: int, jobs: int = 1
) -> ExperimentReport:
    """Angle density integrates to one, stays bounded, loads the ends."""
    from scipy.integrate import quad

    p = _params(scale, "angle-density-shape")
    t0 = time.perf_counter()
    total, quad_err = quad(theta_density, 0.0, math.pi / 2, limit=200)
    integral_err = abs(total - 1.0)
    xs = np.linspace(0.0, math.pi / 2, p["grid"])
    dens = np.array([theta_density(float(x)) for x in xs])
    bounded = bool(np.all(np.isfinite(dens))) and float(dens.max()) < 10.0
    ends = theta_cdf(math.pi / 8) + (1.0 - theta_cdf(3 * math.pi / 8))
    middle = theta_cdf(3 * math.pi / 8) - theta_cdf(math.pi / 8)
    ok = integral_err < threshold("density_integral_err") and bounded and ends > middle
    return _report(
        "angle-density-shape", p, seed,
        {"integral_err": integral_err, "max_density": float(dens.max()),
         "end_mass": ends, "middle_mass": middle},
        {"integral_err": threshold("density_integral_err")},
        ok, t0,
    )


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------

EXACT_CHECKS: list[tuple[str, Callable]] = [
    ("count-identity", check_count_identity),
    ("slide-bijection", check_slide_bijection),
    ("slide-shift-commutation", check_slide_shift_commutation),
    ("insertion-symmetries", check_insertion_symmetries),
    ("slide-measure-preservation", check_slide_measure_preservation),
    ("pair-replay-equivalence", check_pair_replay_equivalence),
    ("interface-dual-computation", check_interface_dual),
    ("transition-sampler-agreement", check_transition_sampler_agreement),
]

MC_CHECKS: list[tuple[str, Callable]] = [
    ("angle-law", check_angle_law),
    ("pair-speed-law", check_pair_speed_law),
    ("lazy-endpoint-vs-new-box", check_lazy_endpoint_vs_new_box),
    ("limit-shape", check_limit_shape),
    ("strip-moments", check_strip_moments),
    ("insertion-determinism", check_insertion_determinism),
    ("slide-determinism", check_slide_determinism),
    ("sequence-recovery", check_sequence_recovery),
    ("growth-region-shape", check_growth_region_shape),
    ("interface-angle-law", check_interface_angle_law),
    ("continuous-pair-speed", check_continuous_pair_speed),
    ("angle-density-shape", check_angle_density_shape),
]

ALL_CHECKS: list[tuple[str, Callable]] = EXACT_CHECKS + MC_CHECKS


def run_acceptance(
    suite: str = "all",
    scale: str = "full",
    seed: int = ACCEPTANCE_SEED,
    jobs: int = 1,
    names: list[str] | None = None,
) -> list[ExperimentReport]:
    """Run the selected checks and return their reports in registry order."""
    if suite == "exact":
        checks = EXACT_CHECKS
    elif suite == "mc":
        checks = MC_CHECKS
    elif suite == "all":
        checks = ALL_CHECKS
    else:
        raise ValueError(f"unknown suite: {suite!r}")
    if scale not in SCALES:
        raise ValueError(f"unknown scale: {scale!r}")
    if names is not None:
        wanted = set(names)
        unknown = wanted - {n for n, _ in ALL_CHECKS}
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        checks = [(n, f) for n, f in checks if n in wanted]
    # distinct seed lane per check so checks never share raw streams
    lanes = {name: idx for idx, (name, _) in enumerate(ALL_CHECKS)}
    return [fn(scale, seed + 1009 * lanes[name], jobs) for name, fn in checks]
