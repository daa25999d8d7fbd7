"""tabdyn: growth dynamics of Young tableaux and their scaling laws.

Sub-modules:
  core       partitions, standard tableaux, hook counts, profiles
  rsk        row insertion of real sequences, recording tableaux
  taquin     sliding paths, one-step slides and their inverses
  plancherel measure-driven growth: samplers, transitions, strip growth
  laws       limiting curves and laws (values, cdfs, densities, quantiles)
  particles  walk/replay particle pictures and exponential corner growth
  harness    empirical-distance utilities and Monte Carlo experiments
  acceptance the shipped check suite behind `tabdyn verify`
  cli        command-line entry point
"""

__version__ = "0.1.0"

from .core import (
    EMPTY_DIAGRAM,
    EMPTY_TABLEAU,
    Profile,
    StandardTableau,
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
from .errors import (
    DomainError,
    DuplicateEntry,
    EmptyInput,
    EmptySample,
    EmptyTableau,
    EmptyTrace,
    Exhausted,
    IoError,
    MalformedLine,
    NonPositiveRow,
    NotACover,
    NotWeaklyDecreasing,
    NTooLarge,
    TabdynError,
    UnknownKey,
    WindowTooSmall,
)
from .harness import (
    EmpiricalSample,
    ExperimentReport,
    hausdorff_to_parabola,
    ks_distance,
    ks_two_sample,
    profile_sup_distance,
)
from .laws import (
    LawTable,
    law_table,
    omega_star,
    omega_star_slope,
    phi_cdf,
    phi_density,
    phi_quantile,
    rost_boundary_v,
    rost_shape_contains,
    semicircle_cdf,
    semicircle_density,
    semicircle_quantile,
    semicircle_sample,
    theta_cdf,
    theta_density,
    theta_of_w,
    theta_quantile,
)
from .plancherel import (
    GrowthTrace,
    PieriSample,
    exact_plancherel,
    pieri_growth,
    sample_growth_markov,
    sample_growth_rsk,
    trace_probability,
    transition_probs,
)
from .particles import (
    ContinuousTrajectory,
    CornerGrowthRun,
    ParticleConfig,
    SecondClassTrajectory,
    competition_interface,
    corner_growth_sample,
    diagram_to_particles,
    event_driven_corner_growth,
    interface_from_colors,
    interface_via_tableau,
    particles_to_diagram,
    second_class_from_growth,
    simulate_enhanced,
    tasep_second_class,
)
from .rng import GENERATOR_NAME, stream, stream_label
from .rsk import (
    EMPTY_REAL_TABLEAU,
    RealTableau,
    RskOutput,
    StreamingRecorder,
    insert,
    rec_last_box,
    record_box_arrays,
    record_boxes,
    rsk_finite,
)
from .taquin import (
    LatticePath,
    MissingEntries,
    NaturalParamPath,
    apply_J,
    estimate_angle,
    infinite_path_prefix,
    jdt_inverse,
    jdt_slide,
    natural_param,
)
from .acceptance import ACCEPTANCE_SEED, run_acceptance

__all__ = [name for name in dir() if not name.startswith("_")]
