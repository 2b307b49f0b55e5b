"""Seed-based plant propagation: a population optimizer with a
Poisson-gated choice between local perturbation and global Lévy flights,
plus the benchmark catalog and experiment harness built around it.
"""

from .constraints import (
    EQUALITY_TOLERANCE,
    Violation,
    better,
    better_values,
    violation_from_values,
)
from .core import (
    MODE_AGENT_INDEX,
    MODE_SAMPLED_K,
    Population,
    RunRecord,
    SbppaConfig,
    Seed,
    derive_run_seed,
    dispersion_mode,
    global_perturb,
    init_population,
    local_perturb,
    run_experiment,
    run_sbppa,
    step_generation,
)
from .problems import (
    PROBLEM_NAMES,
    EvalCounter,
    Evaluation,
    ProblemSpec,
    catalog_document,
    evaluate,
    evaluate_many,
    get_problem,
)
from .reference import (
    ALGORITHMS,
    TABLE3,
    TABLE3_PROBLEMS,
    TABLE4,
    TABLE4_PROBLEMS,
    ReferenceEntry,
    entries_for,
    get_reference,
)
from .reporting import export_results, export_trace, load_results_json
from .stats import (
    ExperimentStats,
    compare_to_reference,
    compute_stats,
    stats_from_values,
)
from .stochastic import (
    LevyParams,
    RngStream,
    exponential_service_density,
    levy_step,
    mantegna_sigma,
    poisson_pmf,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "EQUALITY_TOLERANCE",
    "EvalCounter",
    "Evaluation",
    "ExperimentStats",
    "LevyParams",
    "MODE_AGENT_INDEX",
    "MODE_SAMPLED_K",
    "PROBLEM_NAMES",
    "Population",
    "ProblemSpec",
    "ReferenceEntry",
    "RngStream",
    "RunRecord",
    "SbppaConfig",
    "Seed",
    "TABLE3",
    "TABLE3_PROBLEMS",
    "TABLE4",
    "TABLE4_PROBLEMS",
    "Violation",
    "better",
    "better_values",
    "catalog_document",
    "compare_to_reference",
    "compute_stats",
    "derive_run_seed",
    "dispersion_mode",
    "entries_for",
    "evaluate",
    "evaluate_many",
    "export_results",
    "export_trace",
    "exponential_service_density",
    "get_problem",
    "get_reference",
    "global_perturb",
    "init_population",
    "levy_step",
    "load_results_json",
    "local_perturb",
    "mantegna_sigma",
    "poisson_pmf",
    "run_experiment",
    "run_sbppa",
    "stats_from_values",
    "step_generation",
    "violation_from_values",
    "__version__",
]
