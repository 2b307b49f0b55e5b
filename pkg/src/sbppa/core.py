"""The seed-dispersal search loop.

A population of NP candidate "seeds" evolves one generation at a time.  Each
agent is routed by a Poisson-probability gate to one of two moves:

* local dispersion — a difference-vector step toward a randomly chosen
  population partner, scaled per dimension by a uniform draw from [-1, 1);
* global dispersion — a heavy-tailed (Mantegna) step away from a uniformly
  random point of the search box, with a single step length per agent per
  generation shared across dimensions.

Each dimension of a move fires independently with probability ``perturb_rate``;
candidates are clamped to the box and replace their parent only when strictly
better under the feasibility-first comparison rules.  The multi-run
experiment protocol archives the best seed of the first NP runs and starts
every later run from that archive.

Two gate policies are provided.  ``agent-index`` (the default) evaluates the
arrival pmf at each agent's 1-based index, so with the stock rate 1.1 and
threshold 0.05 agents 1-3 of 10 take global steps and the rest exploit
locally.  ``sampled-k`` instead samples an arrival count per agent per
generation and gates on its pmf, which sends ~97.4% of all moves global.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .constraints import Violation, better_values
from .problems import EvalCounter, ProblemSpec, evaluate_many
from .stochastic import LevyParams, RngStream, poisson_pmf

__all__ = [
    "MODE_AGENT_INDEX",
    "MODE_SAMPLED_K",
    "DISPERSE_GLOBAL",
    "DISPERSE_LOCAL",
    "Seed",
    "Population",
    "SbppaConfig",
    "RunRecord",
    "derive_run_seed",
    "init_population",
    "dispersion_mode",
    "local_perturb",
    "global_perturb",
    "step_generation",
    "run_sbppa",
    "run_experiment",
]

MODE_AGENT_INDEX = "agent-index"
MODE_SAMPLED_K = "sampled-k"

DISPERSE_GLOBAL = "global"
DISPERSE_LOCAL = "local"

# Generations of random draws fetched per block in the run loop; purely a
# throughput knob, invisible in results.
_DRAW_BLOCK = 256

# Poisson counts are gated through a table this long; the pmf at the stock
# rate is far below any sensible threshold long before this.
_PMF_TABLE_SIZE = 64


@dataclass(frozen=True)
class Seed:
    """One evaluated candidate: position, objective, constraint violation."""

    position: np.ndarray
    objective: float
    violation: Violation = field(default_factory=Violation)

    @property
    def feasible(self) -> bool:
        return self.violation.feasible


@dataclass
class Population:
    """Fixed-size ordered collection of seeds."""

    members: List[Seed]

    def __len__(self) -> int:
        return len(self.members)

    def positions(self) -> np.ndarray:
        return np.array([s.position for s in self.members], dtype=float)

    def best_index(self) -> int:
        best = 0
        for i in range(1, len(self.members)):
            if better_values(
                self.members[i].objective,
                self.members[i].violation.total,
                self.members[best].objective,
                self.members[best].violation.total,
            ):
                best = i
        return best

    def best(self) -> Seed:
        return self.members[self.best_index()]


@dataclass(frozen=True)
class SbppaConfig:
    """All algorithm parameters.

    ``max_evaluations`` of ``None`` means the generation budget alone stops
    the run.  ``trial_runs`` counts the total runs of an experiment,
    including the archive-building first ``pop_size`` runs.
    """

    max_generations: int
    pop_size: int = 10
    perturb_rate: float = 0.8
    arrival_rate: float = 1.1
    poisson_threshold: float = 0.05
    levy_beta: float = 1.5
    max_evaluations: Optional[int] = None
    trial_runs: int = 30
    mode_policy: str = MODE_AGENT_INDEX
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.max_generations < 0:
            raise ValueError("max_generations must be >= 0")
        if self.pop_size < 2:
            raise ValueError("pop_size must be >= 2 (local moves need a partner)")
        if not 0.0 < self.perturb_rate <= 1.0:
            raise ValueError("perturb_rate must lie in (0, 1]")
        if self.arrival_rate <= 0.0:
            raise ValueError("arrival_rate must be positive")
        if not 0.0 < self.poisson_threshold < 1.0:
            raise ValueError("poisson_threshold must lie in (0, 1)")
        if not 0.0 < self.levy_beta < 2.0:
            raise ValueError("levy_beta must lie in (0, 2)")
        if self.max_evaluations is not None and self.max_evaluations < 0:
            raise ValueError("max_evaluations must be >= 0")
        if self.trial_runs < 1:
            raise ValueError("trial_runs must be >= 1")
        if self.mode_policy not in (MODE_AGENT_INDEX, MODE_SAMPLED_K):
            raise ValueError(
                f"mode_policy must be {MODE_AGENT_INDEX!r} or {MODE_SAMPLED_K!r}"
            )
        if self.rng_seed < 0:
            raise ValueError("rng_seed must be a nonnegative 64-bit integer")

    @classmethod
    def for_problem(cls, problem: ProblemSpec, scale: str = "full", **overrides) -> "SbppaConfig":
        """Stock budget for a problem.

        Unconstrained problems get ``dimension * 20000 / pop_size``
        generations; at ``scale="desk"`` the 30-dimensional ones are capped
        at 10000 so a full experiment stays interactive.  Constrained
        problems run 2400 generations at either scale.  Any field can be
        overridden by keyword.
        """
        if scale not in ("full", "desk"):
            raise ValueError(f"scale must be 'full' or 'desk', got {scale!r}")
        pop_size = overrides.get("pop_size", 10)
        if problem.is_constrained:
            g_max = 2400
        else:
            g_max = problem.dimension * 20000 // pop_size
            if scale == "desk" and problem.dimension >= 30:
                g_max = 10000
        overrides.setdefault("max_generations", g_max)
        return cls(**overrides)


@dataclass(frozen=True)
class RunRecord:
    """Outcome of one trial run.

    ``trace`` holds one ``(generation, best_objective, best_violation)``
    triple per completed generation, describing the population's best member
    at that point.
    """

    run_index: int
    best: Seed
    evals_used: int
    trace: List[Tuple[int, float, float]]
    rng_seed: int


def derive_run_seed(base_seed: int, run_index: int) -> int:
    """Per-run stream seed, stable across platforms and schedulers."""
    ss = np.random.SeedSequence((int(base_seed), int(run_index)))
    return int(ss.generate_state(1, np.uint64)[0])


# ---------------------------------------------------------------------------
# Gate tables
# ---------------------------------------------------------------------------

def _count_gate_table(config: SbppaConfig) -> np.ndarray:
    """Global/local verdict for each possible sampled arrival count."""
    return np.array(
        [
            poisson_pmf(k, config.arrival_rate) >= config.poisson_threshold
            for k in range(_PMF_TABLE_SIZE)
        ],
        dtype=bool,
    )


def _agent_gate_mask(config: SbppaConfig) -> np.ndarray:
    """Global/local verdict per agent under the agent-index policy."""
    return np.array(
        [
            poisson_pmf(i, config.arrival_rate) >= config.poisson_threshold
            for i in range(1, config.pop_size + 1)
        ],
        dtype=bool,
    )


# ---------------------------------------------------------------------------
# Public per-agent operations
# ---------------------------------------------------------------------------

def dispersion_mode(agent_index: int, config: SbppaConfig, rng: RngStream) -> str:
    """Route agent ``agent_index`` (1-based) to global or local dispersion.

    Under ``sampled-k`` an arrival count is drawn from Poisson(rate) and the
    agent goes global iff the pmf at that count clears the threshold.  Under
    ``agent-index`` the pmf is evaluated at the agent's own index, making the
    routing deterministic.
    """
    if not 1 <= agent_index <= config.pop_size:
        raise ValueError(f"agent_index must lie in 1..{config.pop_size}")
    if config.mode_policy == MODE_SAMPLED_K:
        k = rng.poisson(config.arrival_rate)
    else:
        k = agent_index
    pmf = poisson_pmf(k, config.arrival_rate)
    return DISPERSE_GLOBAL if pmf >= config.poisson_threshold else DISPERSE_LOCAL


def local_perturb(
    population: Population,
    agent_index: int,
    rng: RngStream,
    config: SbppaConfig,
    bounds: Sequence[Tuple[float, float]],
) -> np.ndarray:
    """Difference-vector candidate for one agent (1-based index).

    A partner distinct from the agent is drawn once; each dimension then
    independently either keeps the current coordinate or moves it by a
    uniform[-1, 1) multiple of the coordinate difference to the partner.
    The result is clamped to the box.
    """
    i = agent_index - 1
    x = population.members[i].position
    while True:
        partner = rng.integer(0, len(population))
        if partner != i:
            break
    xl = population.members[partner].position
    cand = np.array(x, dtype=float, copy=True)
    for j in range(len(cand)):
        if rng.uniform() <= config.perturb_rate:
            xi = rng.uniform(-1.0, 1.0)
            cand[j] = x[j] + xi * (x[j] - xl[j])
    lo = np.array([a for a, _ in bounds], dtype=float)
    hi = np.array([b for _, b in bounds], dtype=float)
    return np.clip(cand, lo, hi)


def global_perturb(
    population: Population,
    agent_index: int,
    rng: RngStream,
    config: SbppaConfig,
    bounds: Sequence[Tuple[float, float]],
) -> np.ndarray:
    """Heavy-tailed candidate for one agent (1-based index).

    One step length is drawn per call and shared by every perturbed
    dimension; each dimension independently either stays or moves by that
    step times the distance to a fresh uniform point of the box.  The result
    is clamped to the box.
    """
    from .stochastic import levy_step

    i = agent_index - 1
    x = population.members[i].position
    step = levy_step(rng, LevyParams(config.levy_beta))
    cand = np.array(x, dtype=float, copy=True)
    for j in range(len(cand)):
        if rng.uniform() <= config.perturb_rate:
            theta = rng.uniform(bounds[j][0], bounds[j][1])
            cand[j] = x[j] + step * (x[j] - theta)
    lo = np.array([a for a, _ in bounds], dtype=float)
    hi = np.array([b for _, b in bounds], dtype=float)
    return np.clip(cand, lo, hi)


# ---------------------------------------------------------------------------
# Population initialization and the generation kernel
# ---------------------------------------------------------------------------

def init_population(
    problem: ProblemSpec,
    config: SbppaConfig,
    rng: RngStream,
    counter: EvalCounter,
) -> Population:
    """NP fresh seeds, each coordinate ``a_j + (b_j - a_j) * eta``."""
    a, b = problem.bounds_arrays()
    X = a + (b - a) * rng.generator.random((config.pop_size, problem.dimension))
    obj, viol = evaluate_many(problem, X, counter)
    members = [
        Seed(X[i].copy(), float(obj[i]), Violation(float(viol[i])))
        for i in range(config.pop_size)
    ]
    return Population(members)


def _propose(X, a, b, span, gmask, gate_u, aux_u, partners, levy, pr):
    """Candidate matrix for one generation.

    ``aux_u`` supplies, per agent and dimension, either the box point theta
    (global rows) or the difference scale xi (local rows); each row consumes
    exactly one uniform per dimension either way.
    """
    global_step = levy[:, None] * (X - (a + span * aux_u))
    local_step = (2.0 * aux_u - 1.0) * (X - X[partners])
    step = np.where(gmask[:, None], global_step, local_step)
    cand = X + (gate_u <= pr) * step
    np.clip(cand, a, b, out=cand)
    return cand


def _accept(obj, viol, feas, cobj, cviol, cfeas):
    """Greedy replacement mask under the feasibility-first order."""
    return (
        (cfeas & feas & (cobj < obj))
        | (cfeas & ~feas)
        | (~cfeas & ~feas & (cviol < viol))
    )


def _levy_vector(normals: np.ndarray, sigma_u: float, inv_beta: float) -> np.ndarray:
    denom = np.abs(normals[1])
    # A denominator that underflowed to zero would divide to inf; floor it.
    np.maximum(denom, 1e-300, out=denom)
    return normals[0] * sigma_u / denom ** inv_beta


def step_generation(
    population: Population,
    problem: ProblemSpec,
    config: SbppaConfig,
    rng: RngStream,
    counter: EvalCounter,
) -> Population:
    """Advance the population one generation.

    Every agent proposes exactly one candidate (one evaluation each) and is
    replaced iff the candidate strictly beats it.
    """
    np_ = config.pop_size
    n = problem.dimension
    a, b = problem.bounds_arrays()
    span = b - a
    X = population.positions()
    obj = np.array([s.objective for s in population.members])
    viol = np.array([s.violation.total for s in population.members])
    feas = viol == 0.0

    gen = rng.generator
    if config.mode_policy == MODE_SAMPLED_K:
        counts = gen.poisson(config.arrival_rate, np_)
        gmask = _count_gate_table(config)[np.minimum(counts, _PMF_TABLE_SIZE - 1)]
    else:
        gmask = _agent_gate_mask(config)
    partners = gen.integers(0, np_ - 1, np_)
    partners += partners >= np.arange(np_)
    U = gen.random((2, np_, n))
    normals = gen.standard_normal((2, np_))
    levy = _levy_vector(normals, LevyParams(config.levy_beta).sigma_u, 1.0 / config.levy_beta)

    cand = _propose(X, a, b, span, gmask, U[0], U[1], partners, levy, config.perturb_rate)
    cobj, cviol = evaluate_many(problem, cand, counter)
    acc = _accept(obj, viol, feas, cobj, cviol, cviol == 0.0)

    members = list(population.members)
    for i in np.flatnonzero(acc):
        members[i] = Seed(cand[i].copy(), float(cobj[i]), Violation(float(cviol[i])))
    return Population(members)


# ---------------------------------------------------------------------------
# Single run and the multi-run experiment protocol
# ---------------------------------------------------------------------------

def run_sbppa(
    problem: ProblemSpec,
    config: SbppaConfig,
    rng: Optional[RngStream] = None,
    initial: Optional[Population] = None,
    run_index: int = 1,
) -> RunRecord:
    """One full search run.

    Starts from ``initial`` if given (its positions are re-evaluated so the
    budget accounting stays uniform), otherwise from a fresh random
    population.  Stops as soon as either the generation or the evaluation
    budget is exhausted.  Identical seeds replay bit-identically.
    """
    if rng is None:
        rng = RngStream(config.rng_seed)
    counter = EvalCounter()
    np_ = config.pop_size
    n = problem.dimension
    a, b = problem.bounds_arrays()
    span = b - a
    gen = rng.generator

    if initial is None:
        X = a + span * gen.random((np_, n))
    else:
        X = initial.positions()
        if X.shape != (np_, n):
            raise ValueError(
                f"initial population shape {X.shape} does not match "
                f"(pop_size={np_}, dimension={n})"
            )
        X = np.clip(X, a, b)
    obj, viol = evaluate_many(problem, X, counter)
    feas = viol == 0.0

    sampled_k = config.mode_policy == MODE_SAMPLED_K
    count_table = _count_gate_table(config) if sampled_k else None
    agent_mask = None if sampled_k else _agent_gate_mask(config)
    sigma_u = LevyParams(config.levy_beta).sigma_u
    inv_beta = 1.0 / config.levy_beta
    pr = config.perturb_rate
    max_eval = math.inf if config.max_evaluations is None else config.max_evaluations

    def current_best() -> tuple:
        if feas.any():
            i = int(np.argmin(np.where(feas, obj, np.inf)))
        else:
            i = int(np.argmin(viol))
        return i, float(obj[i]), float(viol[i])

    trace: List[Tuple[int, float, float]] = []
    _, best_obj, best_viol = current_best()

    generation = 0
    while generation < config.max_generations and counter.count < max_eval:
        block = min(_DRAW_BLOCK, config.max_generations - generation)
        if sampled_k:
            counts_block = gen.poisson(config.arrival_rate, (block, np_))
        partners_block = gen.integers(0, np_ - 1, (block, np_))
        partners_block += partners_block >= np.arange(np_)
        U_block = gen.random((block, 2, np_, n))
        normals_block = gen.standard_normal((block, 2, np_))

        for t in range(block):
            if sampled_k:
                gmask = count_table[np.minimum(counts_block[t], _PMF_TABLE_SIZE - 1)]
            else:
                gmask = agent_mask
            levy = _levy_vector(normals_block[t], sigma_u, inv_beta)
            cand = _propose(
                X, a, b, span, gmask, U_block[t, 0], U_block[t, 1],
                partners_block[t], levy, pr,
            )
            cobj, cviol = evaluate_many(problem, cand, counter)
            acc = _accept(obj, viol, feas, cobj, cviol, cviol == 0.0)
            if acc.any():
                X[acc] = cand[acc]
                obj[acc] = cobj[acc]
                viol[acc] = cviol[acc]
                feas[acc] = cviol[acc] == 0.0
                _, best_obj, best_viol = current_best()
            generation += 1
            trace.append((generation, best_obj, best_viol))
            if counter.count >= max_eval:
                break

    i, best_obj, best_viol = current_best()
    best = Seed(X[i].copy(), best_obj, Violation(best_viol))
    return RunRecord(run_index, best, counter.count, trace, rng.seed)


def _experiment_task(args) -> RunRecord:
    problem, config, run_index, seed, initial_positions = args
    initial = None
    if initial_positions is not None:
        members = [Seed(np.asarray(p, dtype=float), 0.0) for p in initial_positions]
        initial = Population(members)
    return run_sbppa(
        problem,
        replace(config, rng_seed=seed),
        rng=RngStream(seed),
        initial=initial,
        run_index=run_index,
    )


def run_experiment(problem: ProblemSpec, config: SbppaConfig, jobs: int = 1):
    """The full multi-run protocol; returns ``(records, stats)``.

    Runs 1..pop_size start cold and contribute their best seed to a frozen
    archive; every later run starts from that archive.  Per-run streams are
    derived from ``config.rng_seed`` and the run index, so the outcome is
    independent of scheduling — ``jobs`` only adds worker processes within
    each phase.
    """
    from .stats import compute_stats

    if config.trial_runs < config.pop_size:
        raise ValueError(
            f"trial_runs ({config.trial_runs}) must be >= pop_size ({config.pop_size})"
        )
    seeds = {r: derive_run_seed(config.rng_seed, r) for r in range(1, config.trial_runs + 1)}

    cold = [(problem, config, r, seeds[r], None) for r in range(1, config.pop_size + 1)]
    records: List[RunRecord] = _run_phase(cold, jobs)

    archive = [rec.best for rec in records]
    archive_positions = [s.position.tolist() for s in archive]
    warm = [
        (problem, config, r, seeds[r], archive_positions)
        for r in range(config.pop_size + 1, config.trial_runs + 1)
    ]
    records.extend(_run_phase(warm, jobs))

    return records, compute_stats(records, problem=problem.name)


def _run_phase(tasks, jobs: int) -> List[RunRecord]:
    if not tasks:
        return []
    if jobs <= 1 or len(tasks) == 1:
        return [_experiment_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(_experiment_task, tasks))
