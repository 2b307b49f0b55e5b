"""Summary statistics over experiment runs and comparison marks.

An experiment produces one best objective per run; this module condenses
those into the usual best/worst/mean/standard-deviation quadruple and
grades a result against a published reference figure as better (plus),
worse (minus) or indistinguishable (approx).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

MARK_PLUS = "plus"
MARK_MINUS = "minus"
MARK_APPROX = "approx"


@dataclass(frozen=True)
class ExperimentStats:
    """Best/worst/mean/sd over the feasible run-bests of one experiment.

    ``sd`` is the population standard deviation (divide by N).  When no run
    produced a feasible best the four summary fields are ``None`` and only
    the counters carry information.
    """

    best: Optional[float]
    worst: Optional[float]
    mean: Optional[float]
    sd: Optional[float]
    feasible_runs: int
    total_runs: int
    problem: Optional[str] = None


def compute_stats(records: Sequence, problem: Optional[str] = None) -> ExperimentStats:
    """Condense per-run results into an :class:`ExperimentStats`.

    ``records`` may be RunRecord objects or anything exposing
    ``.best.objective`` and ``.best.violation.total``; runs whose best is
    infeasible are excluded from the summary fields but still counted in
    ``total_runs``.
    """
    records = list(records)
    if not records:
        raise ValueError("compute_stats needs at least one run record")

    values = [
        float(rec.best.objective)
        for rec in records
        if rec.best.violation.total == 0.0
    ]
    if not values:
        return ExperimentStats(None, None, None, None, 0, len(records), problem)

    n = len(values)
    mean = math.fsum(values) / n
    var = math.fsum((v - mean) ** 2 for v in values) / n
    return ExperimentStats(
        best=min(values),
        worst=max(values),
        mean=mean,
        sd=math.sqrt(var),
        feasible_runs=n,
        total_runs=len(records),
        problem=problem,
    )


def stats_from_values(
    values: Iterable[float],
    total_runs: Optional[int] = None,
    problem: Optional[str] = None,
) -> ExperimentStats:
    """Stats straight from a list of best objectives (all taken feasible)."""
    values = [float(v) for v in values]
    if not values:
        raise ValueError("stats_from_values needs at least one value")
    n = len(values)
    mean = math.fsum(values) / n
    var = math.fsum((v - mean) ** 2 for v in values) / n
    return ExperimentStats(
        best=min(values),
        worst=max(values),
        mean=mean,
        sd=math.sqrt(var),
        feasible_runs=n,
        total_runs=n if total_runs is None else total_runs,
        problem=problem,
    )


def compare_to_reference(stats: ExperimentStats, ref, tolerance: Optional[float] = None) -> str:
    """Grade ``stats`` against a reference row: ``plus``/``minus``/``approx``.

    The comparison is on means, minimization sense: within ``tolerance`` is
    ``approx``, strictly lower is ``plus``, higher is ``minus``.  The default
    tolerance is ``max(1e-6, 1e-3 * |ref.mean|)``, a relative band matching
    the order-of-magnitude spirit of published comparison marks.
    """
    if stats.problem is not None and stats.problem != ref.problem:
        raise ValueError(
            f"cannot compare stats for {stats.problem!r} against reference "
            f"for {ref.problem!r}"
        )
    if stats.mean is None:
        raise ValueError("stats have no feasible runs; nothing to compare")
    if tolerance is None:
        tolerance = max(1e-6, 1e-3 * abs(ref.mean))
    if tolerance < 0.0:
        raise ValueError("tolerance must be nonnegative")

    delta = stats.mean - ref.mean
    if abs(delta) <= tolerance:
        return MARK_APPROX
    return MARK_PLUS if delta < 0.0 else MARK_MINUS
