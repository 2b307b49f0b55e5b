"""Constraint handling: violation totals and the parameter-free feasibility
ordering used for candidate replacement.

A point is feasible when every inequality ``g_k(x) <= 0`` holds exactly and
every equality ``h_k(x) = 0`` holds within a fixed band ``EQUALITY_TOLERANCE``.
Comparison between candidates follows the usual three-rule hierarchy:
feasible beats infeasible, two feasible points compare by objective, two
infeasible points compare by total violation.  No penalty weights are
involved anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "EQUALITY_TOLERANCE",
    "Violation",
    "violation_from_values",
    "better",
    "better_values",
]

EQUALITY_TOLERANCE = 1e-4


@dataclass(frozen=True)
class Violation:
    """Aggregate constraint violation of one evaluated point.

    ``total`` is ``sum(max(0, g_k)) + sum(max(0, |h_k| - EQUALITY_TOLERANCE))``;
    zero means feasible.
    """

    total: float = 0.0

    def __post_init__(self) -> None:
        if self.total < 0.0:
            raise ValueError(f"violation total cannot be negative, got {self.total}")

    @property
    def feasible(self) -> bool:
        return self.total == 0.0


def violation_from_values(
    g_values: Sequence[float],
    h_values: Sequence[float] = (),
    eq_tol: float = EQUALITY_TOLERANCE,
) -> Violation:
    """Build a :class:`Violation` from raw constraint values.

    Inequalities count any positive excess in full; equalities count only
    the part of ``|h_k|`` beyond ``eq_tol``.
    """
    total = 0.0
    for g in g_values:
        if math.isnan(g):
            total = math.inf
        elif g > 0.0:
            total += g
    for h in h_values:
        if math.isnan(h):
            total = math.inf
            continue
        excess = abs(h) - eq_tol
        if excess > 0.0:
            total += excess
    return Violation(total)


def better(candidate, incumbent) -> bool:
    """True when ``candidate`` strictly beats ``incumbent``.

    Both arguments need ``objective`` and ``violation`` attributes.  The
    relation is a strict partial order: a feasible point beats any
    infeasible one; among feasible points lower objective wins; among
    infeasible points lower total violation wins.  Ties are not "better",
    so replacement under this rule is never churn.
    """
    return better_values(
        candidate.objective,
        candidate.violation.total,
        incumbent.objective,
        incumbent.violation.total,
    )


def better_values(obj_a: float, viol_a: float, obj_b: float, viol_b: float) -> bool:
    """Scalar form of :func:`better` on (objective, violation-total) pairs."""
    a_feasible = viol_a == 0.0
    b_feasible = viol_b == 0.0
    if a_feasible and not b_feasible:
        return True
    if not a_feasible and b_feasible:
        return False
    if a_feasible:
        return obj_a < obj_b
    return viol_a < viol_b
