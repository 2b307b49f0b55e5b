"""Benchmark problem registry: ten box-constrained test functions, five
general constrained problems, and three engineering design problems, each
exposed as a :class:`ProblemSpec` with evaluation counting.

Objectives and constraints are written against ``x[..., j]`` so the same
callable evaluates a single n-vector or a stacked ``(m, n)`` batch; the
search engine relies on the batched form, the public :func:`evaluate` on the
scalar one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .constraints import EQUALITY_TOLERANCE

__all__ = [
    "ProblemSpec",
    "Evaluation",
    "EvalCounter",
    "PROBLEM_NAMES",
    "get_problem",
    "evaluate",
    "evaluate_many",
]


@dataclass
class ProblemSpec:
    """One benchmark problem.

    ``bounds`` holds ``(a_j, b_j)`` per dimension.  ``inequality_constraints``
    are feasible when ``g_k(x) <= 0``; ``equality_constraints`` when
    ``h_k(x) = 0`` (within the equality band of the constraints module).
    ``known_optimum``/``known_optimizer`` carry published minima where one is
    stated; problems whose optimum is formally unknown carry the best
    reported objective as ``reference_value`` instead.  ``integer_dims``
    lists coordinates snapped to integers before any formula is evaluated.
    """

    name: str
    dimension: int
    bounds: tuple
    objective: Callable[[np.ndarray], np.ndarray]
    inequality_constraints: tuple = ()
    equality_constraints: tuple = ()
    known_optimum: Optional[float] = None
    known_optimizer: Optional[tuple] = None
    reference_value: Optional[float] = None
    integer_dims: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if len(self.bounds) != self.dimension:
            raise ValueError(f"{self.name}: bounds/dimension mismatch")
        for a, b in self.bounds:
            if not a < b:
                raise ValueError(f"{self.name}: empty bound interval [{a}, {b}]")

    @property
    def is_constrained(self) -> bool:
        return bool(self.inequality_constraints or self.equality_constraints)

    def bounds_arrays(self) -> tuple:
        """Lower and upper bound vectors as float arrays."""
        a = np.array([lo for lo, _ in self.bounds], dtype=float)
        b = np.array([hi for _, hi in self.bounds], dtype=float)
        return a, b


@dataclass(frozen=True)
class Evaluation:
    """Raw outcome of one objective evaluation."""

    objective: float
    g_values: tuple = ()
    h_values: tuple = ()


class EvalCounter:
    """Monotone counter of objective evaluations; +1 per evaluated point."""

    def __init__(self) -> None:
        self.count = 0

    def add(self, n: int = 1) -> None:
        if n < 0:
            raise ValueError("counter cannot decrease")
        self.count += n

    def __repr__(self) -> str:  # pragma: no cover
        return f"EvalCounter(count={self.count})"


def _snap_integers(problem: ProblemSpec, x: np.ndarray) -> np.ndarray:
    if not problem.integer_dims:
        return x
    x = np.array(x, dtype=float, copy=True)
    idx = sorted(problem.integer_dims)
    x[..., idx] = np.rint(x[..., idx])
    return x


def evaluate(problem: ProblemSpec, x, counter: EvalCounter) -> Evaluation:
    """Evaluate one point, counting it.

    Out-of-bounds coordinates are evaluated as given (bound handling is the
    search loop's job).  A non-finite objective (overflow) is reported as
    ``+inf`` so the comparison rules discard the point.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.dimension,):
        raise ValueError(
            f"{problem.name}: expected shape ({problem.dimension},), got {x.shape}"
        )
    x = _snap_integers(problem, x)
    obj = float(problem.objective(x))
    if not math.isfinite(obj):
        obj = math.inf
    g_values = tuple(float(g(x)) for g in problem.inequality_constraints)
    h_values = tuple(float(h(x)) for h in problem.equality_constraints)
    counter.add(1)
    return Evaluation(obj, g_values, h_values)


def evaluate_many(problem: ProblemSpec, X: np.ndarray, counter: EvalCounter):
    """Evaluate a stacked batch of points.

    Returns ``(objectives, violation_totals)`` as float arrays of length
    ``m`` for input shape ``(m, n)``; the counter advances by ``m``.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != problem.dimension:
        raise ValueError(
            f"{problem.name}: expected shape (m, {problem.dimension}), got {X.shape}"
        )
    X = _snap_integers(problem, X)
    obj = np.asarray(problem.objective(X), dtype=float)
    if not np.isfinite(obj).all():
        obj = np.where(np.isfinite(obj), obj, np.inf)
    viol = np.zeros(len(X))
    for g in problem.inequality_constraints:
        viol += np.maximum(np.asarray(g(X), dtype=float), 0.0)
    for h in problem.equality_constraints:
        viol += np.maximum(np.abs(np.asarray(h(X), dtype=float)) - EQUALITY_TOLERANCE, 0.0)
    if not np.isfinite(viol).all():
        viol = np.where(np.isfinite(viol), viol, np.inf)
    counter.add(len(X))
    return obj, viol


# ---------------------------------------------------------------------------
# Box-constrained test functions
# ---------------------------------------------------------------------------

def _colville(x):
    x1, x2, x3, x4 = x[..., 0], x[..., 1], x[..., 2], x[..., 3]
    return (
        100.0 * (x1 ** 2 - x2) ** 2
        + (x1 - 1.0) ** 2
        + (x3 - 1.0) ** 2
        + 90.0 * (x3 ** 2 - x4) ** 2
        + 10.1 * ((x2 - 1.0) ** 2 + (x4 - 1.0) ** 2)
        + 19.8 * (x2 - 1.0) * (x4 - 1.0)
    )


def _matyas(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 0.26 * (x1 ** 2 + x2 ** 2) - 0.48 * x1 * x2


def _schaffer(x):
    ss = x[..., 0] ** 2 + x[..., 1] ** 2
    return 0.5 + (np.sin(np.sqrt(ss)) ** 2 - 0.5) / (1.0 + 0.001 * ss) ** 2


def _sixhump(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (
        4.0 * x1 ** 2
        - 2.1 * x1 ** 4
        + x1 ** 6 / 3.0
        + x1 * x2
        - 4.0 * x2 ** 2
        + 4.0 * x2 ** 4
    )


def _trid(x):
    return ((x - 1.0) ** 2).sum(axis=-1) - (x[..., 1:] * x[..., :-1]).sum(axis=-1)


def _sphere(x):
    return (x ** 2).sum(axis=-1)


def _sumsquares(x):
    weights = np.arange(1, x.shape[-1] + 1, dtype=float)
    return (weights * x ** 2).sum(axis=-1)


def _griewank(x):
    idx = np.sqrt(np.arange(1, x.shape[-1] + 1, dtype=float))
    return (x ** 2).sum(axis=-1) / 4000.0 - np.cos(x / idx).prod(axis=-1) + 1.0


def _ackley(x):
    n = x.shape[-1]
    return (
        -20.0 * np.exp(-0.2 * np.sqrt((x ** 2).sum(axis=-1) / n))
        - np.exp(np.cos(2.0 * np.pi * x).sum(axis=-1) / n)
        + 20.0
        + np.e
    )


# ---------------------------------------------------------------------------
# General constrained problems
# ---------------------------------------------------------------------------

def _cp1_obj(x):
    lead = x[..., :4]
    return 5.0 * lead.sum(axis=-1) - 5.0 * (lead ** 2).sum(axis=-1) - x[..., 4:13].sum(axis=-1)


_CP1_G = (
    lambda x: 2 * x[..., 0] + 2 * x[..., 1] + x[..., 9] + x[..., 10] - 10,
    lambda x: 2 * x[..., 0] + 2 * x[..., 2] + x[..., 9] + x[..., 11] - 10,
    lambda x: 2 * x[..., 1] + 2 * x[..., 2] + x[..., 10] + x[..., 11] - 10,
    lambda x: -8 * x[..., 0] + x[..., 9],
    lambda x: -8 * x[..., 1] + x[..., 10],
    lambda x: -8 * x[..., 2] + x[..., 11],
    lambda x: -2 * x[..., 3] - x[..., 4] + x[..., 9],
    lambda x: -2 * x[..., 5] - x[..., 6] + x[..., 10],
    lambda x: -2 * x[..., 7] - x[..., 8] + x[..., 11],
)


def _cp2_obj(x):
    x1, x3, x5 = x[..., 0], x[..., 2], x[..., 4]
    return 5.3578547 * x3 ** 2 + 0.8356891 * x1 * x5 + 37.293239 * x1 - 40792.141


_CP2_G = (
    lambda x: 85.334407 + 0.0056858 * x[..., 1] * x[..., 4] + 0.0006262 * x[..., 0] * x[..., 3] - 0.0022053 * x[..., 2] * x[..., 4] - 92.0,
    lambda x: -85.334407 - 0.0056858 * x[..., 1] * x[..., 4] - 0.0006262 * x[..., 0] * x[..., 3] + 0.0022053 * x[..., 2] * x[..., 4],
    lambda x: 80.51249 + 0.0071317 * x[..., 1] * x[..., 4] + 0.0029955 * x[..., 0] * x[..., 1] + 0.0021813 * x[..., 2] ** 2 - 110.0,
    lambda x: -80.51249 - 0.0071317 * x[..., 1] * x[..., 4] - 0.0029955 * x[..., 0] * x[..., 1] - 0.0021813 * x[..., 2] ** 2 + 90.0,
    lambda x: 9.300961 + 0.0047026 * x[..., 2] * x[..., 4] + 0.0012547 * x[..., 0] * x[..., 2] + 0.0019085 * x[..., 2] * x[..., 3] - 25.0,
    lambda x: -9.300961 - 0.0047026 * x[..., 2] * x[..., 4] - 0.0012547 * x[..., 0] * x[..., 2] - 0.0019085 * x[..., 2] * x[..., 3] + 20.0,
)


def _cp3_obj(x):
    return (x[..., 0] - 10.0) ** 3 + (x[..., 1] - 20.0) ** 3


_CP3_G = (
    lambda x: -((x[..., 0] - 5.0) ** 2) - (x[..., 1] - 5.0) ** 2 + 100.0,
    lambda x: (x[..., 0] - 6.0) ** 2 + (x[..., 1] - 5.0) ** 2 - 82.81,
)


def _cp4_obj(x):
    x1, x2, x3, x4, x5 = x[..., 0], x[..., 1], x[..., 2], x[..., 3], x[..., 4]
    x6, x7, x8, x9, x10 = x[..., 5], x[..., 6], x[..., 7], x[..., 8], x[..., 9]
    return (
        x1 ** 2 + x2 ** 2 + x1 * x2 - 14.0 * x1 - 16.0 * x2
        + (x3 - 10.0) ** 2 + 4.0 * (x4 - 5.0) ** 2 + (x5 - 3.0) ** 2
        + 2.0 * (x6 - 1.0) ** 2 + 5.0 * x7 ** 2 + 7.0 * (x8 - 11.0) ** 2
        + 2.0 * (x9 - 10.0) ** 2 + (x10 - 7.0) ** 2 + 45.0
    )


_CP4_G = (
    lambda x: -105.0 + 4.0 * x[..., 0] + 5.0 * x[..., 1] - 3.0 * x[..., 6] + 9.0 * x[..., 7],
    lambda x: 10.0 * x[..., 0] - 8.0 * x[..., 1] - 17.0 * x[..., 6] + 2.0 * x[..., 7],
    lambda x: -8.0 * x[..., 0] + 2.0 * x[..., 1] + 5.0 * x[..., 8] - 2.0 * x[..., 9] - 12.0,
    lambda x: 3.0 * (x[..., 0] - 2.0) ** 2 + 4.0 * (x[..., 1] - 3.0) ** 2 + 2.0 * x[..., 2] ** 2 - 7.0 * x[..., 3] - 120.0,
    lambda x: 5.0 * x[..., 0] ** 2 + 8.0 * x[..., 1] + (x[..., 2] - 6.0) ** 2 - 2.0 * x[..., 3] - 40.0,
    lambda x: x[..., 0] ** 2 + 2.0 * (x[..., 1] - 2.0) ** 2 - 2.0 * x[..., 0] * x[..., 1] + 14.0 * x[..., 4] - 6.0 * x[..., 5],
    lambda x: 0.5 * (x[..., 0] - 8.0) ** 2 + 2.0 * (x[..., 1] - 4.0) ** 2 + 3.0 * x[..., 4] ** 2 - x[..., 5] - 30.0,
    lambda x: -3.0 * x[..., 0] + 6.0 * x[..., 1] + 12.0 * (x[..., 8] - 8.0) ** 2 - 7.0 * x[..., 9],
)


def _cp5_obj(x):
    return x[..., 0] ** 2 + (x[..., 1] - 1.0) ** 2


def _cp5_h(x):
    return x[..., 1] - x[..., 0] ** 2


# ---------------------------------------------------------------------------
# Engineering design problems
# ---------------------------------------------------------------------------

def _spring_obj(x):
    d, D, N = x[..., 0], x[..., 1], x[..., 2]
    return (N + 2.0) * D * d ** 2


_SPRING_G = (
    lambda x: 1.0 - x[..., 1] ** 3 * x[..., 2] / (71785.0 * x[..., 0] ** 4),
    lambda x: (4.0 * x[..., 1] ** 2 - x[..., 0] * x[..., 1])
    / (12566.0 * (x[..., 1] * x[..., 0] ** 3 - x[..., 0] ** 4))
    + 1.0 / (5108.0 * x[..., 0] ** 2)
    - 1.0,
    lambda x: 1.0 - 140.45 * x[..., 0] / (x[..., 1] ** 2 * x[..., 2]),
    lambda x: (x[..., 1] + x[..., 0]) / 1.5 - 1.0,
)


# Welded beam: x = (weld thickness w, weld length l, beam depth d, beam
# thickness h).  Material/load constants: P=6000 lb, beam span 14 in,
# E=30e6 psi, G=12e6 psi, allowed shear 13600 psi, allowed bending 30000 psi,
# allowed deflection 0.25 in.

def _welded_tau(x):
    w, l, d = x[..., 0], x[..., 1], x[..., 2]
    alpha = 6000.0 / (np.sqrt(2.0) * w * l)
    Q = 6000.0 * (14.0 + l / 2.0)
    D = 0.5 * np.sqrt(l ** 2 + (w + d) ** 2)
    J = np.sqrt(2.0) * w * l * (l ** 2 / 6.0 + (w + d) ** 2 / 2.0)
    beta = Q * D / J
    return np.sqrt(alpha ** 2 + alpha * beta * l / D + beta ** 2)


def _welded_buckling(x):
    d, h = x[..., 2], x[..., 3]
    return (4.013 * 30e6 * np.sqrt(d ** 2 * h ** 6 / 36.0) / 196.0) * (
        1.0 - (d / 28.0) * np.sqrt(30e6 / 48e6)
    )


def _welded_obj(x):
    w, l, d, h = x[..., 0], x[..., 1], x[..., 2], x[..., 3]
    return 1.10471 * w ** 2 * l + 0.04811 * d * h * (14.0 + l)


_WELDED_G = (
    lambda x: x[..., 0] - x[..., 3],
    lambda x: 65856.0 / (30000.0 * x[..., 3] * x[..., 2] ** 3) - 0.25,
    lambda x: _welded_tau(x) - 13600.0,
    lambda x: 504000.0 / (x[..., 3] * x[..., 2] ** 2) - 30000.0,
    lambda x: 1.10471 * x[..., 0] ** 2 + 0.04811 * x[..., 2] * x[..., 3] * (14.0 + x[..., 1]) - 5.0,
    lambda x: 0.125 - x[..., 0],
    lambda x: 6000.0 - _welded_buckling(x),
)


def _speed_reducer_obj(x):
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
    x4, x5, x6, x7 = x[..., 3], x[..., 4], x[..., 5], x[..., 6]
    return (
        0.7854 * x1 * x2 ** 2 * (3.3333 * x3 ** 2 + 14.9334 * x3 - 43.0934)
        - 1.508 * x1 * (x6 ** 2 + x7 ** 2)
        + 7.4777 * (x6 ** 3 + x7 ** 3)
        + 0.7854 * (x4 * x6 ** 2 + x5 * x7 ** 2)
    )


_SPEED_G = (
    lambda x: 27.0 / (x[..., 0] * x[..., 1] ** 2 * x[..., 2]) - 1.0,
    lambda x: 397.5 / (x[..., 0] * x[..., 1] ** 2 * x[..., 2] ** 2) - 1.0,
    lambda x: 1.93 * x[..., 3] ** 3 / (x[..., 1] * x[..., 2] * x[..., 5] ** 4) - 1.0,
    lambda x: 1.93 * x[..., 4] ** 3 / (x[..., 1] * x[..., 2] * x[..., 6] ** 4) - 1.0,
    lambda x: np.sqrt((745.0 * x[..., 3] / (x[..., 1] * x[..., 2])) ** 2 + 16.9e6) / (110.0 * x[..., 5] ** 3) - 1.0,
    lambda x: np.sqrt((745.0 * x[..., 4] / (x[..., 1] * x[..., 2])) ** 2 + 157.5e6) / (85.0 * x[..., 6] ** 3) - 1.0,
    lambda x: x[..., 1] * x[..., 2] / 40.0 - 1.0,
    lambda x: 5.0 * x[..., 1] / x[..., 0] - 1.0,
    lambda x: x[..., 0] / (12.0 * x[..., 1]) - 1.0,
    lambda x: (1.5 * x[..., 5] + 1.9) / x[..., 3] - 1.0,
    lambda x: (1.1 * x[..., 6] + 1.9) / x[..., 4] - 1.0,
)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

def _box(lo: float, hi: float, n: int) -> tuple:
    return tuple((float(lo), float(hi)) for _ in range(n))


_CATALOG = {
    "colville": ProblemSpec(
        name="colville",
        dimension=4,
        bounds=_box(-10, 10, 4),
        objective=_colville,
        known_optimum=0.0,
        known_optimizer=(1.0, 1.0, 1.0, 1.0),
    ),
    "matyas": ProblemSpec(
        name="matyas",
        dimension=2,
        bounds=_box(-10, 10, 2),
        objective=_matyas,
        known_optimum=0.0,
        known_optimizer=(0.0, 0.0),
    ),
    "schaffer": ProblemSpec(
        name="schaffer",
        dimension=2,
        bounds=_box(-100, 100, 2),
        objective=_schaffer,
        known_optimum=0.0,
        known_optimizer=(0.0, 0.0),
    ),
    "sixhump": ProblemSpec(
        name="sixhump",
        dimension=2,
        bounds=_box(-5, 5, 2),
        objective=_sixhump,
        known_optimum=-1.03163,
        known_optimizer=(0.08984201, -0.7126564),
    ),
    "trid6": ProblemSpec(
        name="trid6",
        dimension=6,
        bounds=_box(-36, 36, 6),
        objective=_trid,
        known_optimum=-50.0,
        known_optimizer=(6.0, 10.0, 12.0, 12.0, 10.0, 6.0),
    ),
    "trid10": ProblemSpec(
        name="trid10",
        dimension=10,
        bounds=_box(-100, 100, 10),
        objective=_trid,
        known_optimum=-210.0,
        known_optimizer=(10.0, 18.0, 24.0, 28.0, 30.0, 30.0, 28.0, 24.0, 18.0, 10.0),
    ),
    "sphere": ProblemSpec(
        name="sphere",
        dimension=30,
        bounds=_box(-100, 100, 30),
        objective=_sphere,
        known_optimum=0.0,
        known_optimizer=(0.0,) * 30,
    ),
    "sumsquares": ProblemSpec(
        name="sumsquares",
        dimension=30,
        bounds=_box(-10, 10, 30),
        objective=_sumsquares,
        known_optimum=0.0,
        known_optimizer=(0.0,) * 30,
    ),
    "griewank": ProblemSpec(
        name="griewank",
        dimension=30,
        bounds=_box(-600, 600, 30),
        objective=_griewank,
        known_optimum=0.0,
        known_optimizer=(0.0,) * 30,
    ),
    "ackley": ProblemSpec(
        name="ackley",
        dimension=30,
        bounds=_box(-32, 32, 30),
        objective=_ackley,
        known_optimum=0.0,
        known_optimizer=(0.0,) * 30,
    ),
    "cp1": ProblemSpec(
        name="cp1",
        dimension=13,
        bounds=_box(0, 1, 9) + _box(0, 100, 3) + _box(0, 1, 1),
        objective=_cp1_obj,
        inequality_constraints=_CP1_G,
        known_optimum=-15.0,
        known_optimizer=(1.0,) * 9 + (3.0, 3.0, 3.0, 1.0),
    ),
    "cp2": ProblemSpec(
        name="cp2",
        dimension=5,
        bounds=((78.0, 102.0), (33.0, 45.0), (27.0, 45.0), (27.0, 45.0), (27.0, 45.0)),
        objective=_cp2_obj,
        inequality_constraints=_CP2_G,
        known_optimum=-30665.539,
        known_optimizer=(78.0, 33.0, 29.995256025682, 45.0, 36.775812905788),
    ),
    "cp3": ProblemSpec(
        name="cp3",
        dimension=2,
        bounds=((13.0, 100.0), (0.0, 100.0)),
        objective=_cp3_obj,
        inequality_constraints=_CP3_G,
        known_optimum=-6961.81388,
        known_optimizer=(14.095, 0.8429607892154802),
    ),
    "cp4": ProblemSpec(
        name="cp4",
        dimension=10,
        bounds=_box(-10, 10, 10),
        objective=_cp4_obj,
        inequality_constraints=_CP4_G,
        known_optimum=24.3062091,
        known_optimizer=(
            2.171996368737, 2.363682971951, 8.773925722727, 5.095984409879,
            0.990654764237, 1.430573978240, 1.321644207727, 9.828725809840,
            8.280091438505, 8.375926093268,
        ),
    ),
    "cp5": ProblemSpec(
        name="cp5",
        dimension=2,
        bounds=_box(-1, 1, 2),
        objective=_cp5_obj,
        equality_constraints=(_cp5_h,),
        known_optimum=0.7499,
        known_optimizer=(0.7071067811865476, 0.5),
    ),
    "spring": ProblemSpec(
        name="spring",
        dimension=3,
        bounds=((0.05, 2.0), (0.25, 1.3), (2.0, 15.0)),
        objective=_spring_obj,
        inequality_constraints=_SPRING_G,
        reference_value=0.012665,
    ),
    "welded_beam": ProblemSpec(
        name="welded_beam",
        dimension=4,
        bounds=((0.1, 2.0), (0.1, 10.0), (0.1, 10.0), (0.1, 2.0)),
        objective=_welded_obj,
        inequality_constraints=_WELDED_G,
        reference_value=1.724852,
    ),
    "speed_reducer": ProblemSpec(
        name="speed_reducer",
        dimension=7,
        bounds=(
            (2.6, 3.6), (0.7, 0.8), (17.0, 28.0), (7.3, 8.3),
            (7.8, 8.3), (2.9, 3.9), (5.0, 5.5),
        ),
        objective=_speed_reducer_obj,
        inequality_constraints=_SPEED_G,
        reference_value=2996.114,
        integer_dims=frozenset({2}),
    ),
}

PROBLEM_NAMES = tuple(_CATALOG)


def get_problem(name: str) -> ProblemSpec:
    """Look up a problem by name; raises KeyError listing valid names."""
    try:
        return _CATALOG[name]
    except KeyError:
        raise KeyError(
            f"unknown problem {name!r}; valid names: {', '.join(PROBLEM_NAMES)}"
        ) from None


def catalog_document() -> list:
    """The catalog as plain JSON-ready data, one dict per problem."""
    doc = []
    for name in PROBLEM_NAMES:
        p = _CATALOG[name]
        doc.append(
            {
                "name": p.name,
                "dimension": p.dimension,
                "bounds": [[a, b] for a, b in p.bounds],
                "inequality_constraints": len(p.inequality_constraints),
                "equality_constraints": len(p.equality_constraints),
                "known_optimum": p.known_optimum,
                "reference_value": p.reference_value,
            }
        )
    return doc
