"""Published benchmark results used as comparison baselines.

Each entry reproduces one row of the benchmark result tables that this
library's experiment harness is graded against: best/worst/mean/standard
deviation of the best objective over 30 runs, exactly as printed (including
printed roundings and sign conventions).  The unconstrained suite reports
SbPPA next to ABC, PSO and HPA; the constrained suite reports SbPPA next to
PSO, ABC, FF and SSO-C.

Values are data, not ground truth: a handful are mutually inconsistent at
the printed precision (e.g. a mean outside the best–worst bracket for cp3),
and they're kept verbatim anyway so comparisons target the published record.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

ALGO_SBPPA = "SbPPA"
ALGO_ABC = "ABC"
ALGO_PSO = "PSO"
ALGO_HPA = "HPA"
ALGO_FF = "FF"
ALGO_SSO_C = "SSO-C"

ALGORITHMS = (ALGO_SBPPA, ALGO_ABC, ALGO_PSO, ALGO_HPA, ALGO_FF, ALGO_SSO_C)


@dataclass(frozen=True)
class ReferenceEntry:
    """One published result row: an algorithm's 30-run summary on a problem."""

    problem: str
    algorithm: str
    best: float
    worst: float
    mean: float
    sd: float


# --- Unconstrained suite (rows ordered best, worst, mean, sd) ---------------

_TABLE3_ROWS = (
    ("colville", ALGO_ABC, 0.0129, 0.6106, 0.1157, 0.111),
    ("colville", ALGO_PSO, 6.8991e-08, 0.0045, 0.001, 0.0013),
    ("colville", ALGO_HPA, 2.0323e-06, 0.0456, 0.009, 0.0122),
    ("colville", ALGO_SBPPA, 1.08e-07, 7.05e-06, 3.05e-06, 3.14e-06),
    ("matyas", ALGO_ABC, 1.2452e-08, 8.4415e-06, 1.8978e-06, 1.8537e-06),
    ("matyas", ALGO_PSO, 0.0, 0.0, 0.0, 0.0),
    ("matyas", ALGO_HPA, 0.0, 0.0, 0.0, 0.0),
    ("matyas", ALGO_SBPPA, 0.0, 0.0, 0.0, 0.0),
    ("schaffer", ALGO_ABC, 0.0, 4.8555e-06, 4.1307e-07, 1.2260e-06),
    ("schaffer", ALGO_PSO, 0.0, 3.5733e-07, 1.1911e-08, 6.4142e-08),
    ("schaffer", ALGO_HPA, 0.0, 0.0, 0.0, 0.0),
    ("schaffer", ALGO_SBPPA, 0.0, 0.0, 0.0, 0.0),
    ("sixhump", ALGO_ABC, -1.03163, -1.03163, -1.03163, 0.0),
    ("sixhump", ALGO_PSO, -1.03163, -1.03163, -1.03163, 0.0),
    ("sixhump", ALGO_HPA, -1.03163, -1.03163, -1.03163, 0.0),
    ("sixhump", ALGO_SBPPA, -1.031628, -1.031628, -1.031628, 0.0),
    ("trid6", ALGO_ABC, -50.0, -50.0, -50.0, 0.0),
    ("trid6", ALGO_PSO, -50.0, -50.0, -50.0, 0.0),
    ("trid6", ALGO_HPA, -50.0, -50.0, -50.0, 0.0),
    ("trid6", ALGO_SBPPA, -50.0, -50.0, -50.0, 5.88e-09),
    ("trid10", ALGO_ABC, -209.9929, -209.8437, -209.9471, 0.044),
    ("trid10", ALGO_PSO, -210.0, -210.0, -210.0, 0.0),
    ("trid10", ALGO_HPA, -210.0, -210.0, -210.0, 1.0),
    ("trid10", ALGO_SBPPA, -210.0, -210.0, -210.0, 4.86e-06),
    ("sphere", ALGO_ABC, 2.6055e-16, 5.5392e-16, 4.7403e-16, 9.2969e-17),
    ("sphere", ALGO_PSO, 0.0, 0.0, 0.0, 0.0),
    ("sphere", ALGO_HPA, 0.0, 0.0, 0.0, 0.0),
    ("sphere", ALGO_SBPPA, 0.0, 0.0, 0.0, 0.0),
    ("sumsquares", ALGO_ABC, 2.9407e-16, 5.5463e-16, 4.8909e-16, 9.0442e-17),
    ("sumsquares", ALGO_PSO, 0.0, 0.0, 0.0, 0.0),
    ("sumsquares", ALGO_HPA, 0.0, 0.0, 0.0, 0.0),
    ("sumsquares", ALGO_SBPPA, 0.0, 0.0, 0.0, 0.0),
    ("griewank", ALGO_ABC, 0.0, 1.1102e-16, 9.2519e-17, 4.1376e-17),
    ("griewank", ALGO_PSO, 0.0, 1.1765e-01, 2.0633e-02, 2.3206e-02),
    ("griewank", ALGO_HPA, 0.0, 0.0, 0.0, 0.0),
    ("griewank", ALGO_SBPPA, 0.0, 0.0, 0.0, 0.0),
    ("ackley", ALGO_ABC, 2.9310e-14, 3.9968e-14, 3.2744e-14, 2.5094e-15),
    ("ackley", ALGO_PSO, 7.9936e-15, 1.5099e-14, 8.5857e-15, 1.8536e-15),
    ("ackley", ALGO_HPA, 7.9936e-15, 1.5099e-14, 1.1309e-14, 3.54e-15),
    ("ackley", ALGO_SBPPA, 7.994e-15, 7.99361e-15, 7.994e-15, 7.99361e-15),
)

# --- Constrained suite (the source table prints best, mean, worst, sd;
# rows below are already remapped to best, worst, mean, sd) ------------------

_TABLE4_ROWS = (
    ("cp1", ALGO_PSO, -15.0, -15.0, -15.0, 0.0),
    ("cp1", ALGO_ABC, -15.0, -15.0, -15.0, 0.0),
    ("cp1", ALGO_FF, 14.999, 14.798, 14.988, 6.40e-07),
    ("cp1", ALGO_SSO_C, -15.0, -15.0, -15.0, 0.0),
    ("cp1", ALGO_SBPPA, -15.0, -15.0, -15.0, 1.95e-15),
    ("cp2", ALGO_PSO, -30665.5, -30650.4, -30662.8, 5.20e-02),
    ("cp2", ALGO_ABC, -30665.5, -30659.1, -30664.9, 8.20e-02),
    ("cp2", ALGO_FF, -3.07e04, -30649.0, -30662.0, 5.20e-02),
    ("cp2", ALGO_SSO_C, -3.07e04, -30665.1, -30665.5, 1.10e-04),
    ("cp2", ALGO_SBPPA, -30665.5, -30665.5, -30665.5, 2.21e-06),
    ("cp3", ALGO_PSO, -6.96e03, -6942.09, -6958.37, 6.70e-02),
    ("cp3", ALGO_ABC, -6961.81, -6955.34, -6958.02, 2.10e-02),
    ("cp3", ALGO_FF, -6959.99, -6947.63, -6.95e03, 3.80e-02),
    ("cp3", ALGO_SSO_C, -6961.81, -6960.92, -6961.01, 1.10e-03),
    ("cp3", ALGO_SBPPA, -6961.5, -6961.45, -6961.38, 0.043637),
    ("cp4", ALGO_PSO, 24.327, 24.843, 2.45e01, 1.32e-01),
    ("cp4", ALGO_ABC, 24.48, 28.4, 2.66e01, 1.14),
    ("cp4", ALGO_FF, 23.97, 30.14, 28.54, 2.25),
    ("cp4", ALGO_SSO_C, 24.306, 24.306, 24.306, 4.95e-05),
    ("cp4", ALGO_SBPPA, 24.34442, 24.37021, 24.37536, 0.012632),
    ("cp5", ALGO_PSO, -0.7499, -0.7486, -0.749, 1.20e-03),
    ("cp5", ALGO_ABC, -0.7499, -0.749, -0.7495, 1.67e-03),
    ("cp5", ALGO_FF, -0.7497, -0.7479, -0.7491, 1.50e-03),
    ("cp5", ALGO_SSO_C, -0.7499, -0.7499, -0.7499, 4.10e-09),
    ("cp5", ALGO_SBPPA, 0.7499, 0.7499, 0.749901, 1.66e-07),
    ("spring", ALGO_PSO, 0.012858, 0.019145, 0.014863, 0.001262),
    ("spring", ALGO_ABC, 0.012665, 0.01321, 0.012851, 0.000118),
    ("spring", ALGO_FF, 0.012665, 0.01342, 0.012931, 0.001454),
    ("spring", ALGO_SSO_C, 0.012665, 0.012868, 0.012765, 9.29e-05),
    ("spring", ALGO_SBPPA, 0.012665, 0.012666, 0.012666, 3.39e-10),
    ("welded_beam", ALGO_PSO, 1.846408, 2.237389, 2.011146, 0.108513),
    ("welded_beam", ALGO_ABC, 1.798173, 2.887044, 2.167358, 0.254266),
    ("welded_beam", ALGO_FF, 1.724854, 2.931001, 2.197401, 0.195264),
    ("welded_beam", ALGO_SSO_C, 1.724852, 1.799332, 1.746462, 0.02573),
    ("welded_beam", ALGO_SBPPA, 1.724852, 1.724852, 1.724852, 4.06e-08),
    ("speed_reducer", ALGO_PSO, 3044.453, 3177.515, 3079.262, 26.21731),
    ("speed_reducer", ALGO_ABC, 2996.116, 3002.756, 2998.063, 6.354562),
    ("speed_reducer", ALGO_FF, 2996.947, 3005.836, 3000.005, 8.356535),
    ("speed_reducer", ALGO_SSO_C, 2996.113, 2996.113, 2996.113, 1.34e-12),
    ("speed_reducer", ALGO_SBPPA, 2996.114, 2996.114, 2996.114, 0.0),
)


def _build(rows) -> Tuple[ReferenceEntry, ...]:
    return tuple(ReferenceEntry(*row) for row in rows)


TABLE3: Tuple[ReferenceEntry, ...] = _build(_TABLE3_ROWS)
TABLE4: Tuple[ReferenceEntry, ...] = _build(_TABLE4_ROWS)

TABLE3_PROBLEMS: Tuple[str, ...] = tuple(dict.fromkeys(e.problem for e in TABLE3))
TABLE4_PROBLEMS: Tuple[str, ...] = tuple(dict.fromkeys(e.problem for e in TABLE4))

_INDEX: Dict[Tuple[str, str], ReferenceEntry] = {
    (e.problem, e.algorithm): e for e in TABLE3 + TABLE4
}


def get_reference(problem: str, algorithm: str = ALGO_SBPPA) -> ReferenceEntry:
    """Look up one published row; KeyError lists what exists on a miss."""
    try:
        return _INDEX[(problem, algorithm)]
    except KeyError:
        known = sorted({p for p, _ in _INDEX})
        raise KeyError(
            f"no reference entry for problem={problem!r}, algorithm={algorithm!r}; "
            f"problems with entries: {', '.join(known)}"
        ) from None


def entries_for(problem: str) -> Tuple[ReferenceEntry, ...]:
    """All algorithms' rows for one problem, in table order."""
    rows = tuple(e for e in TABLE3 + TABLE4 if e.problem == problem)
    if not rows:
        raise KeyError(f"no reference entries for problem {problem!r}")
    return rows
