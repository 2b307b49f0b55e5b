"""Benchmark catalog: formulas, bounds, constraint counts, eval accounting."""

import math

import numpy as np
import pytest

from sbppa.problems import (
    PROBLEM_NAMES,
    EvalCounter,
    catalog_document,
    evaluate,
    evaluate_many,
    get_problem,
)
from sbppa.constraints import violation_from_values

EXPECTED_DIMENSIONS = {
    "colville": 4,
    "matyas": 2,
    "schaffer": 2,
    "sixhump": 2,
    "trid6": 6,
    "trid10": 10,
    "sphere": 30,
    "sumsquares": 30,
    "griewank": 30,
    "ackley": 30,
    "cp1": 13,
    "cp2": 5,
    "cp3": 2,
    "cp4": 10,
    "cp5": 2,
    "spring": 3,
    "welded_beam": 4,
    "speed_reducer": 7,
}

EXPECTED_CONSTRAINT_COUNTS = {  # (inequalities, equalities)
    "cp1": (9, 0),
    "cp2": (6, 0),
    "cp3": (2, 0),
    "cp4": (8, 0),
    "cp5": (0, 1),
    "spring": (4, 0),
    "welded_beam": (7, 0),
    "speed_reducer": (11, 0),
}


def test_catalog_is_complete_and_ordered():
    assert len(PROBLEM_NAMES) == 18
    assert PROBLEM_NAMES == tuple(EXPECTED_DIMENSIONS)


@pytest.mark.parametrize("name", sorted(EXPECTED_DIMENSIONS))
def test_dimensions_and_bounds(name):
    p = get_problem(name)
    assert p.dimension == EXPECTED_DIMENSIONS[name]
    assert len(p.bounds) == p.dimension
    assert all(a < b for a, b in p.bounds)
    a, b = p.bounds_arrays()
    assert a.shape == b.shape == (p.dimension,)


@pytest.mark.parametrize("name", sorted(EXPECTED_CONSTRAINT_COUNTS))
def test_constraint_counts(name):
    p = get_problem(name)
    want_g, want_h = EXPECTED_CONSTRAINT_COUNTS[name]
    assert len(p.inequality_constraints) == want_g
    assert len(p.equality_constraints) == want_h
    assert p.is_constrained


def test_unconstrained_problems_have_no_constraints():
    for name in PROBLEM_NAMES:
        if name not in EXPECTED_CONSTRAINT_COUNTS:
            p = get_problem(name)
            assert not p.is_constrained
            assert p.inequality_constraints == ()
            assert p.equality_constraints == ()


def test_unknown_problem_is_a_keyerror():
    with pytest.raises(KeyError, match="rastrigin"):
        get_problem("rastrigin")


# ---------------------------------------------------------------------------
# Point evaluations (hand-checked values)
# ---------------------------------------------------------------------------

def test_sphere_at_origin():
    c = EvalCounter()
    ev = evaluate(get_problem("sphere"), np.zeros(30), c)
    assert ev.objective == 0.0
    assert c.count == 1


def test_matyas_hand_value():
    # 0.26*(1+1) - 0.48*1*1
    ev = evaluate(get_problem("matyas"), [1.0, 1.0], EvalCounter())
    assert ev.objective == pytest.approx(0.04, abs=1e-15)


def test_colville_zero_at_ones():
    ev = evaluate(get_problem("colville"), [1.0, 1.0, 1.0, 1.0], EvalCounter())
    assert ev.objective == 0.0


def test_schaffer_zero_at_origin():
    ev = evaluate(get_problem("schaffer"), [0.0, 0.0], EvalCounter())
    assert ev.objective == 0.0


def test_sixhump_minimum():
    ev = evaluate(get_problem("sixhump"), [0.08984201, -0.7126564], EvalCounter())
    assert ev.objective == pytest.approx(-1.031628, abs=1e-5)


def test_trid_closed_forms():
    # minimizer x_i = i(n+1-i), minimum -n(n+4)(n-1)/6
    ev6 = evaluate(get_problem("trid6"), [6, 10, 12, 12, 10, 6], EvalCounter())
    assert ev6.objective == pytest.approx(-50.0, abs=1e-9)
    ev10 = evaluate(
        get_problem("trid10"), [10, 18, 24, 28, 30, 30, 28, 24, 18, 10], EvalCounter()
    )
    assert ev10.objective == pytest.approx(-210.0, abs=1e-9)


def test_ackley_floor_at_origin():
    ev = evaluate(get_problem("ackley"), np.zeros(30), EvalCounter())
    assert abs(ev.objective) < 1e-12


def test_griewank_zero_at_origin():
    ev = evaluate(get_problem("griewank"), np.zeros(30), EvalCounter())
    assert ev.objective == 0.0


def test_cp3_printed_point():
    ev = evaluate(get_problem("cp3"), [14.095, 0.84296], EvalCounter())
    assert ev.objective == pytest.approx(-6961.81388, abs=1e-2)
    assert all(abs(g) <= 1e-3 for g in ev.g_values)  # both constraints active


def test_cp4_printed_point():
    p = get_problem("cp4")
    ev = evaluate(p, p.known_optimizer, EvalCounter())
    assert ev.objective == pytest.approx(24.3062091, abs=1e-3)


def test_welded_beam_example_point():
    ev = evaluate(
        get_problem("welded_beam"), [0.205730, 3.470489, 9.036624, 0.205730], EvalCounter()
    )
    assert ev.objective == pytest.approx(1.724852, abs=1e-3)
    assert max(ev.g_values) <= 1e-6


def test_spring_example_point():
    ev = evaluate(get_problem("spring"), [0.051690, 0.356750, 11.287126], EvalCounter())
    assert ev.objective == pytest.approx(0.012665, abs=1e-4)
    # rounded to 6 decimals the point sits a hair outside g2; the excess is
    # tiny but real, so assert the magnitude rather than feasibility
    assert max(ev.g_values) <= 1e-4


def test_every_printed_optimizer_reproduces_its_optimum():
    for name in PROBLEM_NAMES:
        p = get_problem(name)
        if p.known_optimizer is None:
            continue
        ev = evaluate(p, p.known_optimizer, EvalCounter())
        assert ev.objective == pytest.approx(p.known_optimum, abs=1e-3), name
        assert all(g <= 1e-6 for g in ev.g_values), name
        assert all(abs(h) <= 1e-4 for h in ev.h_values), name


def test_perturbations_never_undershoot_separable_minima():
    rng = np.random.default_rng(99)
    for name in ("sphere", "sumsquares", "griewank", "ackley", "colville", "matyas", "schaffer"):
        p = get_problem(name)
        base = np.asarray(p.known_optimizer, dtype=float)
        for _ in range(25):
            x = base + rng.normal(scale=1e-3, size=p.dimension)
            ev = evaluate(p, x, EvalCounter())
            assert ev.objective >= p.known_optimum - 1e-12, name


# ---------------------------------------------------------------------------
# Evaluation mechanics
# ---------------------------------------------------------------------------

def test_counter_counts_every_call():
    c = EvalCounter()
    p = get_problem("matyas")
    for i in range(7):
        evaluate(p, [float(i), 0.0], c)
    assert c.count == 7
    evaluate_many(p, np.zeros((5, 2)), c)
    assert c.count == 12


def test_dimension_mismatch_is_an_error():
    with pytest.raises(ValueError):
        evaluate(get_problem("matyas"), [1.0, 2.0, 3.0], EvalCounter())
    with pytest.raises(ValueError):
        evaluate_many(get_problem("matyas"), np.zeros((4, 3)), EvalCounter())


def test_overflow_reports_infinite_objective():
    with np.errstate(over="ignore"):
        ev = evaluate(get_problem("sphere"), np.full(30, 1e200), EvalCounter())
        assert ev.objective == math.inf
        obj, viol = evaluate_many(get_problem("sphere"), np.full((2, 30), 1e200), EvalCounter())
    assert np.isinf(obj).all()
    assert (viol == 0.0).all()


def test_integer_dimension_snaps_before_evaluation():
    p = get_problem("speed_reducer")
    assert p.integer_dims == frozenset({2})
    x = [3.5, 0.7, 17.4, 7.3, 7.8, 3.35, 5.29]
    snapped = list(x)
    snapped[2] = 17.0
    a = evaluate(p, x, EvalCounter())
    b = evaluate(p, snapped, EvalCounter())
    assert a.objective == b.objective
    assert a.g_values == b.g_values


def test_batch_evaluation_matches_scalar_path():
    rng = np.random.default_rng(5)
    for name in ("ackley", "cp2", "spring", "speed_reducer", "cp5"):
        p = get_problem(name)
        a, b = p.bounds_arrays()
        X = rng.uniform(a, b, size=(8, p.dimension))
        obj, viol = evaluate_many(p, X, EvalCounter())
        for row, o, v in zip(X, obj, viol):
            ev = evaluate(p, row, EvalCounter())
            assert o == pytest.approx(ev.objective, rel=1e-12, abs=1e-12)
            expected = violation_from_values(ev.g_values, ev.h_values)
            assert v == pytest.approx(expected.total, rel=1e-12, abs=1e-12)


def test_catalog_document_shape():
    doc = catalog_document()
    assert len(doc) == 18
    by_name = {d["name"]: d for d in doc}
    assert by_name["cp1"]["inequality_constraints"] == 9
    assert by_name["cp5"]["equality_constraints"] == 1
    assert by_name["sphere"]["dimension"] == 30
    assert by_name["sphere"]["bounds"][0] == [-100.0, 100.0]
    assert by_name["spring"]["known_optimum"] is None
    assert by_name["spring"]["reference_value"] == pytest.approx(0.012665)
