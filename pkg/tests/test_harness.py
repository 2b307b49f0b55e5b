"""Statistics, reference tables, persistence, and figure rendering."""

import itertools
import json
import math

import numpy as np
import pytest

from sbppa.constraints import Violation
from sbppa.core import RunRecord, SbppaConfig, Seed, run_experiment
from sbppa.plotting import plot_convergence
from sbppa.problems import get_problem
from sbppa.reference import (
    ALGO_SBPPA,
    TABLE3,
    TABLE3_PROBLEMS,
    TABLE4,
    TABLE4_PROBLEMS,
    ReferenceEntry,
    entries_for,
    get_reference,
)
from sbppa.reporting import (
    export_results,
    export_trace,
    load_results_json,
)
from sbppa.stats import (
    MARK_APPROX,
    MARK_MINUS,
    MARK_PLUS,
    compare_to_reference,
    compute_stats,
    stats_from_values,
)


def _record(run_index, objective, violation=0.0, evals=100, trace=()):
    return RunRecord(
        run_index=run_index,
        best=Seed(np.array([0.0, 0.0]), objective, Violation(violation)),
        evals_used=evals,
        trace=list(trace),
        rng_seed=1000 + run_index,
    )


# ---------------------------------------------------------------------------
# compute_stats
# ---------------------------------------------------------------------------

def test_singleton_stats():
    s = compute_stats([_record(1, 3.0)])
    assert (s.best, s.worst, s.mean, s.sd) == (3.0, 3.0, 3.0, 0.0)
    assert s.feasible_runs == s.total_runs == 1


def test_two_point_population_sd():
    s = compute_stats([_record(1, 1.0), _record(2, 3.0)])
    assert s.mean == 2.0
    assert s.sd == 1.0  # population convention: sqrt(((1-2)^2+(3-2)^2)/2)


def test_constant_list_stats():
    s = compute_stats([_record(i, 0.0) for i in range(1, 4)])
    assert (s.best, s.worst, s.mean, s.sd) == (0.0, 0.0, 0.0, 0.0)


def test_stats_exclude_infeasible_bests():
    recs = [
        _record(1, 5.0),
        _record(2, -99.0, violation=0.3),  # better objective but infeasible
        _record(3, 7.0),
    ]
    s = compute_stats(recs)
    assert s.feasible_runs == 2
    assert s.total_runs == 3
    assert s.best == 5.0 and s.worst == 7.0


def test_stats_with_no_feasible_runs_are_undefined():
    s = compute_stats([_record(1, 1.0, violation=0.5)])
    assert s.best is None and s.worst is None and s.mean is None and s.sd is None
    assert s.feasible_runs == 0
    assert s.total_runs == 1


def test_stats_reject_empty_input():
    with pytest.raises(ValueError):
        compute_stats([])
    with pytest.raises(ValueError):
        stats_from_values([])


def test_stats_are_permutation_invariant():
    values = [3.0, -1.0, 4.0, 1.5, 9.0]
    base = None
    for perm in itertools.permutations(values):
        recs = [_record(i + 1, v) for i, v in enumerate(perm)]
        s = compute_stats(recs)
        if base is None:
            base = s
        else:
            assert s == base


def test_stats_invariants_on_random_samples():
    rng = np.random.default_rng(0)
    for _ in range(20):
        values = rng.normal(size=rng.integers(1, 12)).tolist()
        s = stats_from_values(values)
        assert s.best <= s.mean <= s.worst
        assert s.sd >= 0.0
        assert (s.sd == 0.0) == (len(set(values)) == 1)
        assert s.sd == pytest.approx(float(np.std(values)), rel=1e-12, abs=1e-15)


# ---------------------------------------------------------------------------
# compare_to_reference
# ---------------------------------------------------------------------------

_REF = ReferenceEntry("matyas", "SbPPA", 0.0, 0.0, 1.0, 0.0)


def test_exact_tie_is_approx():
    s = stats_from_values([1.0], problem="matyas")
    assert compare_to_reference(s, _REF) == MARK_APPROX


def test_clear_win_is_plus():
    s = stats_from_values([1.0 - 10 * 1e-3], problem="matyas")
    assert compare_to_reference(s, _REF, tolerance=1e-3) == MARK_PLUS


def test_clear_loss_is_minus():
    s = stats_from_values([1.0 + 10 * 1e-3], problem="matyas")
    assert compare_to_reference(s, _REF, tolerance=1e-3) == MARK_MINUS


def test_default_tolerance_is_relative():
    # |ref.mean| = 1 -> band 1e-3
    s = stats_from_values([1.0005], problem="matyas")
    assert compare_to_reference(s, _REF) == MARK_APPROX
    s = stats_from_values([1.002], problem="matyas")
    assert compare_to_reference(s, _REF) == MARK_MINUS


def test_problem_mismatch_is_an_error():
    s = stats_from_values([1.0], problem="ackley")
    with pytest.raises(ValueError):
        compare_to_reference(s, _REF)


def test_undefined_stats_cannot_be_compared():
    s = compute_stats([_record(1, 1.0, violation=0.5)])
    with pytest.raises(ValueError):
        compare_to_reference(s, _REF)


# ---------------------------------------------------------------------------
# Reference tables
# ---------------------------------------------------------------------------

def test_reference_tables_cover_all_benchmark_problems():
    assert TABLE3_PROBLEMS == (
        "colville", "matyas", "schaffer", "sixhump", "trid6",
        "trid10", "sphere", "sumsquares", "griewank", "ackley",
    )
    assert TABLE4_PROBLEMS == (
        "cp1", "cp2", "cp3", "cp4", "cp5", "spring", "welded_beam", "speed_reducer",
    )
    assert len(TABLE3) == 40  # 10 problems x 4 algorithms
    assert len(TABLE4) == 40  # 8 problems x 5 algorithms


def test_reference_integrity_spot_checks():
    assert get_reference("spring", ALGO_SBPPA).best == 0.012665
    assert get_reference("welded_beam", ALGO_SBPPA).best == 1.724852
    assert get_reference("speed_reducer", ALGO_SBPPA).best == 2996.114
    assert get_reference("sixhump", ALGO_SBPPA).best == -1.031628
    assert get_reference("trid6", ALGO_SBPPA).sd == 5.88e-09
    assert get_reference("ackley", ALGO_SBPPA).best == 7.994e-15
    assert get_reference("cp4", ALGO_SBPPA).mean == 24.37536
    assert get_reference("sphere", "ABC").best == 2.6055e-16
    assert get_reference("cp2", "SSO-C").sd == 1.10e-04


def test_reference_lookup_errors():
    with pytest.raises(KeyError):
        get_reference("rosenbrock", ALGO_SBPPA)
    with pytest.raises(KeyError):
        get_reference("spring", "HPA")  # HPA only appears in the unconstrained table
    with pytest.raises(KeyError):
        entries_for("rosenbrock")


def test_entries_for_returns_all_rows():
    rows = entries_for("ackley")
    assert [e.algorithm for e in rows] == ["ABC", "PSO", "HPA", "SbPPA"]
    rows = entries_for("cp5")
    assert [e.algorithm for e in rows] == ["PSO", "ABC", "FF", "SSO-C", "SbPPA"]


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

def _small_experiment(tmp_path):
    problem = get_problem("matyas")
    config = SbppaConfig(max_generations=40, trial_runs=12, rng_seed=77)
    records, stats = run_experiment(problem, config)
    return problem, config, records, stats


def test_csv_schema_and_row_count(tmp_path):
    _, _, records, stats = _small_experiment(tmp_path)
    out = tmp_path / "results.csv"
    export_results(records, stats, str(out), fmt="csv")
    lines = out.read_text().splitlines()
    assert lines[0] == "run_index,seed,best_objective,violation,evals_used"
    assert len(lines) == 1 + 12
    first = lines[1].split(",")
    assert first[0] == "1"
    assert int(first[4]) == 10 + 40 * 10


def test_single_record_csv(tmp_path):
    out = tmp_path / "one.csv"
    export_results([_record(1, 2.5)], compute_stats([_record(1, 2.5)]), str(out))
    lines = out.read_text().splitlines()
    assert len(lines) == 2


def test_json_round_trip_reproduces_stats_exactly(tmp_path):
    _, config, records, stats = _small_experiment(tmp_path)
    out = tmp_path / "results.json"
    export_results(records, stats, str(out), fmt="json", config=config)
    doc = load_results_json(str(out))
    assert doc["problem"] == "matyas"
    assert doc["stats"]["best"] == stats.best
    assert doc["stats"]["worst"] == stats.worst
    assert doc["stats"]["mean"] == stats.mean
    assert doc["stats"]["sd"] == stats.sd
    assert doc["stats"]["feasible_runs"] == stats.feasible_runs
    assert len(doc["runs"]) == 12
    assert doc["archive_stats"]["feasible_runs"] == 10
    for rec, run in zip(records, doc["runs"]):
        assert run["run_index"] == rec.run_index
        assert run["seed"] == rec.rng_seed
        assert run["best_objective"] == rec.best.objective
        assert run["position"] == [float(v) for v in rec.best.position]


def test_json_config_echo_closes_the_loop(tmp_path):
    problem, config, records, stats = _small_experiment(tmp_path)
    out = tmp_path / "results.json"
    export_results(records, stats, str(out), fmt="json", config=config)
    doc = load_results_json(str(out))
    echoed = SbppaConfig(**doc["config"])
    assert echoed == config
    again_records, again_stats = run_experiment(problem, echoed)
    assert again_stats == stats
    assert [r.best.objective for r in again_records] == [
        run["best_objective"] for run in doc["runs"]
    ]


def test_json_export_requires_config(tmp_path):
    _, _, records, stats = _small_experiment(tmp_path)
    with pytest.raises(ValueError):
        export_results(records, stats, str(tmp_path / "x.json"), fmt="json")


def test_unknown_format_rejected(tmp_path):
    with pytest.raises(ValueError):
        export_results([_record(1, 1.0)], compute_stats([_record(1, 1.0)]),
                       str(tmp_path / "x.xml"), fmt="xml")


def test_write_failure_reports_path():
    recs = [_record(1, 1.0)]
    with pytest.raises(OSError, match="no/such/dir"):
        export_results(recs, compute_stats(recs), "no/such/dir/results.csv")


def test_trace_csv_covers_every_generation(tmp_path):
    _, _, records, _ = _small_experiment(tmp_path)
    out = tmp_path / "trace.csv"
    export_trace(records, str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == "run_index,generation,best_objective"
    assert len(lines) == 1 + sum(len(r.trace) for r in records)
    # spot-check the first data row against the record itself
    run_index, generation, best = lines[1].split(",")
    assert (int(run_index), int(generation)) == (1, 1)
    assert float(best) == records[0].trace[0][1]


def test_exports_rerun_byte_identical(tmp_path):
    problem = get_problem("matyas")
    config = SbppaConfig(max_generations=25, trial_runs=11, rng_seed=3)

    def export_all(tag):
        records, stats = run_experiment(problem, config)
        csv_path = tmp_path / f"{tag}.csv"
        json_path = tmp_path / f"{tag}.json"
        trace_path = tmp_path / f"{tag}_trace.csv"
        export_results(records, stats, str(csv_path), fmt="csv")
        export_results(records, stats, str(json_path), fmt="json", config=config)
        export_trace(records, str(trace_path))
        return csv_path.read_bytes(), json_path.read_bytes(), trace_path.read_bytes()

    assert export_all("a") == export_all("b")


# ---------------------------------------------------------------------------
# Plotting
# ---------------------------------------------------------------------------

def test_convergence_plot_renders_png(tmp_path):
    _, _, records, _ = _small_experiment(tmp_path)
    out = tmp_path / "fig.png"
    plot_convergence(records, str(out), title="matyas")
    data = out.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(data) > 1000


def test_convergence_plot_handles_negative_objectives(tmp_path):
    problem = get_problem("trid6")
    config = SbppaConfig(max_generations=30, trial_runs=10, rng_seed=5)
    records, _ = run_experiment(problem, config)
    out = tmp_path / "trid.png"
    plot_convergence(records, str(out))
    assert out.exists()


def test_convergence_plot_requires_traces(tmp_path):
    with pytest.raises(ValueError):
        plot_convergence([_record(1, 1.0)], str(tmp_path / "x.png"))
