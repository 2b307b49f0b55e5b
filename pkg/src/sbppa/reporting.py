"""Result persistence: run tables as CSV, full experiments as JSON.

The CSV path is the plot-ready flat table; the JSON path is the archival
record — every run plus the statistics and a complete echo of the
configuration that produced them, so the file alone suffices to re-run the
experiment and reproduce each number exactly.  Convergence traces go to
their own CSV (they dwarf the rest of the data and most consumers want
only one of the two).
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict
from typing import Optional, Sequence

from .stats import ExperimentStats, compute_stats

RESULT_FIELDS = ("run_index", "seed", "best_objective", "violation", "evals_used")
TRACE_FIELDS = ("run_index", "generation", "best_objective")

FORMAT_CSV = "csv"
FORMAT_JSON = "json"


def _fmt(value: float) -> str:
    # repr round-trips doubles exactly; str() would lose digits on 3.9-
    return repr(float(value))


def export_results(
    records: Sequence,
    stats: ExperimentStats,
    path: str,
    fmt: str = FORMAT_CSV,
    config=None,
) -> None:
    """Write an experiment to ``path`` as ``csv`` or ``json``.

    JSON requires ``config`` (the exact SbppaConfig used) so the file carries
    a full reproduction recipe; CSV ignores it.
    """
    if fmt == FORMAT_CSV:
        _write_results_csv(records, path)
    elif fmt == FORMAT_JSON:
        if config is None:
            raise ValueError("JSON export needs the config for the reproducibility echo")
        _write_results_json(records, stats, config, path)
    else:
        raise ValueError(f"unknown format {fmt!r}; expected 'csv' or 'json'")


def _open_for_write(path: str):
    try:
        return open(path, "w", newline="", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write results to {path}: {exc}") from exc


def _write_results_csv(records: Sequence, path: str) -> None:
    with _open_for_write(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(RESULT_FIELDS)
        for rec in records:
            writer.writerow(
                [
                    rec.run_index,
                    rec.rng_seed,
                    _fmt(rec.best.objective),
                    _fmt(rec.best.violation.total),
                    rec.evals_used,
                ]
            )


def _run_dict(rec) -> dict:
    return {
        "run_index": rec.run_index,
        "seed": rec.rng_seed,
        "best_objective": float(rec.best.objective),
        "violation": float(rec.best.violation.total),
        "evals_used": rec.evals_used,
        "position": [float(v) for v in rec.best.position],
    }


def stats_dict(stats: ExperimentStats) -> dict:
    out = asdict(stats)
    # None means "undefined" (zero feasible runs); JSON null is the match.
    return out


def _write_results_json(records: Sequence, stats: ExperimentStats, config, path: str) -> None:
    archive_stats = None
    if len(records) >= config.pop_size:
        # Stats over the archive-building runs alone, reported alongside the
        # all-runs stats since either could be meant by "the" summary.
        archive_stats = stats_dict(
            compute_stats(records[: config.pop_size], problem=stats.problem)
        )
    payload = {
        "problem": stats.problem,
        "config": asdict(config),
        "stats": stats_dict(stats),
        "archive_stats": archive_stats,
        "runs": [_run_dict(rec) for rec in records],
    }
    with _open_for_write(path) as fh:
        json.dump(payload, fh, indent=2, allow_nan=True)
        fh.write("\n")


def export_trace(records: Sequence, path: str) -> None:
    """Per-generation best objectives, one row per (run, generation)."""
    with _open_for_write(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_FIELDS)
        for rec in records:
            for generation, best_objective, _violation in rec.trace:
                writer.writerow([rec.run_index, generation, _fmt(best_objective)])


def load_results_json(path: str) -> dict:
    """Parse a JSON export back into a plain dict (inverse of export)."""
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
