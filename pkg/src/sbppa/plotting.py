"""Convergence figures rendered straight from run traces.

One line per run, generation on the x-axis, the running best objective on
the y-axis — log-scaled whenever every plotted value is positive, since the
interesting part of a floor-seeking trace spans many decades.  Files only;
nothing interactive.
"""

from __future__ import annotations

from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)


def plot_convergence(records: Sequence, path: str, title: Optional[str] = None) -> str:
    """Render per-run convergence traces to an image file at ``path``."""
    traced = [rec for rec in records if rec.trace]
    if not traced:
        raise ValueError("no trace data to plot; runs were recorded without traces")

    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    positive = True
    for rec in traced:
        gens = [g for g, _obj, _viol in rec.trace]
        objs = [obj for _g, obj, _viol in rec.trace]
        positive = positive and all(v > 0.0 for v in objs)
        ax.plot(gens, objs, linewidth=0.8, alpha=0.6)

    if positive:
        ax.set_yscale("log")
    ax.set_xlabel("generation")
    ax.set_ylabel("best objective")
    if title:
        ax.set_title(title)
    ax.grid(True, which="both", linewidth=0.3, alpha=0.5)
    fig.tight_layout()
    try:
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)
    return path
