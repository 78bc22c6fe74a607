"""Summary figures for survey output.

Renders a couple of matplotlib charts from survey rows: group order
against n (split by whether alpha is trivial) and genus against n.  These
are statistical summaries of the sweep, not geometric drawings of
surfaces or billiard paths.
"""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

if TYPE_CHECKING:
    from .cli import SurveyRow

__all__ = ["save_survey_figures"]


def save_survey_figures(rows: Sequence["SurveyRow"], outdir: Path) -> list[Path]:
    """Write survey summary figures into outdir; returns the created paths."""
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    written.append(_plot_group_orders(rows, outdir / "group_order_vs_n.png"))
    written.append(_plot_genus(rows, outdir / "genus_vs_n.png"))
    return written


def _plot_group_orders(rows: Sequence["SurveyRow"], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(7, 5))
    split = {True: ([], []), False: ([], [])}
    for row in rows:
        xs, ys = split[row.alpha == 1]
        xs.append(row.n)
        ys.append(row.order_G)
    ax.scatter(*split[True], s=14, label="alpha = 1 (order 3n^2)")
    ax.scatter(*split[False], s=14, marker="x", label="alpha > 1")
    ax.plot(
        sorted({r.n for r in rows}),
        [3 * n * n for n in sorted({r.n for r in rows})],
        lw=0.8,
        ls="--",
        color="gray",
        label="3n^2 envelope",
    )
    ax.set_xlabel("n = p0 + p1 + p2")
    ax.set_ylabel("monodromy group order 3n^2/alpha")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _plot_genus(rows: Sequence["SurveyRow"], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.scatter([r.n for r in rows], [r.genus for r in rows], s=14)
    ax.set_xlabel("n = p0 + p1 + p2")
    ax.set_ylabel("genus of the edge graph")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
