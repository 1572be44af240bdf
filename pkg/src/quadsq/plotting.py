"""Figures for scan reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

VERDICT_CODES = {"Unsolvable": 0, "Solvable": 1, "UnknownByCriterion": 2}
VERDICT_COLORS = ["#d9d9d9", "#2b8cbe", "#e6550d"]


def verdict_grid(rows, coeff_range: int) -> np.ndarray:
    """(2R+1)x(2R+1) array indexed [b + R, a + R]; NaN at alpha = 0."""
    size = 2 * coeff_range + 1
    grid = np.full((size, size), np.nan)
    for row in rows:
        a, b = row.alpha.a, row.alpha.b
        grid[b + coeff_range, a + coeff_range] = VERDICT_CODES[row.verdict]
    return grid


def plot_verdict_map(report, path, title: str | None = None):
    """Map of verdicts over the scanned box; contradictions are circled in red."""
    R = report.coeff_range
    grid = verdict_grid(report.rows, R)
    fig, ax = plt.subplots(figsize=(6.4, 5.6))
    ax.imshow(
        np.ma.masked_invalid(grid),
        origin="lower",
        extent=(-R - 0.5, R + 0.5, -R - 0.5, R + 0.5),
        cmap=ListedColormap(VERDICT_COLORS),
        vmin=0,
        vmax=2,
        interpolation="nearest",
    )
    bad = report.contradictions
    if bad:
        ax.scatter([r.alpha.a for r in bad], [r.alpha.b for r in bad], s=40,
                   facecolors="none", edgecolors="red", linewidths=1.2)
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in VERDICT_COLORS]
    counts = report.counts
    labels = [f"{k} ({counts[k]})" for k in VERDICT_CODES]
    ax.legend(handles, labels, loc="upper left", bbox_to_anchor=(1.01, 1.0), frameon=False, fontsize=8)
    ax.set_xlabel("a")
    ax.set_ylabel("b")
    ax.set_title(title or f"x^2 + y^2 = a + b*sqrt({report.m})")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_witness_bounds(report, path):
    """Histogram of the bound at which each Solvable verdict found its witness."""
    bounds = [r.bound_used for r in report.rows if r.verdict == "Solvable" and r.bound_used]
    sched = list(report.schedule)
    fig, ax = plt.subplots(figsize=(4.8, 3.4))
    ax.bar([str(b) for b in sched], [bounds.count(b) for b in sched], color="#2b8cbe")
    ax.set_xlabel("search bound")
    ax.set_ylabel("witnesses found")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
