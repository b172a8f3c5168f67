"""Figures for interval assignments: one row per vertex, bars where the
vertex holds part of ``[0, span)``."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .numeric import format_rational  # noqa: E402


def plot_coloring(coloring, path, title: str | None = None, weights=None):
    n = len(coloring.assignment)
    span = float(coloring.span)
    fig, ax = plt.subplots(figsize=(7, 0.45 * n + 1.2))
    cmap = plt.get_cmap("tab10")
    for v, s in enumerate(coloring.assignment):
        bars = [(float(lo), float(hi - lo)) for lo, hi in s]
        if bars:
            ax.broken_barh(bars, (v - 0.35, 0.7), facecolors=cmap(v % 10), edgecolor="black", linewidth=0.5)
    if span > 0:
        ax.set_xlim(0, span * 1.02)
        ax.axvline(span, color="grey", linestyle="--", linewidth=0.8)
    ax.set_ylim(-0.7, n - 0.3)
    ax.set_yticks(range(n))
    if weights is not None:
        ax.set_yticklabels([f"{v} (x={format_rational(w)})" for v, w in enumerate(weights)])
    ax.invert_yaxis()
    ax.set_xlabel(f"[0, {format_rational(coloring.span)})")
    ax.set_ylabel("vertex")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
