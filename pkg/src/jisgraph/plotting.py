"""Report figures for census runs."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .census import OrderSummary  # noqa: E402

COLORS = {"jis": "#4c72b0", "search": "#dd8452", "filter": "#c44e52", "inconclusive": "#8c8c8c"}


def census_figure(summaries: Sequence[OrderSummary], width: float = 9.0):
    orders = [s.order for s in summaries]
    fig, (ax_counts, ax_bounds) = plt.subplots(1, 2, figsize=(width, width * 0.42))

    bottom = [0] * len(orders)
    layers = [
        ("JIS", [s.jis for s in summaries], COLORS["jis"]),
        ("not JIS (search)", [s.not_jis - s.filter_rejected for s in summaries], COLORS["search"]),
        ("not JIS (filter)", [s.filter_rejected for s in summaries], COLORS["filter"]),
        ("inconclusive", [s.inconclusive for s in summaries], COLORS["inconclusive"]),
    ]
    for label, values, color in layers:
        if not any(values):
            continue
        ax_counts.bar(orders, values, bottom=bottom, label=label, color=color)
        bottom = [b + v for b, v in zip(bottom, values)]
    ax_counts.set_yscale("symlog", linthresh=10)
    ax_counts.set_xlabel("order")
    ax_counts.set_ylabel("graphs")
    ax_counts.set_xticks(orders)
    ax_counts.legend(frameon=False, fontsize=8)

    ax_bounds.plot(orders, [s.max_m for s in summaries], "o-", color=COLORS["jis"], label="max m observed")
    ax_bounds.plot(orders, [s.bound_m for s in summaries], "--", color=COLORS["jis"], label="bound n-1")
    ax_bounds.plot(orders, [s.max_ground for s in summaries], "s-", color=COLORS["search"], label="max N observed")
    ax_bounds.plot(orders, [s.bound_ground for s in summaries], "--", color=COLORS["search"], label="bound 2n-2")
    ax_bounds.set_xlabel("order")
    ax_bounds.set_xticks(orders)
    ax_bounds.legend(frameon=False, fontsize=8)

    for ax in (ax_counts, ax_bounds):
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
    fig.tight_layout()
    return fig


def save_census_figure(summaries: Sequence[OrderSummary], path: str | Path) -> Path:
    path = Path(path)
    fig = census_figure(summaries)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
