"""Matplotlib summary figure for oracle cross-check reports."""

from __future__ import annotations

from .oracle import OracleReport


def save_report_figure(report: OracleReport, path: str) -> None:
    """Write a bar chart of set counts per (p/q, k), one panel per degree.

    Bars are green when all three counting routes agree and red otherwise,
    so a glance at the figure matches the report's verdict.
    """
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    degrees = sorted({r.degree for r in report.records})
    fig, axes = plt.subplots(
        len(degrees), 1, figsize=(10, 2.2 * len(degrees)), squeeze=False
    )
    for ax, d in zip(axes[:, 0], degrees):
        recs = [r for r in report.records if r.degree == d]
        xs = range(len(recs))
        heights = [r.formula for r in recs]
        colors = [
            "#2e8b57" if r.match and r.sets_equal else "#b22222" for r in recs
        ]
        ax.bar(xs, heights, color=colors)
        ax.set_ylabel(f"d={d}")
        ax.set_xticks(list(xs))
        ax.set_xticklabels(
            [f"{r.p}/{r.q},{r.k}" for r in recs], rotation=90, fontsize=6
        )
        if heights and max(heights) > 50:
            ax.set_yscale("symlog")
    axes[-1, 0].set_xlabel("rotation p/q, orbits k")
    verdict = "green" if report.green else "RED"
    fig.suptitle(
        f"rotational-set counts, formula vs brute force vs enumeration ({verdict})"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
