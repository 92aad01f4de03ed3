"""Render a sweep as a rates-versus-correlation figure next to the CSV."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .harness import SweepResult

_SERIES = (
    ("ub", "cut-set bound", dict(color="black", linestyle="--", linewidth=1.6)),
    ("df", "DF", dict(color="tab:blue")),
    ("cf", "CF", dict(color="tab:red")),
    ("af", "AF", dict(color="tab:green")),
    ("direct", "direct", dict(color="tab:gray", linestyle=":")),
)


def render_sweep(result: SweepResult, path: str | Path, title: str | None = None) -> Path:
    """Draw every rate column present in the sweep and save the figure."""
    target = Path(path)
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    for column, label, style in _SERIES:
        if column not in result.columns:
            continue
        xs = [r["rho_z"] for r in result.rows if r.get(column) is not None]
        ys = [r[column] for r in result.rows if r.get(column) is not None]
        if xs:
            ax.plot(xs, ys, label=label, **style)
    ax.set_xlabel(r"noise correlation $\rho_z$")
    ax.set_ylabel("rate (bits/channel use)")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(target, dpi=150)
    plt.close(fig)
    return target
