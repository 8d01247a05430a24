"""Figure rendering for sweeps and catalog reports.

Everything here writes files through the Agg backend; nothing opens a
display.  The CLI calls these alongside its CSV/JSON emission.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def _new_axes(width: float = 7.0):
    golden = (math.sqrt(5.0) - 1.0) / 2.0
    fig, ax = plt.subplots(figsize=(width, width * golden))
    ax.grid(True, which="both", alpha=0.3)
    return fig, ax


def render_sweep(rows: Sequence[dict], path: str, title: str = "",
                 log_x: bool = True) -> str:
    """Plot sweep rows (dicts with x and value, or x/ratio/lower/upper)."""
    fig, ax = _new_axes()
    xs = [r["x"] for r in rows]
    if rows and "ratio" in rows[0]:
        ax.plot(xs, [r["ratio"] for r in rows], "o-", ms=3, label="ratio")
        if rows[0].get("lower") is not None:
            ax.plot(xs, [r["lower"] for r in rows], "--", label="lower bound")
        if rows[0].get("upper") is not None:
            ax.plot(xs, [r["upper"] for r in rows], "--", label="upper bound")
        ax.legend()
        ax.set_ylabel("ratio")
    else:
        ax.plot(xs, [r["value"] for r in rows], "o-", ms=3)
        ax.set_ylabel("value")
    if log_x and xs and min(xs) > 0:
        ax.set_xscale("log")
    ax.set_xlabel("x")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_ineq_reports(reports: Sequence, path: str) -> str:
    """Summary chart of worst normalized slacks per catalog case."""
    fig, ax = _new_axes(width=8.5)
    labels = []
    lo_vals = []
    up_vals = []
    floor = 1e-17
    for rep in reports:
        labels.append(rep.case_id)
        lo = rep.min_slack_lower
        up = rep.min_slack_upper
        lo_vals.append(max(lo, floor) if lo is not None else float("nan"))
        up_vals.append(max(up, floor) if up is not None else float("nan"))
    pos = range(len(labels))
    ax.plot(pos, lo_vals, "v", label="min slack to lower bound")
    ax.plot(pos, up_vals, "^", label="min slack to upper bound")
    ax.axhline(1e-12, color="red", ls=":", label="strictness floor")
    ax.set_yscale("log")
    ax.set_xticks(list(pos))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("normalized slack")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_cm_report(report, path: str) -> str:
    """Worst normalized margin per derivative order for a CM check."""
    fig, ax = _new_axes()
    orders = list(range(report.orders_checked + 1))
    ax.plot(orders, report.worst_margin, "o-")
    ax.axhline(0.0, color="black", lw=0.8)
    ax.axhline(-report.cm_tol, color="red", ls=":", label="-cm_tol")
    ax.set_xlabel("derivative order m")
    ax.set_ylabel("worst normalized margin")
    sign = "+" if report.sign > 0 else "-"
    ax.set_title(
        f"{report.family}: {sign}D(x; {report.lam:.6g}), "
        f"p={list(report.p)}, q={list(report.q)}"
    )
    ax.set_yscale("symlog", linthresh=1e-12)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
