"""Figure rendering for surface and slice reports.

CSV files stay the canonical output; these helpers draw the matching
matplotlib view of the same data so a report directory is self-contained.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def render_surface(
    p_axis: np.ndarray,
    q_axis: np.ndarray,
    values: np.ndarray,
    label: str,
    out_path,
) -> None:
    """Heat map of a quantity over the (p, q) square; values indexed [p, q]."""
    fig, ax = plt.subplots(figsize=(5.4, 4.4))
    mesh = ax.pcolormesh(
        q_axis, p_axis, values, shading="nearest", cmap="viridis"
    )
    fig.colorbar(mesh, ax=ax, label=label)
    ax.set_xlabel("phase-flip probability q")
    ax.set_ylabel("bit-flip probability p")
    ax.set_title(label)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def render_slice(
    p_axis: np.ndarray,
    ub_classical: np.ndarray,
    lb_qs: np.ndarray,
    ub_qs: np.ndarray,
    out_path,
) -> None:
    """Diagonal (p = q) bound curves with the capacity band shaded."""
    fig, ax = plt.subplots(figsize=(5.6, 4.2))
    ax.fill_between(p_axis, lb_qs, ub_qs, color="tab:green", alpha=0.2,
                    label="switched-capacity region")
    adv = np.maximum(lb_qs - ub_classical, 0.0)
    ax.fill_between(p_axis, ub_classical, ub_classical + adv, color="tab:blue",
                    alpha=0.2, label="advantage over fixed order")
    ax.plot(p_axis, ub_classical, color="tab:blue", label="fixed-order upper bound")
    ax.plot(p_axis, lb_qs, color="tab:green", label="switch lower bound")
    ax.plot(p_axis, ub_qs, color="tab:red", label="switch upper bound")
    ax.set_xlabel("error probability p = q")
    ax.set_ylabel("qubits per channel use")
    ax.set_xlim(p_axis[0], p_axis[-1])
    ax.set_ylim(0.0, 1.02)
    ax.legend(loc="upper center", fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
