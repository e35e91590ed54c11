"""Figure rendering for the CLI ``figure`` command.

Consumes the sampled grid data (the CSV is the authoritative product; the
image is a convenience view of the same rows) and renders the two panels:
K solid black against the Euler gamma (blue, dashed), with the Hadamard
gamma (green, dotted) on the wide panel.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_STYLES = {
    "k": dict(color="black", linestyle="-", linewidth=1.4, label="K(z)", zorder=3),
    "gamma": dict(color="tab:blue", linestyle="--", linewidth=1.1, label="Γ(z)", zorder=2),
    "hadamard": dict(color="tab:green", linestyle=":", linewidth=1.3, label="H(z)", zorder=2),
}

_YLIM = {"left": (-6.0, 10.0), "right": None}


def render_panel(panel: str, rows, function_ids, png_path: str) -> None:
    """Plot sampled rows to a PNG next to the delimited output."""
    zs = [row.z for row in rows]
    fig, ax = plt.subplots(figsize=(5.2, 4.0))
    for idx, fid in enumerate(function_ids):
        ys = [row.values[idx] if not math.isnan(row.values[idx]) else math.nan for row in rows]
        ax.plot(zs, ys, **_STYLES.get(fid, dict(label=fid)))
    ax.axhline(0.0, color="0.6", linewidth=0.6, zorder=1)
    ax.set_xlabel("z")
    ax.set_xlim(zs[0], zs[-1])
    if _YLIM.get(panel):
        ax.set_ylim(*_YLIM[panel])
    ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
