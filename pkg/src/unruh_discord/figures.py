"""Matplotlib renderings of sweep data, written to files next to the CSVs."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .sweep import CorrelationRecord

_PAIR_TITLES = {"AI": "A-I (accessible)", "AII": "A-II (hidden)", "III": "I-II (hidden)"}

plt.rcParams.update({
    "font.size": 10,
    "axes.labelsize": 11,
    "legend.fontsize": 9,
    "figure.figsize": (6.0, 4.0),
})


def _save(fig, path: Path) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def correlation_figure(records: Sequence[CorrelationRecord], path: Path) -> None:
    """Discord, negativity and classical correlation of one pair versus r."""
    r = [rec.r for rec in records]
    fig, ax = plt.subplots()
    ax.plot(r, [rec.quantum_discord for rec in records], "-", color="red",
            label="quantum discord")
    ax.plot(r, [rec.log_negativity for rec in records], "--", color="blue",
            label="log negativity")
    ax.plot(r, [rec.classical_correlation for rec in records], ":", color="green",
            label="classical correlation")
    ax.set_xlabel("acceleration parameter r (rad)")
    ax.set_ylabel("correlation (bits)")
    ax.set_title(_PAIR_TITLES.get(records[0].pair.value, records[0].pair.value))
    ax.grid(alpha=0.3)
    ax.legend()
    _save(fig, path)


def comparison_figure(
    records_by_pair: dict[str, Sequence[CorrelationRecord]],
    field: str,
    ylabel: str,
    path: Path,
) -> None:
    """One measure for all three pairs on common axes."""
    styles = {"AI": ("-", "black"), "AII": ("--", "red"), "III": (":", "blue")}
    fig, ax = plt.subplots()
    for pair_id, records in records_by_pair.items():
        ls, color = styles.get(pair_id, ("-", None))
        ax.plot([rec.r for rec in records], [getattr(rec, field) for rec in records],
                ls, color=color, label=_PAIR_TITLES.get(pair_id, pair_id))
    ax.set_xlabel("acceleration parameter r (rad)")
    ax.set_ylabel(ylabel)
    ax.grid(alpha=0.3)
    ax.legend()
    _save(fig, path)


def conditional_entropy_surface(
    r_values: np.ndarray, thetas: np.ndarray, surface: np.ndarray, path: Path
) -> None:
    """Heat map of the A-I measured conditional entropy over (r, theta)."""
    fig, ax = plt.subplots()
    mesh = ax.pcolormesh(r_values, thetas, surface.T, shading="auto", cmap="viridis")
    ax.axhline(math.pi / 2.0, color="white", linestyle="--", linewidth=0.8)
    ax.set_xlabel("acceleration parameter r (rad)")
    ax.set_ylabel("polar measurement angle theta (rad)")
    ax.set_title("conditional entropy after measuring A (bits)")
    fig.colorbar(mesh, ax=ax)
    _save(fig, path)
