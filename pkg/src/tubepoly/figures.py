"""Deterministic matplotlib renderings for CLI reports.

Every helper takes precomputed data plus a target path, renders a single PNG
with fixed size/DPI on the Agg backend, and closes the figure.  No RNG, no
timestamps in the figure content, so identical data yields identical files.
"""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_FIGSIZE = (6.4, 4.2)
_DPI = 120


def _finish(fig, path: Path) -> None:
    fig.tight_layout()
    fig.savefig(path, format="png", dpi=_DPI)
    plt.close(fig)


def save_root_scatter(roots: Sequence[complex], path: Path, title: str) -> None:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    xs = [complex(r).real for r in roots]
    ys = [complex(r).imag for r in roots]
    ax.axhline(0.0, color="0.8", lw=0.8, zorder=0)
    ax.axvline(0.0, color="0.8", lw=0.8, zorder=0)
    ax.scatter(xs, ys, s=22, color="tab:blue", marker="x")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    _finish(fig, path)


def save_curve(
    ts: Sequence[float], ys: Sequence[float], path: Path, title: str, ylabel: str = "value"
) -> None:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.plot(list(ts), list(ys), color="tab:blue")
    ax.axhline(0.0, color="0.8", lw=0.8, zorder=0)
    ax.set_xlabel("t")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    _finish(fig, path)


def save_trend(
    degrees: Sequence[int], counts: Sequence[int], path: Path, title: str
) -> None:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.plot(list(degrees), list(counts), marker="o", color="tab:red")
    ax.set_xlabel("truncation degree")
    ax.set_ylabel("violating roots")
    ax.set_ylim(bottom=-0.5)
    ax.set_title(title)
    _finish(fig, path)


def save_mc_comparison(
    ts: Sequence[float],
    estimates: Sequence[float],
    std_errors: Sequence[float],
    predicted: Sequence[float],
    path: Path,
    title: str,
) -> None:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.errorbar(
        list(ts),
        list(estimates),
        yerr=[3 * s for s in std_errors],
        fmt="o",
        color="tab:blue",
        capsize=3,
        label="MC estimate (3 SE)",
    )
    ax.plot(list(ts), list(predicted), color="tab:orange", label="polynomial")
    ax.set_xlabel("t")
    ax.set_ylabel("tube volume")
    ax.legend()
    ax.set_title(title)
    _finish(fig, path)


def save_bars(names: Sequence[str], values: Sequence[float], path: Path, title: str) -> None:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    pos = range(len(names))
    colors = ["tab:green" if v > 0 else "tab:red" for v in values]
    ax.bar(pos, list(values), color=colors)
    ax.axhline(0.0, color="0.4", lw=0.8)
    ax.set_xticks(list(pos))
    ax.set_xticklabels(list(names), rotation=45, ha="right", fontsize=7)
    ax.set_title(title)
    _finish(fig, path)


def save_sequence(values: Sequence[float], path: Path, title: str, ylabel: str) -> None:
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.plot(range(len(values)), list(values), marker="o", color="tab:blue")
    ax.set_xlabel("k")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    _finish(fig, path)
