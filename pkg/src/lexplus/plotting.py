"""Figures for the CLI report paths, rendered headless to files."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .betti import BettiTable  # noqa: E402
from .hilbert import HilbertFunction  # noqa: E402
from .monomial import count_monomials  # noqa: E402


def _grid(table: BettiTable):
    # Macaulay-style layout: column i, row j - i
    rows = table.rows()
    if not rows:
        return [[0]], 0, 0
    imax = max(i for i, _, _ in rows)
    lo = min(j - i for i, j, _ in rows)
    hi = max(j - i for i, j, _ in rows)
    grid = [[0] * (imax + 1) for _ in range(hi - lo + 1)]
    for i, j, b in rows:
        grid[j - i - lo][i] = b
    return grid, lo, imax


def _heatmap(ax, table: BettiTable, title: str, vmax: int | None = None):
    grid, lo, imax = _grid(table)
    top = vmax or max(max(row) for row in grid) or 1
    im = ax.imshow(grid, cmap="Blues", aspect="auto", vmin=0, vmax=top)
    for r, row in enumerate(grid):
        for i, b in enumerate(row):
            if b:
                ax.text(i, r, str(b), ha="center", va="center", fontsize=9, color="white" if b > top / 2 else "black")
    ax.set_xticks(range(imax + 1))
    ax.set_yticks(range(len(grid)))
    ax.set_yticklabels([str(lo + r) for r in range(len(grid))])
    ax.set_xlabel("homological degree i")
    ax.set_ylabel("j - i")
    ax.set_title(title)
    return im


def plot_betti(table: BettiTable, path: str, title: str = "Betti table") -> None:
    fig, ax = plt.subplots(figsize=(5, 4))
    _heatmap(ax, table, title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_betti_comparison(lex_table: BettiTable, table: BettiTable, path: str) -> None:
    """Side by side heatmaps of b(L+P) and b(I) on a shared color scale."""
    vmax = max([b for _, _, b in lex_table.rows()] + [b for _, _, b in table.rows()] + [1])
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    _heatmap(axes[0], lex_table, "lex-plus-P", vmax)
    _heatmap(axes[1], table, "input ideal", vmax)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_hilbert(hf: HilbertFunction, path: str) -> None:
    ds = list(range(hf.cap + 1))
    total = [count_monomials(hf.n, d) for d in ds]
    quot = [s - v for s, v in zip(total, hf.values)]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(ds, hf.values, label="dim I_d")
    ax.bar(ds, quot, bottom=hf.values, label="dim (S/I)_d", alpha=0.6)
    ax.set_xlabel("degree d")
    ax.set_ylabel("dimension")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_walk(trace_json: dict, path: str) -> None:
    """Generator count along the walk, marking the steps that changed the ideal."""
    steps = trace_json["steps"]
    xs = list(range(len(steps) + 1))
    ys = [len(trace_json["initial"])] + [len(s["after"]) for s in steps]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, marker="o", color="0.4")
    changed = [k + 1 for k, s in enumerate(steps) if s["before"] != s["after"]]
    ax.plot(changed, [ys[k] for k in changed], "o", color="tab:red", label="changing step")
    ax.set_xlabel("step")
    ax.set_ylabel("minimal generators")
    if changed:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_fuzz(report: dict, path: str) -> None:
    steps = [r.get("walk_steps") for r in report["results"] if r.get("walk_steps") is not None]
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    axes[0].bar(["pass", "fail"], [report["passed"], report["failed"]], color=["tab:green", "tab:red"])
    axes[0].set_title(f"{report['samples']} samples")
    if steps:
        ks = range(max(steps) + 1)
        axes[1].bar(ks, [steps.count(k) for k in ks], color="tab:blue")
        axes[1].set_xticks(list(ks))
    axes[1].set_xlabel("walk steps")
    axes[1].set_ylabel("samples")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
