"""Benchmark reporting: width-versus-bound table plus rendered figures."""

from __future__ import annotations

import csv
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .graphs import Graph
from .treedecomp import heuristic_td
from .treepartition import AlphaParams, bound_constants, tree_partition_with_stats

CSV_FIELDS = [
    "graph",
    "n",
    "m",
    "max_degree",
    "k",
    "d",
    "alpha",
    "alpha_value",
    "width",
    "width_bound",
    "tree_max_degree",
    "degree_bound",
    "case1",
    "case2",
    "case3",
    "case4",
]


def bench_rows(
    corpus: Sequence[tuple[str, Graph]],
    alphas: Sequence[tuple[str, Fraction]],
    strategy: str = "min-degree",
) -> list[dict]:
    rows: list[dict] = []
    for name, g in corpus:
        td = heuristic_td(g, strategy)
        k = td.width + 1
        d = max(g.max_degree(), 1)
        for alpha_name, alpha in alphas:
            params = AlphaParams(alpha=alpha, k=k, d=d)
            bounds = bound_constants(params)
            _, stats = tree_partition_with_stats(g, td, params)
            rows.append(
                {
                    "graph": name,
                    "n": g.n,
                    "m": g.m,
                    "max_degree": g.max_degree(),
                    "k": k,
                    "d": d,
                    "alpha": alpha_name,
                    "alpha_value": str(alpha),
                    "width": stats["width"],
                    "width_bound": float(bounds.width_bound),
                    "tree_max_degree": stats["tree_max_degree"],
                    "degree_bound": float(bounds.degree_bound),
                    "case1": stats["cases_taken"]["case1"],
                    "case2": stats["cases_taken"]["case2"],
                    "case3": stats["cases_taken"]["case3"],
                    "case4": stats["cases_taken"]["case4"],
                }
            )
    return rows


def write_csv(rows: Sequence[dict], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        writer.writerows(rows)


def render_figures(rows: Sequence[dict], out_dir: Path) -> list[Path]:
    """Scatter achieved width/degree against their bounds, one series per alpha."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    by_alpha: dict[str, list[dict]] = {}
    for row in rows:
        by_alpha.setdefault(row["alpha"], []).append(row)
    paths: list[Path] = []

    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    for alpha_name, sub in sorted(by_alpha.items()):
        ax.scatter(
            [r["width_bound"] for r in sub],
            [r["width"] for r in sub],
            s=12,
            alpha=0.6,
            label=f"alpha={alpha_name}",
        )
    lims = [1, max(max(r["width_bound"] for r in rows), max(r["width"] for r in rows))]
    ax.plot(lims, lims, color="gray", linewidth=0.8, linestyle="--", label="y = x")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("guaranteed width bound")
    ax.set_ylabel("achieved width")
    ax.set_title("Partition width vs. bound")
    ax.legend()
    fig.tight_layout()
    p = out_dir / "width_vs_bound.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    for alpha_name, sub in sorted(by_alpha.items()):
        ax.scatter(
            [r["degree_bound"] for r in sub],
            [r["tree_max_degree"] for r in sub],
            s=12,
            alpha=0.6,
            label=f"alpha={alpha_name}",
        )
    lims = [
        1,
        max(max(r["degree_bound"] for r in rows), max(r["tree_max_degree"] for r in rows), 2),
    ]
    ax.plot(lims, lims, color="gray", linewidth=0.8, linestyle="--", label="y = x")
    ax.set_xlabel("guaranteed tree-degree bound")
    ax.set_ylabel("achieved tree degree")
    ax.set_title("Indexing-tree degree vs. bound")
    ax.legend()
    fig.tight_layout()
    p = out_dir / "degree_vs_bound.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    paths.append(p)
    return paths
