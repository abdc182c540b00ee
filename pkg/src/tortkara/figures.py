"""Figure rendering for the report paths: sign-matrix grids, squared
length charts before/after lattice reduction, and multiplicity tables.
Every figure is accompanied by a tab-delimited file with the same data
so the numbers stay greppable."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import expansion, ternary


def _write_tsv(path: str, header: list[str], rows) -> None:
    with open(path, "w") as fh:
        fh.write("\t".join(header) + "\n")
        for row in rows:
            fh.write("\t".join(str(x) for x in row) + "\n")


def _sign_grid(ax, element, title: str) -> np.ndarray:
    signs = np.array([1 if c == "+" else -1 for c in element.sign_string()])
    grid = signs.reshape(5, 24)
    ax.imshow(grid, cmap="RdBu", vmin=-1.5, vmax=1.5, aspect="auto")
    ax.set_title(title, fontsize=9)
    ax.set_xticks([])
    ax.set_yticks(range(5))
    return grid


def render_arity5(report, outdir: str) -> list[str]:
    os.makedirs(outdir, exist_ok=True)
    paths = []

    # the two base expansions as 5 x 24 sign grids
    fig, axes = plt.subplots(2, 1, figsize=(8, 4))
    grids = []
    for ax, mono in zip(axes, [((0, 1, 2), 3, 4), (0, 1, (2, 3, 4))]):
        grids.append(_sign_grid(ax, expansion.expand(mono), ternary.format_ternary(mono)))
    fig.tight_layout()
    path = os.path.join(outdir, "arity5_sign_matrices.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    _write_tsv(
        os.path.join(outdir, "arity5_sign_matrices.tsv"),
        ["monomial"] + [f"c{j}" for j in range(24)],
        [
            [name] + list(row)
            for name, grid in zip(["[[a,b,c],d,e]", "[a,b,[c,d,e]]"], grids)
            for row in grid
        ],
    )
    paths.append(os.path.join(outdir, "arity5_sign_matrices.tsv"))

    # squared lengths before and after reduction
    fig, ax = plt.subplots(figsize=(7, 4))
    series = [("integer nullspace basis", report.sq_lengths_hnf)] + [
        (f"LLL delta={k}", v) for k, v in report.sq_lengths_lll.items()
    ]
    width = 0.8 / len(series)
    all_lengths = sorted({l for _, d in series for l in d})
    xs = np.arange(len(all_lengths))
    for i, (label, dist) in enumerate(series):
        ax.bar(xs + i * width, [dist.get(l, 0) for l in all_lengths], width, label=label)
    ax.set_xticks(xs + width, [str(l) for l in all_lengths], rotation=90, fontsize=7)
    ax.set_xlabel("squared length")
    ax.set_ylabel("count")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = os.path.join(outdir, "arity5_squared_lengths.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    _write_tsv(
        os.path.join(outdir, "arity5_squared_lengths.tsv"),
        ["basis", "squared_length", "count"],
        [
            (label, l, dist.get(l, 0))
            for label, dist in series
            for l in sorted(dist)
        ],
    )
    paths.append(os.path.join(outdir, "arity5_squared_lengths.tsv"))
    return paths


def render_arity7(report, outdir: str) -> list[str]:
    os.makedirs(outdir, exist_ok=True)
    paths = []
    rows = list(report.tables)
    data = np.array([report.tables[k] for k in rows])

    fig, ax = plt.subplots(figsize=(10, 3.2))
    ax.imshow(np.log1p(data), cmap="viridis", aspect="auto")
    for i in range(data.shape[0]):
        for j in range(data.shape[1]):
            ax.text(j, i, str(data[i, j]), ha="center", va="center", color="w", fontsize=6)
    ax.set_xticks(range(len(report.table_partitions)), report.table_partitions, fontsize=7)
    ax.set_yticks(range(len(rows)), rows, fontsize=8)
    ax.set_title("stacked ranks per irreducible (arity 7)", fontsize=10)
    fig.tight_layout()
    path = os.path.join(outdir, "arity7_multiplicity_tables.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    _write_tsv(
        os.path.join(outdir, "arity7_multiplicity_tables.tsv"),
        ["row"] + report.table_partitions,
        [[k] + report.tables[k] for k in rows]
        + [[f"mult_{k}"] + v for k, v in report.multiplicities.items()],
    )
    paths.append(os.path.join(outdir, "arity7_multiplicity_tables.tsv"))

    fig, ax = plt.subplots(figsize=(6, 3.5))
    ranks = [report.dim_con] + [f["rank"] for f in report.filtration]
    labels = ["Con(7)"] + [f"+{f['terms']}-term" for f in report.filtration]
    ax.plot(range(len(ranks)), ranks, marker="o")
    for x, (y, lab) in enumerate(zip(ranks, labels)):
        ax.annotate(f"{lab}\n{y}", (x, y), textcoords="offset points", xytext=(4, -12), fontsize=7)
    ax.set_ylabel("cumulative rank")
    ax.set_xticks([])
    ax.set_title("filtration of the relation module (arity 7)", fontsize=10)
    fig.tight_layout()
    path = os.path.join(outdir, "arity7_filtration.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    _write_tsv(
        os.path.join(outdir, "arity7_filtration.tsv"),
        ["generator_terms", "cumulative_rank"],
        [("", report.dim_con)] + [(f["terms"], f["rank"]) for f in report.filtration],
    )
    paths.append(os.path.join(outdir, "arity7_filtration.tsv"))
    return paths
