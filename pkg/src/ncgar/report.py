"""Figure and delimited-file rendering for the report subcommand.

Writes, per system: the interval's layered diagram and the reflection
length histogram as PNG figures, plus CSV tables of the members and of
the quotient complex homology, next to the bit-stable JSON/DOT exports.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .coxeter import CoxeterSystem, Element  # noqa: E402
from .lattice import NCLattice, build_nc, nc_to_dot, nc_to_json  # noqa: E402
from .complexes import build_k  # noqa: E402


def hasse_figure(lat: NCLattice, path: Path) -> None:
    by_rank: dict[int, list[int]] = {}
    for i, r in enumerate(lat.rank_of):
        by_rank.setdefault(r, []).append(i)
    pos = {}
    for r, row in sorted(by_rank.items()):
        width = len(row)
        for k, i in enumerate(row):
            pos[i] = (k - (width - 1) / 2.0, r)
    fig, ax = plt.subplots(figsize=(max(4.0, 1.1 * max(map(len, by_rank.values()))),
                                    1.4 * (max(by_rank) + 1)))
    for i, j in lat.covers:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=0.9, zorder=1)
    labels = lat.labels()
    for i, (x, y) in pos.items():
        ax.scatter([x], [y], s=24, color="tab:blue", zorder=2)
        ax.annotate(labels[i], (x, y), textcoords="offset points",
                    xytext=(0, 7), ha="center", fontsize=8)
    ax.set_title(f"interval diagram NC({lat.system.descriptor()})")
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def length_histogram_figure(sys: CoxeterSystem, path: Path) -> None:
    hist = sys.length_histogram()
    fig, ax = plt.subplots(figsize=(4.5, 3.0))
    ax.bar(range(len(hist)), hist, color="tab:blue")
    ax.set_xlabel("reflection length")
    ax.set_ylabel("elements")
    ax.set_xticks(range(len(hist)))
    ax.set_title(f"{sys.descriptor()}: length distribution over "
                 f"{sys.order} elements")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_members_csv(lat: NCLattice, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "element", "rank"])
        for i, label in enumerate(lat.labels()):
            writer.writerow([i, label, lat.rank_of[i]])


def write_homology_csv(lat: NCLattice, path: Path) -> None:
    k = build_k(lat)
    groups = k.homology()
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["degree", "cells", "betti", "torsion"])
        for deg, (cells, g) in enumerate(zip(k.cell_counts(), groups)):
            writer.writerow([deg, cells, g.betti,
                             " ".join(str(d) for d in g.torsion)])


def write_report(sys: CoxeterSystem, gamma: Element | None,
                 outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    lat = build_nc(sys, gamma)
    desc = sys.descriptor().replace("(", "").replace(")", "")
    written = []

    def emit(name: str, producer) -> None:
        path = outdir / name
        producer(path)
        written.append(path)

    emit(f"{desc}_members.csv", lambda p: write_members_csv(lat, p))
    emit(f"{desc}_homology.csv", lambda p: write_homology_csv(lat, p))
    emit(f"{desc}_nc.json", lambda p: p.write_text(nc_to_json(lat)))
    emit(f"{desc}_nc.dot", lambda p: p.write_text(nc_to_dot(lat)))
    emit(f"{desc}_hasse.png", lambda p: hasse_figure(lat, p))
    emit(f"{desc}_lengths.png", lambda p: length_histogram_figure(sys, p))
    return written
