"""Figures written next to the JSON reports of the CLI."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .complex import SymmetricComplex  # noqa: E402
from .oracle import OracleReport  # noqa: E402
from .pathfinder import PathTrace  # noqa: E402

TYPE_COLORS = {1: "tab:blue", 2: "tab:orange", 3: "tab:green"}


def _finish(fig, path: str | Path) -> Path:
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_oracle_report(report: OracleReport, path: str | Path) -> Path:
    """Path lengths of the decomposition and node counts by type and carrier dimension."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))

    lengths = [len(p) for p in report.paths]
    h0_path = report.path_from(report.h0)
    neg_path = report.path_from(report.neg_h0)
    colors = []
    for p in report.paths:
        if h0_path is not None and (p == h0_path or p == h0_path[::-1]):
            colors.append("tab:red")
        elif neg_path is not None and (p == neg_path or p == neg_path[::-1]):
            colors.append("tab:purple")
        else:
            colors.append("0.6")
    ax1.bar(range(len(lengths)), lengths, color=colors)
    ax1.set_xlabel("path index")
    ax1.set_ylabel("nodes on path")
    ax1.set_title(f"{len(report.paths)} paths, {report.endpoint_count} endpoints")

    counts = Counter((len(s) - 1, t) for s, t in report.nodes.items())
    dims = sorted({d for d, _ in counts})
    width = 0.25
    for j, t in enumerate((1, 2, 3)):
        ax2.bar(
            [d + (j - 1) * width for d in dims],
            [counts.get((d, t), 0) for d in dims],
            width,
            color=TYPE_COLORS[t],
            label=f"type {t}",
        )
    ax2.set_xticks(dims)
    ax2.set_xlabel("simplex dimension")
    ax2.set_ylabel("nodes")
    ax2.set_title(f"{report.mode.value} mode: ({report.positive_count}, {report.negative_count}) alternating")
    ax2.legend(frameon=False)
    return _finish(fig, path)


def plot_trace_s2(complex_: SymmetricComplex, trace: PathTrace, path: str | Path) -> Path:
    """Draw a walk on a triangulated S^2, one marker per node at its normalized centroid."""
    if complex_.coords is None or complex_.n != 2:
        raise ValueError("trace plots need a 2-sphere with coordinates")
    fig = plt.figure(figsize=(6, 6))
    ax = fig.add_subplot(projection="3d")
    xyz = complex_.coords
    for u, w in complex_.edges():
        ax.plot(*zip(xyz[u], xyz[w]), color="0.8", lw=0.6)
    if trace.nodes:
        pts = np.array([xyz[list(node.simplex)].mean(axis=0) for node in trace.nodes])
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        ax.plot(*pts.T, color="tab:red", lw=1.5)
        for node, p in zip(trace.nodes, pts):
            ax.scatter(*p, color=TYPE_COLORS[node.node_type], s=18)
    ax.set_box_aspect((1, 1, 1))
    ax.set_axis_off()
    ax.set_title(f"walk of {len(trace.nodes)} nodes, {trace.termination.value}")
    return _finish(fig, path)


def plot_borsuk_sweep(witnesses, path: str | Path) -> Path:
    """Residual against both a-priori bounds across refinement levels."""
    fig, ax = plt.subplots(figsize=(5, 4))
    ks = [w.refinements for w in witnesses]
    ax.semilogy(ks, [w.residual for w in witnesses], "o-", label="residual")
    if all(w.bound is not None for w in witnesses):
        ax.semilogy(ks, [w.bound for w in witnesses], "s--", label="edge bound")
        ax.semilogy(ks, [w.mesh_bound for w in witnesses], "^:", label="mesh bound")
    ax.set_xticks(ks)
    ax.set_xlabel("barycentric refinements")
    ax.set_ylabel(r"$\|f(u)\|_\infty$")
    ax.legend(frameon=False)
    return _finish(fig, path)
