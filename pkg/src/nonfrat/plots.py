"""Matplotlib rendering of prime graphs and scan summaries.

Figures are written straight to files (Agg backend), so these helpers work
in headless batch runs alongside the JSON/DOT output.
"""

from __future__ import annotations

import math


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _draw_graph(ax, graph, title: str) -> None:
    vertices = sorted(graph.vertices)
    n = len(vertices)
    pos = {}
    for i, v in enumerate(vertices):
        angle = math.pi / 2 + 2 * math.pi * i / max(n, 1)
        pos[v] = (math.cos(angle), math.sin(angle))
    for p, q in graph.edge_list():
        (x1, y1), (x2, y2) = pos[p], pos[q]
        ax.plot([x1, x2], [y1, y2], color="steelblue", linewidth=1.8, zorder=1)
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=500, color="white", edgecolor="black", zorder=2)
        ax.text(x, y, str(v), ha="center", va="center", fontsize=11, zorder=3)
    ax.set_title(title, fontsize=10)
    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.4)
    ax.set_aspect("equal")
    ax.axis("off")


def save_prime_graph_figure(panels, path: str) -> None:
    """Render labelled prime graphs side by side.

    panels: sequence of (title, PrimeGraph) pairs.
    """
    plt = _pyplot()
    panels = list(panels)
    fig, axes = plt.subplots(1, len(panels), figsize=(3.2 * len(panels), 3.4))
    if len(panels) == 1:
        axes = [axes]
    for ax, (title, graph) in zip(axes, panels):
        _draw_graph(ax, graph, title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_scan_figure(findings, path: str) -> None:
    """Scatter of group order against prime pairs, discoveries highlighted."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    ordinary = [f for f in findings if not f.counterexample]
    discoveries = [f for f in findings if f.counterexample]
    if ordinary:
        ax.scatter(
            [f.group_order for f in ordinary],
            [f.p * f.q for f in ordinary],
            s=18,
            color="steelblue",
            alpha=0.6,
            label="witness found",
        )
    if discoveries:
        ax.scatter(
            [f.group_order for f in discoveries],
            [f.p * f.q for f in discoveries],
            s=48,
            color="crimson",
            marker="x",
            label="no exact-support witness",
        )
    ax.set_xlabel("group order")
    ax.set_ylabel("p * q")
    ax.set_title(f"pair scan: {len(findings)} findings, {len(discoveries)} discoveries")
    if findings:
        ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


__all__ = ["save_prime_graph_figure", "save_scan_figure"]
