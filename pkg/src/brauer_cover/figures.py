"""Optional matplotlib rendering of graphs and quivers to image files.

Vertices sit on a circle in key order, parallel edges fan out with
distinct curvatures, loops are drawn as small circles outside the ring.
matplotlib is imported lazily so the rest of the package has no hard
dependency on it.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterable

from .brauer import BoundQuiver, BrauerGraph


def _layout(names):
    names = sorted(names)
    n = max(len(names), 1)
    pos = {}
    for i, name in enumerate(names):
        angle = 2 * math.pi * i / n + math.pi / 2
        pos[name] = (math.cos(angle), math.sin(angle))
    return pos


def _setup_axes():
    import matplotlib

    matplotlib.use("Agg", force=False)
    from matplotlib import pyplot

    fig, ax = pyplot.subplots(figsize=(6, 6))
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_xlim(-1.6, 1.6)
    ax.set_ylim(-1.6, 1.6)
    return fig, ax, pyplot


def _draw_loop(ax, x, y, label, index):
    from matplotlib.patches import Circle

    radius = 0.18 + 0.1 * index
    norm = math.hypot(x, y) or 1.0
    cx, cy = x * (1 + radius / norm), y * (1 + radius / norm)
    ax.add_patch(Circle((cx, cy), radius, fill=False, color="tab:blue"))
    ax.annotate(label, (cx, cy + radius), ha="center", fontsize=8)


def render_graph(graph: BrauerGraph, path: str, frontier: Iterable[str] = ()) -> None:
    """Draw the multigraph and save it to ``path`` (format by extension)."""
    fig, ax, pyplot = _setup_axes()
    from matplotlib.patches import FancyArrowPatch

    keys = [min(c) for c in graph.vertices]
    pos = _layout(keys)
    parallel_index: dict = defaultdict(int)
    loop_index: dict = defaultdict(int)
    for e, f in graph.edges:
        u, v = graph.incidence[e]
        if u == v:
            _draw_loop(ax, *pos[u], e, loop_index[u])
            loop_index[u] += 1
            continue
        k = parallel_index[frozenset((u, v))]
        parallel_index[frozenset((u, v))] += 1
        rad = 0.0 if k == 0 else (0.25 + 0.12 * (k - 1)) * (1 if k % 2 else -1)
        arrow = FancyArrowPatch(
            pos[u], pos[v], connectionstyle=f"arc3,rad={rad}", arrowstyle="-", color="tab:blue"
        )
        ax.add_patch(arrow)
        mx = (pos[u][0] + pos[v][0]) / 2 - rad * (pos[v][1] - pos[u][1]) / 2
        my = (pos[u][1] + pos[v][1]) / 2 + rad * (pos[v][0] - pos[u][0]) / 2
        ax.annotate(e, (mx, my), ha="center", fontsize=8)
    frontier = sorted(frontier)
    for i, e in enumerate(frontier):
        u = graph.vertex_of[e]
        x, y = pos[u]
        ax.plot([x, x * 1.25], [y, y * 1.25], linestyle="--", color="tab:gray")
        ax.annotate(e, (x * 1.3, y * 1.3), ha="center", fontsize=7, color="tab:gray")
    for key in keys:
        x, y = pos[key]
        ax.plot([x], [y], marker="o", color="black")
        m = graph.multiplicity.get(key, 1)
        label = key if m == 1 else f"{key} ({m})"
        ax.annotate(label, (x, y - 0.12), ha="center", fontsize=9)
    fig.savefig(path, bbox_inches="tight")
    pyplot.close(fig)


def render_quiver(quiver: BoundQuiver, path: str, frontier: Iterable[str] = ()) -> None:
    """Draw the quiver digraph and save it to ``path``."""
    fig, ax, pyplot = _setup_axes()
    from matplotlib.patches import FancyArrowPatch

    pos = _layout(quiver.vertices)
    frontier = set(frontier)
    parallel_index: dict = defaultdict(int)
    for a in sorted(quiver.arrows, key=lambda a: a.name):
        if a.source == a.target:
            _draw_loop(ax, *pos[a.source], a.name, parallel_index[(a.source, a.source)])
            parallel_index[(a.source, a.source)] += 1
            continue
        k = parallel_index[(a.source, a.target)]
        parallel_index[(a.source, a.target)] += 1
        rad = 0.2 + 0.12 * k
        style = "--" if a.source in frontier or a.target in frontier else "-"
        arrow = FancyArrowPatch(
            pos[a.source],
            pos[a.target],
            connectionstyle=f"arc3,rad={rad}",
            arrowstyle="-|>",
            mutation_scale=12,
            linestyle=style,
            color="tab:red" if style == "--" else "tab:blue",
        )
        ax.add_patch(arrow)
        mx = (pos[a.source][0] + pos[a.target][0]) / 2 - rad * (pos[a.target][1] - pos[a.source][1]) / 2
        my = (pos[a.source][1] + pos[a.target][1]) / 2 + rad * (pos[a.target][0] - pos[a.source][0]) / 2
        ax.annotate(a.name, (mx, my), ha="center", fontsize=7)
    for v in quiver.vertices:
        x, y = pos[v]
        color = "tab:gray" if v in frontier else "black"
        ax.plot([x], [y], marker="o", color=color)
        ax.annotate(v, (x, y - 0.12), ha="center", fontsize=8, color=color)
    fig.savefig(path, bbox_inches="tight")
    pyplot.close(fig)
