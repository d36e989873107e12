"""DOT export.

Brauer graphs become undirected multigraphs (loops and parallels kept,
vertex labels ``name (m)`` with ``(1)`` suppressed, half-edge ports on the
edge labels); bound quivers become digraphs with a companion plain-text
relations listing.  Output is emitted in sorted order, so it is
byte-stable for a fixed input.  Frontier elements of windowed coverings
are drawn dashed.
"""

from __future__ import annotations

from typing import Iterable

from .brauer import BoundQuiver, BrauerGraph, Path, Relation


def _q(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_dot(graph: BrauerGraph, frontier: Iterable[str] = ()) -> str:
    lines = ["graph brauer {", "  node [shape=circle];"]
    for cycle in sorted(graph.vertices, key=min):
        key = min(cycle)
        m = graph.multiplicity.get(key, 1)
        label = key if m == 1 else f"{key} ({m})"
        lines.append(f"  {_q(key)} [label={_q(label)}];")
    for e, f in graph.edges:
        u, v = graph.incidence[e]
        lines.append(f"  {_q(u)} -- {_q(v)} [label={_q(e)}, headlabel={_q(f)}, taillabel={_q(e)}];")
    for e in sorted(frontier):
        u = graph.vertex_of[e]
        stub = f"frontier:{e}"
        lines.append(f"  {_q(stub)} [shape=point, style=dashed];")
        lines.append(f"  {_q(u)} -- {_q(stub)} [style=dashed, label={_q(e)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_path(path: Path) -> str:
    """Right-to-left display a[e_n]...a[e_1] of a stored application-order path."""
    return "".join(f"a[{name}]" for name in reversed(path))


def render_relation(relation: Relation) -> str:
    parts = []
    for i, (coeff, path) in enumerate(relation):
        magnitude = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
        if i == 0:
            sign = "-" if coeff < 0 else ""
        else:
            sign = " - " if coeff < 0 else " + "
        parts.append(f"{sign}{magnitude}{render_path(path)}")
    return "".join(parts)


def relations_text(quiver: BoundQuiver) -> str:
    lines = ["# relation generators (paths display right-to-left: a[e2]a[e1] applies e1 first)"]
    for relation in quiver.relations:
        lines.append(render_relation(relation))
    return "\n".join(lines) + "\n"


def quiver_dot(quiver: BoundQuiver, frontier: Iterable[str] = ()) -> str:
    frontier = set(frontier)
    lines = ["digraph quiver {", "  node [shape=circle];"]
    for v in sorted(quiver.vertices):
        style = ", style=dashed" if v in frontier else ""
        lines.append(f"  {_q(v)} [label={_q(v)}{style}];")
    for a in sorted(quiver.arrows, key=lambda a: a.name):
        style = ", style=dashed" if a.source in frontier or a.target in frontier else ""
        lines.append(f"  {_q(a.source)} -> {_q(a.target)} [label={_q(a.name)}{style}];")
    if quiver.relations:
        lines.append("  // relations:")
        for relation in quiver.relations:
            lines.append(f"  // {render_relation(relation)}")
    lines.append("}")
    return "\n".join(lines) + "\n"
