"""Constructive deletion of multiplicity, loops, multiple edges and cycles.

Each procedure picks a group and an admissible weight whose smash product
removes one structural feature from the Brauer graph:

* multiplicity: one cyclic group of order lcm(m_i), weighting one
  representative half edge per vertex with m > 1;
* loops: the cyclic group of order 2, weighting both half edges of every
  loop;
* multiple edges: a product of cyclic groups of the vertex valencies,
  weighting whole vertex orbits (general form), or a single cyclic group
  chosen from a 2-coloring when the condensed multi-edge graph is a forest;
* cycles: one infinite cyclic factor per cycle vertex, weighted so that
  every vertex cycle has trivial total weight.

Every plan is verified admissible at construction, and (windows aside)
its post-condition is checked against the actual smash product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .brauer import BrauerPermutation
from .errors import DeltaNotForestError, HasLoopsError
from .groups import INF, GroupSpec
from .smash import smash_brauer
from .weights import GWeight, is_admissible


@dataclass(frozen=True)
class DeletionPlan:
    """A (group, admissible weight) pair with its derivation trace."""

    kind: str
    group: GroupSpec
    weight: GWeight
    representatives: tuple
    notes: str

    def as_doc(self) -> dict:
        from .jsonio import group_to_doc, weight_to_doc

        return {
            "kind": self.kind,
            "group": group_to_doc(self.group),
            "weight": weight_to_doc(self.weight),
            "representatives": [list(r) for r in self.representatives],
            "notes": self.notes,
        }


def _finish(kind: str, bp: BrauerPermutation, plan: DeletionPlan) -> DeletionPlan:
    ok, witness = is_admissible(bp, plan.weight)
    if not ok:
        raise AssertionError(f"{kind} produced an inadmissible weight at {witness!r}")
    return plan


def _trivial_plan(kind: str, bp: BrauerPermutation, note: str, group: Optional[GroupSpec] = None) -> DeletionPlan:
    group = group or GroupSpec.trivial()
    weight = GWeight.total(group, bp.half_edges)
    return _finish(kind, bp, DeletionPlan(kind, group, weight, (), note))


def delete_multiplicity(bp: BrauerPermutation, check: bool = True) -> DeletionPlan:
    """Cyclic group of order lcm(m_i); W(e_i) = a^{m/m_i} on one
    representative per vertex with multiplicity > 1."""
    targets = [key for key in sorted(bp.multiplicity) if bp.multiplicity[key] > 1]
    if not targets:
        return _trivial_plan("multiplicity", bp, "multiplicity already trivial; nothing to delete")
    orders = [bp.multiplicity[key] for key in targets]
    m = math.lcm(*orders)
    group = GroupSpec.cyclic(m)
    values = {}
    lines = [f"vertices with multiplicity > 1: {len(targets)}; m = lcm({orders}) = {m}; G = C{m}"]
    reps = []
    for key, mi in zip(targets, orders):
        exponent = m // mi
        values[key] = group.parse_word(f"a^{exponent}")
        reps.append((key, f"vertex <{key}> with m = {mi}; W = a^{exponent}"))
        lines.append(f"  W({key}) = a^{exponent}  (order {mi})")
    weight = GWeight.total(group, bp.half_edges, values)
    plan = _finish(
        "multiplicity", bp, DeletionPlan("multiplicity", group, weight, tuple(reps), "\n".join(lines))
    )
    if check:
        cov = smash_brauer(bp, plan.weight)
        if any(v != 1 for v in cov.multiplicity.values()):
            raise AssertionError("covering multiplicity is not trivial")
    return plan


def _loop_crossings(bp: BrauerPermutation, loops: list) -> dict:
    """For each loop (by edge key), the loops whose chords cross it.

    Two loops at the same vertex cross when each arc cut out by the first
    loop's half edges contains exactly one half edge of the second.
    """
    crossings: dict[str, set] = {key: set() for key in loops}
    by_vertex: dict[str, list] = {}
    for key in loops:
        by_vertex.setdefault(bp.vertex_key(key), []).append(key)
    for vertex, local in by_vertex.items():
        cycle = bp.sigma_orbit(vertex)
        pos = {e: i for i, e in enumerate(cycle)}
        for i, first in enumerate(local):
            lo, hi = sorted((pos[first], pos[bp.tau[first]]))
            for second in local[i + 1 :]:
                inside = sum(1 for e in (second, bp.tau[second]) if lo < pos[e] < hi)
                if inside == 1:
                    crossings[first].add(second)
                    crossings[second].add(first)
    return crossings


def delete_loops(bp: BrauerPermutation, check: bool = True) -> DeletionPlan:
    """Weight both half edges of every loop.

    A loop survives the covering exactly when its sigma-segment carries
    trivial total weight, and that weight is (own generator) + (sum of the
    generators of crossing loops) over F2.  So the single generator of C2
    works whenever every loop crosses an even number of others; otherwise
    loops are greedily colored so that crossing loops never share a
    generator, one C2 factor per color.
    """
    loops = [
        bp.edge_key(e)
        for e in sorted(bp.half_edges)
        if bp.vertex_key(e) == bp.vertex_key(bp.tau[e]) and e == bp.edge_key(e)
    ]
    if not loops:
        return _trivial_plan(
            "loops", bp, "no loops; identity weight on C2 doubles the graph", GroupSpec.cyclic(2)
        )
    crossings = _loop_crossings(bp, loops)
    if all(len(crossings[key]) % 2 == 0 for key in loops):
        color = {key: 0 for key in loops}
        colors = 1
    else:
        color = {}
        for key in loops:
            taken = {color[other] for other in crossings[key] if other in color}
            color[key] = min(c for c in range(len(loops) + 1) if c not in taken)
        colors = max(color.values()) + 1
    if colors == 1:
        group = GroupSpec.cyclic(2)
        generators = {key: group.parse_word("a") for key in loops}
        lines = [f"loops: {loops}; G = C2"]
    else:
        group = GroupSpec.abelian([(f"a{c + 1}", 2) for c in range(colors)])
        generators = {key: group.parse_word(f"a{color[key] + 1}") for key in loops}
        lines = [
            f"loops: {loops}; crossing loops get distinct generators ({colors} colors)",
            f"G = C2^{colors}",
        ]
    values = {}
    reps = []
    for key in loops:
        gen = generators[key]
        values[key] = gen
        values[bp.tau[key]] = gen
        word = group.format_word(gen)
        reps.append((key, f"loop <{key},{bp.tau[key]}>; W = {word} on both half edges"))
        lines.append(f"  W({key}) = W({bp.tau[key]}) = {word}")
    weight = GWeight.total(group, bp.half_edges, values)
    plan = _finish("loops", bp, DeletionPlan("loops", group, weight, tuple(reps), "\n".join(lines)))
    if check:
        cov = smash_brauer(bp, plan.weight)
        if cov.graph().classify().has_loops:
            raise AssertionError("covering still has loops")
    return plan


def _multi_edge_vertices(bp: BrauerPermutation) -> list[str]:
    """Vertex keys incident to at least one pair of parallel (non-loop) edges."""
    graph = bp.graph()
    out = set()
    for pair, keys in graph.parallel_classes().items():
        if len(keys) > 1:
            out.update(pair)
    return sorted(out)


def delete_multiple_edges(bp: BrauerPermutation, check: bool = True) -> DeletionPlan:
    """General form: one cyclic factor C_{n_i} per vertex touching multiple
    edges, weight a_i constant on that whole vertex orbit."""
    if bp.graph().classify().has_loops:
        raise HasLoopsError("deletion of multiple edges requires a loop-free Brauer graph")
    targets = _multi_edge_vertices(bp)
    if not targets:
        return _trivial_plan("multiedges", bp, "no multiple edges; nothing to delete")
    factors = []
    reps = []
    lines = ["vertices with multiple edges: " + ", ".join(targets)]
    for i, key in enumerate(targets):
        name = f"a{i + 1}"
        factors.append((name, bp.n(key)))
        reps.append((key, f"vertex <{key}> with n = {bp.n(key)}; W = {name} on the whole orbit"))
        lines.append(f"  factor C{bp.n(key)} = <{name}>; W = {name} on orbit of {key}")
    group = GroupSpec.abelian(factors)
    values = {}
    for (name, _), key in zip(factors, targets):
        gen = group.parse_word(name)
        for e in bp.sigma_orbit(key):
            values[e] = gen
    weight = GWeight.total(group, bp.half_edges, values)
    plan = _finish(
        "multiedges", bp, DeletionPlan("multiedges", group, weight, tuple(reps), "\n".join(lines))
    )
    if check:
        flags = smash_brauer(bp, plan.weight).graph().classify()
        if flags.has_loops or flags.has_multiple_edges:
            raise AssertionError("covering is not simple")
    return plan


def _delta_components(bp: BrauerPermutation, targets: list[str]):
    """The condensed multi-edge graph Delta and a 2-coloring per component.

    Returns (adjacency, components as sorted vertex lists, color map) and
    raises DeltaNotForestError with an offending cycle when Delta has one.
    """
    graph = bp.graph()
    adj: dict[str, set] = {v: set() for v in targets}
    for pair, keys in graph.parallel_classes().items():
        if len(keys) > 1:
            u, v = sorted(pair)
            adj[u].add(v)
            adj[v].add(u)
    color: dict[str, int] = {}
    parent: dict[str, Optional[str]] = {}
    components = []
    for root in targets:
        if root in color:
            continue
        component = []
        color[root] = 0
        parent[root] = None
        stack = [root]
        while stack:
            u = stack.pop()
            component.append(u)
            for w in sorted(adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    stack.append(w)
                elif w != parent[u]:
                    cycle = _extract_cycle(parent, u, w)
                    raise DeltaNotForestError(
                        "condensed multi-edge graph Delta contains a cycle", witness=cycle
                    )
        components.append(sorted(component))
    return adj, components, color


def _extract_cycle(parent, u, w) -> list[str]:
    up = []
    cur = u
    while cur is not None:
        up.append(cur)
        cur = parent.get(cur)
    wp = []
    cur = w
    while cur is not None:
        wp.append(cur)
        cur = parent.get(cur)
    common = next(x for x in up if x in set(wp))
    cycle = up[: up.index(common) + 1] + list(reversed(wp[: wp.index(common)]))
    return cycle


def delete_multiple_edges_tree(bp: BrauerPermutation, check: bool = True) -> DeletionPlan:
    """Forest form: 2-color each Delta component, take representatives from
    the color class away from the least vertex, and use one cyclic group of
    order lcm(n_i) with W = a^{n/n_i} on those whole orbits."""
    if bp.graph().classify().has_loops:
        raise HasLoopsError("deletion of multiple edges requires a loop-free Brauer graph")
    targets = _multi_edge_vertices(bp)
    if not targets:
        return _trivial_plan("multiedges-tree", bp, "no multiple edges; nothing to delete")
    _, components, color = _delta_components(bp, targets)
    chosen = []
    for component in components:
        anchor_color = color[min(component)]
        chosen.extend(v for v in component if color[v] != anchor_color)
    chosen.sort()
    orders = [bp.n(key) for key in chosen]
    n = math.lcm(*orders)
    group = GroupSpec.cyclic(n)
    lines = [
        "Delta components: " + "; ".join(",".join(c) for c in components),
        f"color class V' = {chosen}; n = lcm({orders}) = {n}; G = C{n}",
    ]
    if len(components) > 1:
        lines.append("warning: Delta is a forest (several components); coloring applied per component")
    values = {}
    reps = []
    for key, ni in zip(chosen, orders):
        gen = group.parse_word(f"a^{n // ni}")
        for e in bp.sigma_orbit(key):
            values[e] = gen
        reps.append((key, f"vertex <{key}> in V' with n = {ni}; W = a^{n // ni} on the whole orbit"))
        lines.append(f"  W = a^{n // ni} on orbit of {key}")
    weight = GWeight.total(group, bp.half_edges, values)
    plan = _finish(
        "multiedges-tree",
        bp,
        DeletionPlan("multiedges-tree", group, weight, tuple(reps), "\n".join(lines)),
    )
    if check:
        flags = smash_brauer(bp, plan.weight).graph().classify()
        if flags.has_loops or flags.has_multiple_edges:
            raise AssertionError("covering is not simple")
    return plan


def delete_cycles(bp: BrauerPermutation, check: bool = True, check_depth: int = 2) -> DeletionPlan:
    """One infinite cyclic factor per cycle vertex; along the vertex cycle
    the weight is a_i on the first n_i - 1 half edges and a_i^{-n_i+1} on
    the last, so each cycle has total weight 1."""
    cycle_vertices = sorted(bp.graph().classify().cycle_vertices)
    if not cycle_vertices:
        return _trivial_plan("cycles", bp, "Brauer graph is acyclic; nothing to delete")
    factors = []
    reps = []
    lines = ["cycle vertices: " + ", ".join(cycle_vertices)]
    weighted = []
    for key in cycle_vertices:
        ni = bp.n(key)
        if ni < 2:
            reps.append((key, f"vertex <{key}> with n = 1; trivial factor dropped"))
            lines.append(f"  vertex {key}: n = 1, unit factor")
            continue
        name = f"a{len(factors) + 1}"
        factors.append((name, INF))
        weighted.append((key, name, ni))
        reps.append((key, f"vertex <{key}> with n = {ni}; factor <{name}> infinite cyclic"))
        lines.append(f"  vertex {key}: W = {name} along the first {ni - 1} half edges, {name}^{-(ni - 1)} on the last")
    group = GroupSpec.abelian(factors)
    values = {}
    for key, name, ni in weighted:
        orbit = bp.sigma_orbit(key)
        gen = group.parse_word(name)
        for e in orbit[: ni - 1]:
            values[e] = gen
        values[orbit[ni - 1]] = group.power(gen, -(ni - 1))
    weight = GWeight.total(group, bp.half_edges, values)
    plan = _finish("cycles", bp, DeletionPlan("cycles", group, weight, tuple(reps), "\n".join(lines)))
    if check:
        cov = smash_brauer(bp, plan.weight, depth=check_depth)
        flags = cov.graph().classify()
        if flags.cycle_vertices:
            raise AssertionError("covering window still contains a cycle")
        # every vertex cycle has total weight 1, so orbits keep their base
        # size and m_W transports m; it is trivial exactly when m is
        if all(v == 1 for v in bp.multiplicity.values()):
            if any(v != 1 for v in cov.multiplicity.values()):
                raise AssertionError("covering multiplicity is not trivial on the window")
    return plan
