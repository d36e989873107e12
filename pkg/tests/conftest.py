"""Shared test helpers: graph builders and brute-force oracles."""

from __future__ import annotations

from collections import defaultdict

from brauer_cover import BrauerGraph, BrauerPermutation


def graph_from_edges(edges, multiplicity=None) -> BrauerGraph:
    """Build a BrauerGraph from an abstract edge list [(u, v), ...].

    Used to transcribe drawn multigraphs; the synthetic half edges are
    E<i>a / E<i>b and each vertex cycle lists its half edges in order.
    """
    tau_pairs = []
    at = {}
    for i, (u, v) in enumerate(edges):
        a, b = f"E{i}a", f"E{i}b"
        tau_pairs.append((a, b))
        at.setdefault(u, []).append(a)
        at.setdefault(v, []).append(b)
    cycles = [tuple(halves) for halves in at.values()]
    mult = {}
    for vertex, halves in at.items():
        mult[halves[0]] = (multiplicity or {}).get(vertex, 1)
    return BrauerPermutation.from_cycles(cycles, tau_pairs, mult).graph()


def brute_force_cycle_vertices(graph: BrauerGraph) -> frozenset:
    """Oracle: enumerate closed walks with no repeated edges and no repeated
    vertices except the endpoints (loops count, parallel pairs count)."""
    on_cycle = {u for u, v in graph.incidence.values() if u == v}
    adj = defaultdict(list)
    for key, (u, v) in graph.incidence.items():
        if u != v:
            adj[u].append((key, v))
            adj[v].append((key, u))
    keys = sorted({min(c) for c in graph.vertices})

    def cycle_through(start) -> bool:
        def dfs(current, visited, used):
            for key, nxt in adj[current]:
                if key in used:
                    continue
                if nxt == start and len(used) >= 1:
                    return True
                if nxt in visited:
                    continue
                if dfs(nxt, visited | {nxt}, used | {key}):
                    return True
            return False

        return dfs(start, {start}, frozenset())

    for v in keys:
        if v not in on_cycle and cycle_through(v):
            on_cycle.add(v)
    return frozenset(on_cycle)
