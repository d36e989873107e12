"""Equality up to relabeling.

``ribbon_iso`` finds a bijection of half edges commuting with sigma and
tau and preserving multiplicities (the right notion for Brauer
permutations): such a map is determined on each <sigma,tau>-connected
component by the image of one half edge, so the search tries every anchor
image per component and propagates.

``graph_iso`` is plain multigraph isomorphism respecting vertex
multiplicities, loop counts and parallel counts; it exists to compare
computed coverings against drawn pictures and is capped at 14 vertices.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional

from .brauer import BrauerGraph, BrauerPermutation
from .errors import TooLargeError

GRAPH_ISO_CAP = 14


def _components(bp: BrauerPermutation) -> list[tuple[str, ...]]:
    seen: set[str] = set()
    out = []
    for e in bp.half_edges:
        if e in seen:
            continue
        comp = {e}
        stack = [e]
        while stack:
            x = stack.pop()
            for y in (bp.sigma[x], bp.tau[x]):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def _match_component(b1: BrauerPermutation, b2: BrauerPermutation, start1: str, start2: str) -> Optional[dict]:
    phi = {start1: start2}
    stack = [start1]
    while stack:
        x = stack.pop()
        y = phi[x]
        for f1, f2 in ((b1.sigma, b2.sigma), (b1.tau, b2.tau)):
            nx, ny = f1[x], f2[y]
            if nx in phi:
                if phi[nx] != ny:
                    return None
            else:
                phi[nx] = ny
                stack.append(nx)
    if len(set(phi.values())) != len(phi):
        return None
    for x, y in phi.items():
        if b1.m(x) != b2.m(y):
            return None
    return phi


def ribbon_iso(b1: BrauerPermutation, b2: BrauerPermutation) -> Optional[dict]:
    """A sigma/tau-equivariant multiplicity-preserving bijection, or None."""
    if len(b1.half_edges) != len(b2.half_edges):
        return None
    comps = _components(b1)

    def extend(index: int, phi: dict, used: set) -> Optional[dict]:
        if index == len(comps):
            return phi
        anchor = comps[index][0]
        for candidate in b2.half_edges:
            if candidate in used:
                continue
            local = _match_component(b1, b2, anchor, candidate)
            if local is None:
                continue
            image = set(local.values())
            if image & used:
                continue
            result = extend(index + 1, {**phi, **local}, used | image)
            if result is not None:
                return result
        return None

    return extend(0, {}, set())


def _signatures(graph: BrauerGraph):
    keys = list(graph.vertex_keys)
    loops = Counter()
    for k, (u, v) in graph.incidence.items():
        if u == v:
            loops[u] += 1
    parallel = Counter()
    for k, (u, v) in graph.incidence.items():
        if u != v:
            parallel[frozenset((u, v))] += 1
    sig = {}
    for v in keys:
        counts = sorted(c for pair, c in parallel.items() if v in pair)
        sig[v] = (graph.degree(v), graph.multiplicity.get(v, 1), loops[v], tuple(counts))
    return keys, sig, loops, parallel


def graph_iso(g1: BrauerGraph, g2: BrauerGraph) -> Optional[dict]:
    """Multigraph isomorphism on the vertex keys, or None.

    Raises TooLargeError beyond the 14-vertex cap (backtracking search with
    degree / multiplicity / loop-count pruning, no canonical labeling).
    """
    keys1, sig1, loops1, par1 = _signatures(g1)
    keys2, sig2, loops2, par2 = _signatures(g2)
    if len(keys1) > GRAPH_ISO_CAP or len(keys2) > GRAPH_ISO_CAP:
        raise TooLargeError(f"graph isomorphism is capped at {GRAPH_ISO_CAP} vertices")
    if len(keys1) != len(keys2) or len(g1.edges) != len(g2.edges):
        return None
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    # rarest signatures first cuts the branching early
    by_sig = Counter(sig1.values())
    order = sorted(keys1, key=lambda v: (by_sig[sig1[v]], v))

    def consistent(v, w, phi) -> bool:
        if sig1[v] != sig2[w]:
            return False
        for u, x in phi.items():
            if par1.get(frozenset((v, u)), 0) != par2.get(frozenset((w, x)), 0):
                return False
        return True

    def extend(i: int, phi: dict, used: set) -> Optional[dict]:
        if i == len(order):
            return phi
        v = order[i]
        for w in keys2:
            if w in used or not consistent(v, w, phi):
                continue
            result = extend(i + 1, {**phi, v: w}, used | {w})
            if result is not None:
                return result
        return None

    return extend(0, {}, set())
