"""Brauer permutations and their two derived presentations.

A Brauer permutation is a quadruple ``(E, sigma, tau, m)``: a finite set of
half edges, a permutation ``sigma`` whose orbits are the vertices, a free
involution ``tau`` pairing half edges into edges, and a positive integer
multiplicity per sigma-orbit.  From it we derive

* the Brauer graph: a multigraph with vertices ``E/sigma`` (keeping the
  cyclic order) and edges ``E/tau``;
* the bound Brauer quiver: vertices ``E/tau``, one arrow ``a_e`` per half
  edge from ``<tau>e`` to ``<tau>sigma(e)``, zero relations
  ``a_{tau sigma e} a_e`` and one commutativity relation
  ``mu_e^{m} - mu_{tau e}^{m'}`` per edge, where ``mu_e`` is the special
  cycle around the vertex of ``e`` starting at ``e``.

Orbits are keyed by their lexicographically least member so every derived
structure is deterministic.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InvalidBrauerPermutationError, UnknownNameError

# A path is a tuple of arrow names in application order: the path written
# a_n ... a_2 a_1 on paper (rightmost applied first) is stored (a_1, ..., a_n).
Path = tuple[str, ...]
Term = tuple[int, Path]
Relation = tuple[Term, ...]


@dataclass(frozen=True)
class Violation:
    """One failed invariant, with the offending half edges."""

    code: str
    message: str
    half_edges: tuple[str, ...] = ()

    def as_doc(self) -> dict:
        return {"code": self.code, "message": self.message, "half_edges": list(self.half_edges)}


def validate(
    sigma: Mapping[str, str],
    tau: Mapping[str, str],
    multiplicity: Mapping[str, int],
) -> list[Violation]:
    """Check the Brauer permutation axioms on raw maps.

    Returns the full list of violations (empty when the data is valid);
    raises nothing, so the CLI can report every problem at once.
    """
    out: list[Violation] = []
    edges = set(sigma)
    if not edges:
        out.append(Violation("empty", "E must contain at least one edge"))
        return out
    for e in edges:
        if not isinstance(e, str) or not e:
            out.append(Violation("bad_name", f"half edge name {e!r} must be a nonempty string"))
            return out
    if set(tau) != edges:
        diff = sorted(set(tau) ^ edges)
        out.append(Violation("domain_mismatch", "sigma and tau must share the same half edges", tuple(diff)))
        return out

    sigma_ok = True
    for name, perm in (("sigma", sigma), ("tau", tau)):
        missing = [e for e in perm.values() if e not in edges]
        dup = [e for e, k in Counter(perm.values()).items() if k > 1]
        if missing or dup:
            sigma_ok = sigma_ok and name != "sigma"
            out.append(
                Violation(
                    f"{name}_not_bijection",
                    f"{name} must be a bijection of E",
                    tuple(sorted(set(missing) | set(dup))),
                )
            )
    tau_ok = not any(v.code == "tau_not_bijection" for v in out)
    if tau_ok:
        fixed = sorted(e for e in edges if tau[e] == e)
        if fixed:
            out.append(Violation("tau_not_free", "tau must act freely (no fixed points)", tuple(fixed)))
        broken = sorted(e for e in edges if tau[tau[e]] != e)
        if broken:
            out.append(Violation("tau_not_involution", "tau composed with itself must be the identity", tuple(broken)))
    if len(edges) % 2 != 0:
        out.append(Violation("odd_size", f"|E| must be even, got {len(edges)}"))

    if sigma_ok:
        orbit_key: dict[str, str] = {}
        for e in sorted(edges):
            if e in orbit_key:
                continue
            orbit = _walk_orbit(sigma, e)
            for member in orbit:
                orbit_key[member] = e
        per_orbit: dict[str, list[str]] = defaultdict(list)
        for e in multiplicity:
            if e not in edges:
                out.append(Violation("unknown_half_edge", f"multiplicity key {e!r} is not a half edge", (e,)))
            else:
                per_orbit[orbit_key[e]].append(e)
        for key in sorted({orbit_key[e] for e in edges}):
            reps = sorted(per_orbit.get(key, ()))
            if not reps:
                out.append(Violation("multiplicity_missing", f"no multiplicity for the vertex of {key!r}", (key,)))
            elif len(reps) > 1:
                out.append(
                    Violation(
                        "multiplicity_duplicate",
                        f"multiplicity given on several members of the vertex of {key!r}",
                        tuple(reps),
                    )
                )
        for e, value in sorted(multiplicity.items()):
            if e in edges and (not isinstance(value, int) or isinstance(value, bool) or value < 1):
                out.append(Violation("bad_multiplicity", f"multiplicity of {e!r} must be a positive integer", (e,)))
    return out


def _walk_orbit(perm: Mapping[str, str], start: str) -> tuple[str, ...]:
    orbit = [start]
    cur = perm[start]
    while cur != start:
        orbit.append(cur)
        cur = perm[cur]
    return tuple(orbit)


class BrauerPermutation:
    """The quadruple (E, sigma, tau, m), validated and cached at construction.

    Immutable once built; all orbit lookups are O(1) afterwards.
    """

    __slots__ = ("half_edges", "sigma", "tau", "multiplicity", "_cycle", "_vertex_key")

    def __init__(
        self,
        sigma: Mapping[str, str],
        tau: Mapping[str, str],
        multiplicity: Mapping[str, int],
    ):
        violations = validate(sigma, tau, multiplicity)
        if violations:
            raise InvalidBrauerPermutationError(
                "; ".join(v.message for v in violations),
                witness=[v.as_doc() for v in violations],
            )
        self.half_edges: tuple[str, ...] = tuple(sorted(sigma))
        self.sigma: dict[str, str] = {e: sigma[e] for e in self.half_edges}
        self.tau: dict[str, str] = {e: tau[e] for e in self.half_edges}
        # cache: half edge -> its sigma-cycle rotated to start at the least member
        self._cycle: dict[str, tuple[str, ...]] = {}
        self._vertex_key: dict[str, str] = {}
        for e in self.half_edges:
            if e in self._cycle:
                continue
            orbit = _walk_orbit(self.sigma, e)
            for member in orbit:
                self._cycle[member] = orbit
                self._vertex_key[member] = e
        self.multiplicity: dict[str, int] = {
            self._vertex_key[e]: int(value) for e, value in multiplicity.items()
        }

    # ------------------------------------------------------------------ #
    # convenient constructors

    @classmethod
    def from_cycles(
        cls,
        sigma_cycles: Iterable[Sequence[str]],
        tau_pairs: Iterable[Sequence[str]],
        multiplicity: Mapping[str, int],
    ) -> "BrauerPermutation":
        """Build from sigma written in cycle notation and tau as edge pairs.

        Half edges missing from ``sigma_cycles`` are sigma-fixed points.
        """
        tau = {}
        for pair in tau_pairs:
            e, f = pair
            tau[e] = f
            tau[f] = e
        sigma = {e: e for e in tau}
        for cycle in sigma_cycles:
            for i, e in enumerate(cycle):
                sigma[e] = cycle[(i + 1) % len(cycle)]
        return cls(sigma, tau, multiplicity)

    def relabel(self, mapping: Mapping[str, str]) -> "BrauerPermutation":
        """Rename every half edge through a bijection."""
        sigma = {mapping[e]: mapping[f] for e, f in self.sigma.items()}
        tau = {mapping[e]: mapping[f] for e, f in self.tau.items()}
        mult = {mapping[key]: m for key, m in self.multiplicity.items()}
        return BrauerPermutation(sigma, tau, mult)

    # ------------------------------------------------------------------ #
    # orbit queries

    def _known(self, e: str) -> None:
        if e not in self.sigma:
            raise UnknownNameError(f"unknown half edge {e!r}", witness=e)

    def sigma_orbit(self, e: str) -> tuple[str, ...]:
        """The orbit [e, sigma(e), sigma^2(e), ...] in application order."""
        self._known(e)
        cycle = self._cycle[e]
        i = cycle.index(e)
        return cycle[i:] + cycle[:i]

    def n(self, e: str) -> int:
        self._known(e)
        return len(self._cycle[e])

    def m(self, e: str) -> int:
        self._known(e)
        return self.multiplicity[self._vertex_key[e]]

    def vertex_key(self, e: str) -> str:
        self._known(e)
        return self._vertex_key[e]

    def edge_key(self, e: str) -> str:
        self._known(e)
        return min(e, self.tau[e])

    def vertices(self) -> tuple[tuple[str, ...], ...]:
        keys = sorted({self._vertex_key[e] for e in self.half_edges})
        return tuple(self._cycle[k] for k in keys)

    def edges(self) -> tuple[tuple[str, str], ...]:
        keys = sorted({self.edge_key(e) for e in self.half_edges})
        return tuple((k, self.tau[k]) for k in keys)

    # ------------------------------------------------------------------ #
    # derived presentations

    def graph(self) -> "BrauerGraph":
        return BrauerGraph.from_parts(self.vertices(), self.edges(), dict(self.multiplicity))

    def mu_path(self, e: str) -> Path:
        """The special cycle mu_e = a_{sigma^{n-1}e} ... a_{sigma e} a_e."""
        return tuple(self.sigma_orbit(e))

    def bound_quiver(self) -> "BoundQuiver":
        vertices = tuple(sorted({self.edge_key(e) for e in self.half_edges}))
        arrows = tuple(
            Arrow(e, self.edge_key(e), self.edge_key(self.sigma[e])) for e in self.half_edges
        )
        relations: list[Relation] = []
        for e in self.half_edges:
            relations.append(((1, (e, self.tau[self.sigma[e]])),))
        for e, f in self.edges():
            relations.append(
                (
                    (1, self.mu_path(e) * self.m(e)),
                    (-1, self.mu_path(f) * self.m(f)),
                )
            )
        return BoundQuiver(vertices, arrows, tuple(relations))

    # ------------------------------------------------------------------ #

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BrauerPermutation)
            and self.sigma == other.sigma
            and self.tau == other.tau
            and self.multiplicity == other.multiplicity
        )

    def __repr__(self) -> str:
        return f"BrauerPermutation({len(self.half_edges)} half edges, {len(self.vertices())} vertices)"


@dataclass(frozen=True)
class Classification:
    has_loops: bool
    has_multiple_edges: bool
    multiplicity_trivial: bool
    is_connected: bool
    is_tree: bool
    cycle_vertices: frozenset


@dataclass(frozen=True)
class BrauerGraph:
    """Multigraph presentation of a Brauer permutation.

    ``vertices`` keeps the cyclic half-edge order; ``incidence`` maps each
    edge key to the vertex keys of its two half edges (equal for loops).
    Windowed coverings reuse this container with only their complete edges,
    so totality of the edge pairing is not enforced here.
    """

    vertices: tuple[tuple[str, ...], ...]
    edges: tuple[tuple[str, str], ...]
    incidence: dict
    multiplicity: dict
    vertex_of: dict

    @staticmethod
    def from_parts(
        cycles: Iterable[Sequence[str]],
        edge_pairs: Iterable[Sequence[str]],
        multiplicity: Mapping[str, int],
    ) -> "BrauerGraph":
        cycles = tuple(tuple(c) for c in cycles)
        vertex_of = {}
        for cycle in cycles:
            key = min(cycle)
            for e in cycle:
                vertex_of[e] = key
        keyed = tuple(sorted(cycles, key=min))
        edges = tuple(sorted((min(p), max(p)) for p in edge_pairs))
        incidence = {p[0]: (vertex_of[p[0]], vertex_of[p[1]]) for p in edges}
        mult = {vertex_of[k]: int(v) for k, v in multiplicity.items()}
        return BrauerGraph(keyed, edges, incidence, mult, vertex_of)

    @property
    def vertex_keys(self) -> tuple[str, ...]:
        return tuple(sorted(min(cycle) for cycle in self.vertices))

    def loops(self) -> tuple[str, ...]:
        return tuple(k for k, (u, v) in sorted(self.incidence.items()) if u == v)

    def parallel_classes(self) -> dict:
        """Non-loop edges grouped by their unordered endpoint pair."""
        out: dict[frozenset, list[str]] = defaultdict(list)
        for k, (u, v) in sorted(self.incidence.items()):
            if u != v:
                out[frozenset((u, v))].append(k)
        return dict(out)

    def degree(self, vertex_key: str) -> int:
        """Number of incident half edges (loops count twice)."""
        out = 0
        for u, v in self.incidence.values():
            out += (u == vertex_key) + (v == vertex_key)
        return out

    def classify(self) -> Classification:
        keys = sorted({min(c) for c in self.vertices})
        loops = self.loops()
        multiple = any(len(ks) > 1 for ks in self.parallel_classes().values())
        trivial = all(self.multiplicity.get(k, 1) == 1 for k in keys)
        connected = self._is_connected(keys)
        tree = connected and not loops and len(self.edges) == len(keys) - 1
        return Classification(
            has_loops=bool(loops),
            has_multiple_edges=multiple,
            multiplicity_trivial=trivial,
            is_connected=connected,
            is_tree=tree,
            cycle_vertices=self._cycle_vertices(keys),
        )

    def _adjacency(self, keys):
        adj: dict[str, list] = {k: [] for k in keys}
        for i, (k, (u, v)) in enumerate(sorted(self.incidence.items())):
            if u != v:
                adj[u].append((i, v))
                adj[v].append((i, u))
        return adj

    def _is_connected(self, keys) -> bool:
        if not keys:
            return True
        adj = self._adjacency(keys)
        seen = {keys[0]}
        stack = [keys[0]]
        while stack:
            u = stack.pop()
            for _, w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(keys)

    def _cycle_vertices(self, keys) -> frozenset:
        """Vertices lying on a cycle: loop endpoints plus endpoints of non-bridges.

        Loops are cycles of length 1 and a parallel pair is a cycle of
        length 2, so bridges (found by an iterative lowlink pass over the
        loopless multigraph) are exactly the edges on no cycle.
        """
        on_cycle = {u for k, (u, v) in self.incidence.items() if u == v}
        adj = self._adjacency(keys)
        # edge ids here must match the enumeration used by _adjacency
        plain = [(i, u, v) for i, (k, (u, v)) in enumerate(sorted(self.incidence.items())) if u != v]
        disc: dict[str, int] = {}
        low: dict[str, int] = {}
        bridges: set[int] = set()
        clock = 0
        for root in keys:
            if root in disc:
                continue
            disc[root] = low[root] = clock
            clock += 1
            stack = [(root, -1, iter(adj[root]))]
            while stack:
                v, entry_edge, it = stack[-1]
                advanced = False
                for eid, w in it:
                    if eid == entry_edge:
                        continue
                    if w in disc:
                        low[v] = min(low[v], disc[w])
                    else:
                        disc[w] = low[w] = clock
                        clock += 1
                        stack.append((w, eid, iter(adj[w])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    if stack:
                        parent = stack[-1][0]
                        low[parent] = min(low[parent], low[v])
                        if low[v] > disc[parent]:
                            bridges.add(entry_edge)
        for eid, u, v in plain:
            if eid not in bridges:
                on_cycle.add(u)
                on_cycle.add(v)
        return frozenset(on_cycle)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class BoundQuiver:
    """A quiver plus relation generators (signed integer combinations of
    parallel paths, assumed minimal)."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        vertex_set = set(self.vertices)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        for a in self.arrows:
            if a.source not in vertex_set or a.target not in vertex_set:
                raise ValueError(f"arrow {a.name!r} has undeclared endpoints")
        by_name = {a.name: a for a in self.arrows}
        for relation in self.relations:
            if not relation:
                raise ValueError("empty relation generator")
            endpoints = None
            for coeff, path in relation:
                if not isinstance(coeff, int) or coeff == 0:
                    raise ValueError(f"relation coefficient must be a nonzero integer, got {coeff!r}")
                if not path:
                    raise ValueError("relation paths must be nonempty")
                for name in path:
                    if name not in by_name:
                        raise ValueError(f"relation uses unknown arrow {name!r}")
                for first, second in zip(path, path[1:]):
                    if by_name[first].target != by_name[second].source:
                        raise ValueError(f"path {path!r} is not composable at {first!r} -> {second!r}")
                ends = (by_name[path[0]].source, by_name[path[-1]].target)
                if endpoints is None:
                    endpoints = ends
                elif endpoints != ends:
                    raise ValueError(f"relation terms are not parallel: {relation!r}")

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise UnknownNameError(f"unknown arrow {name!r}", witness=name)

    @property
    def arrow_map(self) -> dict:
        return {a.name: a for a in self.arrows}

    def out_arrows(self, vertex: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.source == vertex)

    def in_arrows(self, vertex: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.target == vertex)

    def path_source(self, path: Path) -> str:
        return self.arrow_map[path[0]].source

    def path_target(self, path: Path) -> str:
        return self.arrow_map[path[-1]].target


def canonical_relation(relation: Relation) -> Relation:
    """Sign- and order-normalized form, for comparing generator sets.

    A generator and its negative span the same ideal; we sort the terms and
    make the first coefficient positive.
    """
    terms = sorted(relation, key=lambda t: (t[1], t[0]))
    if terms[0][0] < 0:
        terms = [(-c, p) for c, p in terms]
    return tuple(terms)
