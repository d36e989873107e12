"""Smash-product coverings.

Two constructions and their cross-check:

* ``smash_brauer`` builds the covering Brauer permutation B_W on
  ``E x G`` with ``sigma_W(e_g) = sigma(e)_{W(e)g}``,
  ``tau_W(e_g) = tau(e)_g`` and multiplicity
  ``m_W = m(<sigma>e) * |<sigma>e| / |<sigma_W>e_g|``.  For infinite groups
  a finite window is grown breadth-first from the identity layer,
  alternating full sigma_W-orbit closure with tau_W pairing, so every
  included vertex is complete and carries its true multiplicity.

* ``smash_quiver`` builds the covering bound quiver with vertices
  ``x^(a)``, arrows ``a^(a): x^(a) -> y^(W(a)a)`` and every relation
  generator lifted along ``mu^(a) = a_n^(a_{n-1}...a_1 a) ... a_1^(a)``.

* ``cross_validate_theorem`` renames one construction into the other via
  ``(<tau>e)^(g) -> <tau_W>e_g``, ``a_e^(g) -> a_{e_g}`` and demands exact
  agreement of vertices, arrows and relation generators.

Covered names are mangled ``base@word``, e.g. ``1+@a^2``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .brauer import (
    Arrow,
    BoundQuiver,
    BrauerGraph,
    BrauerPermutation,
    Relation,
    canonical_relation,
)
from .errors import (
    NotAdmissibleError,
    NotHomogeneousError,
    WindowRequiredError,
)
from .groups import GroupElement, GroupSpec
from .weights import GWeight, is_admissible, is_homogeneous_quiver


def mangle(name: str, word: str) -> str:
    return f"{name}@{word}"


# --------------------------------------------------------------------------- #
# Brauer side


@dataclass
class BrauerCovering:
    """B_W, possibly restricted to a finite window of an infinite covering.

    ``sigma`` is total on the included half edges (sigma_W-orbits are never
    truncated, so ``multiplicity`` is defined on every vertex), while
    ``tau`` only contains completed pairs; half edges whose partner was not
    expanded are listed in ``frontier``.
    """

    group: GroupSpec
    half_edges: tuple
    sigma: dict
    tau: dict
    multiplicity: dict
    base: dict
    layer: dict
    frontier: frozenset
    complete: bool
    depth: Optional[int]
    cycles: tuple
    _vertex_key: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self._vertex_key:
            for cycle in self.cycles:
                key = min(cycle)
                for name in cycle:
                    self._vertex_key[name] = key
        self._cycle_by_key = {min(c): c for c in self.cycles}

    def vertex_key(self, name: str) -> str:
        return self._vertex_key[name]

    def sigma_orbit(self, name: str) -> tuple:
        cycle = self._cycle_by_key[self._vertex_key[name]]
        i = cycle.index(name)
        return cycle[i:] + cycle[:i]

    def to_brauer(self) -> BrauerPermutation:
        if not self.complete:
            raise WindowRequiredError(
                "covering window is incomplete; increase the depth", witness=sorted(self.frontier)
            )
        return BrauerPermutation(self.sigma, self.tau, dict(self.multiplicity))

    def graph(self) -> BrauerGraph:
        """Brauer graph of the window; only completed edges appear."""
        pairs = [(e, f) for e, f in self.tau.items() if e < f]
        return BrauerGraph.from_parts(self.cycles, pairs, dict(self.multiplicity))


def _sigma_w(bp: BrauerPermutation, weight: GWeight, pair):
    e, g = pair
    return bp.sigma[e], weight.group.multiply(weight[e], g)


def _sigma_close(bp: BrauerPermutation, weight: GWeight, pairs: set) -> set:
    out = set(pairs)
    stack = list(pairs)
    while stack:
        cur = stack.pop()
        nxt = _sigma_w(bp, weight, cur)
        if nxt not in out:
            out.add(nxt)
            stack.append(nxt)
    return out


def smash_brauer(
    bp: BrauerPermutation,
    weight: GWeight,
    depth: Optional[int] = None,
) -> BrauerCovering:
    """Build B_W.  Requires an admissible weight.

    Finite groups give the complete covering with ``|E_W| = |E| * |G|``;
    infinite groups need ``depth``, the number of tau_W-expansion rounds
    from the seed layer E x {1}.
    """
    ok, witness = is_admissible(bp, weight)
    if not ok:
        raise NotAdmissibleError(f"weight is not admissible at half edge {witness!r}", witness=witness)
    group = weight.group
    if group.is_finite():
        pairs = {(e, g) for e in bp.half_edges for g in group.elements()}
        windowed = False
    else:
        if depth is None:
            raise WindowRequiredError("infinite group: a window depth is required")
        pairs = _sigma_close(bp, weight, {(e, group.identity()) for e in bp.half_edges})
        for _ in range(depth):
            pairs |= {(bp.tau[e], g) for e, g in pairs}
            pairs = _sigma_close(bp, weight, pairs)
        windowed = True

    words: dict = {}

    def name_of(pair) -> str:
        e, g = pair
        if g not in words:
            words[g] = group.format_word(g)
        return mangle(e, words[g])

    names = {pair: name_of(pair) for pair in pairs}
    if len(set(names.values())) != len(names):
        raise ValueError("covered half-edge names collide; rename the base half edges")
    half_edges = tuple(sorted(names.values()))
    by_name = {v: k for k, v in names.items()}

    sigma = {}
    tau = {}
    for pair, name in names.items():
        sigma[name] = names[_sigma_w(bp, weight, pair)]
        partner = (bp.tau[pair[0]], pair[1])
        if partner in pairs:
            tau[name] = names[partner]
    frontier = frozenset(name for name in half_edges if name not in tau)
    if not windowed and frontier:
        raise AssertionError("finite covering must be tau-complete")
    # a window can close early (e.g. an identity weight never leaves the
    # seed layer); it is then a genuine Brauer permutation
    complete = not frontier

    cycles = []
    multiplicity = {}
    seen = set()
    for name in half_edges:
        if name in seen:
            continue
        cycle = [name]
        cur = sigma[name]
        while cur != name:
            cycle.append(cur)
            cur = sigma[cur]
        seen.update(cycle)
        cycles.append(tuple(cycle))
        e = by_name[name][0]
        total = bp.m(e) * bp.n(e)
        if total % len(cycle):
            raise AssertionError(f"non-integral covering multiplicity at {name!r}")
        multiplicity[min(cycle)] = total // len(cycle)

    return BrauerCovering(
        group=group,
        half_edges=half_edges,
        sigma=sigma,
        tau=tau,
        multiplicity=multiplicity,
        base={name: pair[0] for pair, name in names.items()},
        layer={name: pair[1] for pair, name in names.items()},
        frontier=frontier,
        complete=complete,
        depth=depth if windowed else None,
        cycles=tuple(sorted(cycles, key=min)),
    )


def admissibility_via_orbits(bp: BrauerPermutation, weight: GWeight) -> bool:
    """Admissibility decided purely from sigma_W-orbit sizes.

    Traces the orbit of e_1 for each half edge with a divergence budget of
    ``m(<sigma>e) * n(e)`` steps: an admissible weight must return within
    the budget, at a length dividing it.  Orbit lengths do not depend on
    the layer, so the identity layer suffices.
    """
    group = weight.group
    for e in bp.half_edges:
        budget = bp.m(e) * bp.n(e)
        start = (e, group.identity())
        cur = start
        period = None
        for step in range(1, budget + 1):
            cur = _sigma_w(bp, weight, cur)
            if cur == start:
                period = step
                break
        if period is None or budget % period:
            return False
    return True


# --------------------------------------------------------------------------- #
# quiver side


@dataclass
class CoveringQuiver:
    """(Q_{G,W}, I_{G,W}) with its projection to the base and the G-action.

    ``core_vertices`` are the window layers ``x^(a)``; targets that land
    outside an explicit window are kept as dashed ``frontier_vertices`` so
    that every arrow has declared endpoints.
    """

    base: BoundQuiver
    group: GroupSpec
    weight: GWeight
    quiver: BoundQuiver
    base_vertex: dict
    base_arrow: dict
    vertex_layer: dict
    arrow_layer: dict
    core_vertices: tuple
    frontier_vertices: frozenset
    window: Optional[tuple]
    complete: bool

    def translate(self, c: GroupElement) -> tuple[dict, dict]:
        """The right action X_c as a (vertex map, arrow map) pair."""
        if not self.complete:
            raise WindowRequiredError("the G-action is only a bijection on complete coverings")
        group = self.group
        vmap = {
            v: mangle(self.base_vertex[v], group.format_word(group.multiply(self.vertex_layer[v], c)))
            for v in self.quiver.vertices
        }
        amap = {
            a.name: mangle(
                self.base_arrow[a.name],
                group.format_word(group.multiply(self.arrow_layer[a.name], c)),
            )
            for a in self.quiver.arrows
        }
        return vmap, amap


def smash_quiver(
    quiver: BoundQuiver,
    weight: GWeight,
    window: Optional[Sequence[GroupElement]] = None,
) -> CoveringQuiver:
    """Build the covering bound quiver of (Q, I, W).

    Requires a homogeneous weight.  Finite groups use the full product (the
    window is ignored); infinite groups need an explicit window of group
    elements.  One arrow ``a^(a)`` is created per (arrow, window layer); a
    relation lift is kept only when all of its arrows exist.
    """
    ok, witness = is_homogeneous_quiver(quiver, weight)
    if not ok:
        raise NotHomogeneousError(
            f"weight is not homogeneous on relation generator {witness}", witness=witness
        )
    group = weight.group
    if group.is_finite():
        layers = list(group.elements())
        complete = True
    else:
        if window is None:
            raise WindowRequiredError("infinite group: an explicit window of group elements is required")
        layers = sorted(set(window), key=group.format_word)
        complete = False
    layer_set = set(layers)
    words = {g: group.format_word(g) for g in layers}

    def word(g: GroupElement) -> str:
        if g not in words:
            words[g] = group.format_word(g)
        return words[g]

    base_vertex: dict = {}
    vertex_layer: dict = {}
    core = []
    for x in quiver.vertices:
        for a in layers:
            name = mangle(x, word(a))
            core.append(name)
            base_vertex[name] = x
            vertex_layer[name] = a

    arrows = []
    base_arrow: dict = {}
    arrow_layer: dict = {}
    frontier = set()
    for arrow in quiver.arrows:
        w = weight[arrow.name]
        for a in layers:
            name = mangle(arrow.name, word(a))
            b = group.multiply(w, a)
            target = mangle(arrow.target, word(b))
            if b not in layer_set and target not in base_vertex:
                frontier.add(target)
                base_vertex[target] = arrow.target
                vertex_layer[target] = b
            arrows.append(Arrow(name, mangle(arrow.source, word(a)), target))
            base_arrow[name] = arrow.name
            arrow_layer[name] = a

    arrow_names = {a.name for a in arrows}
    relations: list[Relation] = []
    for relation in quiver.relations:
        for a in layers:
            lifted_terms = []
            usable = True
            for coeff, path in relation:
                cur = a
                lifted_path = []
                for arrow_name in path:
                    lifted_name = mangle(arrow_name, word(cur))
                    if lifted_name not in arrow_names:
                        usable = False
                        break
                    lifted_path.append(lifted_name)
                    cur = group.multiply(weight[arrow_name], cur)
                if not usable:
                    break
                lifted_terms.append((coeff, tuple(lifted_path)))
            if usable:
                relations.append(tuple(lifted_terms))

    covering = BoundQuiver(
        vertices=tuple(sorted(set(core) | frontier)),
        arrows=tuple(sorted(arrows, key=lambda a: a.name)),
        relations=tuple(relations),
    )
    # homogeneity guarantees the lifted paths of each generator are parallel
    for relation in covering.relations:
        sources = {covering.path_source(p) for _, p in relation}
        targets = {covering.path_target(p) for _, p in relation}
        if len(sources) > 1 or len(targets) > 1:
            raise AssertionError("lifted relation is not parallel")
    return CoveringQuiver(
        base=quiver,
        group=group,
        weight=weight,
        quiver=covering,
        base_vertex=base_vertex,
        base_arrow=base_arrow,
        vertex_layer=vertex_layer,
        arrow_layer=arrow_layer,
        core_vertices=tuple(sorted(core)),
        frontier_vertices=frozenset(frontier),
        window=None if complete else tuple(layers),
        complete=complete,
    )


# --------------------------------------------------------------------------- #
# covering checks


@dataclass(frozen=True)
class CoveringReport:
    ok: bool
    failures: tuple
    interior_count: int
    notes: tuple

    def as_doc(self) -> dict:
        return {
            "ok": self.ok,
            "failures": [list(f) for f in self.failures],
            "interior_vertices": self.interior_count,
            "notes": list(self.notes),
        }


def check_covering(cov: CoveringQuiver) -> CoveringReport:
    """Verify the covering axioms on a materialized covering quiver.

    Checks vertex surjectivity, the x+/x- bijections (on interior vertices
    for windowed coverings), admissibility of the action, endpoint
    projection, and for complete coverings freeness and the orbit-quiver
    comparison with the base.
    """
    failures: list[tuple[str, str]] = []
    notes: list[str] = []
    base = cov.base
    group = cov.group

    out_index: dict[str, list[Arrow]] = {v: [] for v in cov.quiver.vertices}
    in_index: dict[str, list[Arrow]] = {v: [] for v in cov.quiver.vertices}
    for a in cov.quiver.arrows:
        out_index[a.source].append(a)
        in_index[a.target].append(a)

    covered_bases = {cov.base_vertex[v] for v in cov.core_vertices}
    for x in base.vertices:
        if x not in covered_bases:
            failures.append(("vertex_surjective", x))

    if cov.complete:
        interior = list(cov.core_vertices)
    else:
        window_set = set(cov.window or ())
        interior = []
        for v in cov.core_vertices:
            a = cov.vertex_layer[v]
            fits = all(
                group.multiply(group.inverse(cov.weight[b.name]), a) in window_set
                for b in base.in_arrows(cov.base_vertex[v])
            )
            if fits:
                interior.append(v)
        notes.append("windowed covering: bijection checks restricted to interior vertices")

    for v in interior:
        fx = cov.base_vertex[v]
        want_out = sorted(a.name for a in base.out_arrows(fx))
        got_out = sorted(cov.base_arrow[a.name] for a in out_index[v])
        if want_out != got_out:
            failures.append(("out_bijection", v))
        want_in = sorted(a.name for a in base.in_arrows(fx))
        got_in = sorted(cov.base_arrow[a.name] for a in in_index[v])
        if want_in != got_in:
            failures.append(("in_bijection", v))

    for v in cov.quiver.vertices:
        for index in (out_index, in_index):
            images = [cov.base_arrow[a.name] for a in index[v]]
            if len(set(images)) != len(images):
                failures.append(("action_admissible", v))
                break

    base_arrows = base.arrow_map
    for a in cov.quiver.arrows:
        beta = base_arrows[cov.base_arrow[a.name]]
        if cov.base_vertex[a.source] != beta.source or cov.base_vertex[a.target] != beta.target:
            failures.append(("projection", a.name))

    if cov.complete:
        for c in group.elements():
            if group.is_identity(c):
                continue
            vmap, _ = cov.translate(c)
            vertex_set = set(cov.quiver.vertices)
            for v, image in vmap.items():
                if image == v or image not in vertex_set:
                    failures.append(("action_free", f"{v} under {group.format_word(c)}"))
                    break
        order = group.order()
        vertex_fibers = Counter(cov.base_vertex[v] for v in cov.quiver.vertices)
        arrow_fibers = Counter(cov.base_arrow[a.name] for a in cov.quiver.arrows)
        for x in base.vertices:
            if vertex_fibers.get(x) != order:
                failures.append(("orbit_vertices", x))
        for a in base.arrows:
            if arrow_fibers.get(a.name) != order:
                failures.append(("orbit_arrows", a.name))
    else:
        notes.append("windowed covering: freeness and orbit-quiver checks skipped")

    return CoveringReport(
        ok=not failures,
        failures=tuple(failures),
        interior_count=len(interior),
        notes=tuple(notes),
    )


# --------------------------------------------------------------------------- #
# theorem cross-validation


def windowed_bound_quiver(cov: BrauerCovering) -> BoundQuiver:
    """Bound Brauer quiver of a covering window.

    Only relations whose arrows all exist are emitted: zero relations need
    the tau-partner of sigma_W(e), commutativity relations need a completed
    edge.  On a complete covering this agrees with
    ``cov.to_brauer().bound_quiver()``.
    """

    def vkey(name: str) -> str:
        partner = cov.tau.get(name)
        return name if partner is None else min(name, partner)

    arrows = tuple(Arrow(e, vkey(e), vkey(cov.sigma[e])) for e in cov.half_edges)
    relations: list[Relation] = []
    for e in cov.half_edges:
        partner = cov.tau.get(cov.sigma[e])
        if partner is not None:
            relations.append(((1, (e, partner)),))
    for e in cov.half_edges:
        f = cov.tau.get(e)
        if f is None or f < e:
            continue
        mu_e = cov.sigma_orbit(e)
        mu_f = cov.sigma_orbit(f)
        relations.append(
            (
                (1, mu_e * cov.multiplicity[cov.vertex_key(e)]),
                (-1, mu_f * cov.multiplicity[cov.vertex_key(f)]),
            )
        )
    vertices = tuple(sorted({vkey(e) for e in cov.half_edges}))
    return BoundQuiver(vertices, arrows, tuple(relations))


def cross_validate_theorem(
    bp: BrauerPermutation,
    weight: GWeight,
    depth: Optional[int] = None,
) -> tuple[bool, list[str]]:
    """Compare bound_quiver(smash_brauer(B, W)) with smash_quiver(bound_quiver(B), W).

    The two constructions are independent; the explicit renaming
    ``(<tau>e)^(g) -> <tau_W>e_g``, ``a_e^(g) -> a_{e_g}`` must identify
    them exactly.  With an infinite group the comparison is restricted to
    the common window interior.
    """
    group = weight.group
    cov = smash_brauer(bp, weight, depth)
    if group.is_finite():
        right = cov.to_brauer().bound_quiver()
        lifted = smash_quiver(bp.bound_quiver(), weight)
    else:
        right = windowed_bound_quiver(cov)
        layers = sorted({g for g in cov.layer.values()}, key=group.format_word)
        lifted = smash_quiver(bp.bound_quiver(), weight, window=layers)

    cov_set = set(cov.half_edges)
    words: dict = {}

    def word(g: GroupElement) -> str:
        if g not in words:
            words[g] = group.format_word(g)
        return words[g]

    vmap: dict = {}
    for v in lifted.quiver.vertices:
        x = lifted.base_vertex[v]
        w = word(lifted.vertex_layer[v])
        members = [m for m in (mangle(x, w), mangle(bp.tau[x], w)) if m in cov_set]
        if members:
            vmap[v] = min(members)

    mismatches: list[str] = []
    kept_arrows = [a for a in lifted.quiver.arrows if a.name in cov_set]
    left_vertices = {vmap[v] for v in vmap}
    if left_vertices != set(right.vertices):
        mismatches.append(
            "vertices differ: "
            f"lifted-only {sorted(left_vertices - set(right.vertices))[:4]}, "
            f"brauer-only {sorted(set(right.vertices) - left_vertices)[:4]}"
        )
    left_arrow_set = {(a.name, vmap[a.source], vmap[a.target]) for a in kept_arrows}
    right_arrow_set = {(a.name, a.source, a.target) for a in right.arrows}
    if left_arrow_set != right_arrow_set:
        mismatches.append(
            "arrows differ: "
            f"lifted-only {sorted(left_arrow_set - right_arrow_set)[:4]}, "
            f"brauer-only {sorted(right_arrow_set - left_arrow_set)[:4]}"
        )
    left_relations = {
        canonical_relation(r)
        for r in lifted.quiver.relations
        if all(name in cov_set for _, path in r for name in path)
    }
    right_relations = {canonical_relation(r) for r in right.relations}
    if left_relations != right_relations:
        mismatches.append(
            "relation generators differ: "
            f"lifted-only {sorted(left_relations - right_relations)[:2]}, "
            f"brauer-only {sorted(right_relations - left_relations)[:2]}"
        )
    return not mismatches, mismatches


def drop_arrow(cov: CoveringQuiver, arrow_name: str) -> CoveringQuiver:
    """A deliberately corrupted copy with one arrow (and the relations
    using it) removed; negative control for ``check_covering``."""
    arrows = tuple(a for a in cov.quiver.arrows if a.name != arrow_name)
    relations = tuple(
        r for r in cov.quiver.relations if all(arrow_name not in path for _, path in r)
    )
    quiver = BoundQuiver(cov.quiver.vertices, arrows, relations)
    base_arrow = {k: v for k, v in cov.base_arrow.items() if k != arrow_name}
    arrow_layer = {k: v for k, v in cov.arrow_layer.items() if k != arrow_name}
    return replace(cov, quiver=quiver, base_arrow=base_arrow, arrow_layer=arrow_layer)
