"""Seeded random generators used by the randomized checks.

The seed comes from the BRAUER_COVER_SEED environment variable (default
1729) so randomized runs are reproducible.  Admissible weights are built
by leaving one half edge per vertex free and solving for it: with
``A = W(sigma^{n-1}e) ... W(sigma e)`` the condition
``(A * W(e))^m = 1`` becomes ``W(e) = A^{-1} * y`` for any ``y`` with
``y^m = 1``.
"""

from __future__ import annotations

import os
import random
from typing import Optional, Sequence

from .brauer import BrauerPermutation
from .groups import GroupElement, GroupSpec
from .weights import GWeight, is_admissible

DEFAULT_SEED = 1729
SEED_ENV = "BRAUER_COVER_SEED"


def seeded_rng(seed: Optional[int] = None) -> random.Random:
    if seed is None:
        seed = int(os.environ.get(SEED_ENV, DEFAULT_SEED))
    return random.Random(seed)


def small_groups() -> tuple[GroupSpec, ...]:
    """The finite groups used by the randomized suites (orders <= 6)."""
    return (
        GroupSpec.cyclic(2),
        GroupSpec.cyclic(3),
        GroupSpec.abelian([("a", 2), ("b", 2)]),
        GroupSpec.cyclic(6),
        GroupSpec.perm_group(3, {"a": [1, 2, 0], "b": [1, 0, 2]}),
    )


def random_brauer(
    rng: random.Random,
    max_edges: int = 4,
    max_multiplicity: int = 3,
) -> BrauerPermutation:
    """A random Brauer permutation with 1..max_edges edges.

    sigma is an arbitrary permutation of the half edges, tau the standard
    pairing i+ <-> i-, multiplicities uniform in 1..max_multiplicity.
    """
    k = rng.randint(1, max_edges)
    half_edges = [f"{i}{s}" for i in range(1, k + 1) for s in "+-"]
    shuffled = half_edges[:]
    rng.shuffle(shuffled)
    sigma = dict(zip(half_edges, shuffled))
    tau = {}
    for i in range(1, k + 1):
        tau[f"{i}+"] = f"{i}-"
        tau[f"{i}-"] = f"{i}+"
    seen: set[str] = set()
    multiplicity = {}
    for e in sorted(sigma):
        if e in seen:
            continue
        orbit = [e]
        cur = sigma[e]
        while cur != e:
            orbit.append(cur)
            cur = sigma[cur]
        seen.update(orbit)
        multiplicity[e] = rng.randint(1, max_multiplicity)
    return BrauerPermutation(sigma, tau, multiplicity)


def random_total_weight(rng: random.Random, bp: BrauerPermutation, group: GroupSpec) -> GWeight:
    elements = group.elements()
    values = {e: rng.choice(elements) for e in bp.half_edges}
    return GWeight(group, values)


def _elements_of_order_dividing(group: GroupSpec, m: int) -> Sequence[GroupElement]:
    return [x for x in group.elements() if group.is_identity(group.power(x, m))]


def random_admissible_weight(
    rng: random.Random,
    bp: BrauerPermutation,
    group: GroupSpec,
    attempts: int = 1000,
) -> GWeight:
    """An admissible weight, uniform on all but one half edge per vertex."""
    for _ in range(attempts):
        elements = group.elements()
        values: dict = {}
        for cycle in bp.vertices():
            free = cycle[0]
            for e in cycle[1:]:
                values[e] = rng.choice(elements)
            acc = group.identity()
            for e in cycle[1:]:
                acc = group.multiply(values[e], acc)
            y = rng.choice(_elements_of_order_dividing(group, bp.m(free)))
            values[free] = group.multiply(group.inverse(acc), y)
        weight = GWeight(group, values)
        ok, _ = is_admissible(bp, weight)
        if ok:
            return weight
    raise AssertionError("failed to sample an admissible weight")
