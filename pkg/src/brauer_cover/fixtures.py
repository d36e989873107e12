"""Built-in fixtures: the worked examples shipped with the package.

Each fixture bundles a Brauer permutation (or a bound quiver for FIX-BR1),
optionally a weight, and a summary of what its covering should look like.
Half edges follow the ``i+``/``i-`` naming of the sources, with tau pairing
``i+`` and ``i-``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .brauer import Arrow, BoundQuiver, BrauerPermutation
from .errors import UnknownNameError
from .groups import GroupSpec
from .weights import GWeight


@dataclass(frozen=True)
class Fixture:
    id: str
    description: str
    brauer: Optional[BrauerPermutation] = None
    quiver: Optional[BoundQuiver] = None
    weight: Optional[GWeight] = None
    expected: dict = None  # summary counts / flags, for display and tests


def _fix1() -> Fixture:
    bp = BrauerPermutation.from_cycles(
        sigma_cycles=[("1+", "1-", "2+")],
        tau_pairs=[("1+", "1-"), ("2+", "2-")],
        multiplicity={"1+": 1, "2-": 2},
    )
    return Fixture(
        "FIX1",
        "one loop plus one pendant edge with multiplicity 2; the running example",
        brauer=bp,
        expected={"vertices": 2, "edges": 2, "loops": 1},
    )


def _fix_mult() -> Fixture:
    bp = BrauerPermutation.from_cycles(
        sigma_cycles=[],
        tau_pairs=[("1+", "1-")],
        multiplicity={"1+": 2, "1-": 3},
    )
    weight = GWeight.from_words(GroupSpec.cyclic(6), bp.half_edges, {"1+": "a^3", "1-": "a^2"})
    return Fixture(
        "FIX-MULT",
        "single edge with multiplicities 2 and 3; multiplicity deletion over C6",
        brauer=bp,
        weight=weight,
        expected={"cover_half_edges": 12, "cover_vertices": 5, "cover_edges": 6, "cover_multiplicity": 1},
    )


def _fix_loop() -> Fixture:
    bp = BrauerPermutation.from_cycles(
        sigma_cycles=[("1+", "1-", "2+"), ("2-", "3-", "3+")],
        tau_pairs=[("1+", "1-"), ("2+", "2-"), ("3+", "3-")],
        multiplicity={"1+": 1, "2-": 1},
    )
    weight = GWeight.from_words(
        GroupSpec.cyclic(2), bp.half_edges, {"1+": "a", "1-": "a", "3+": "a", "3-": "a"}
    )
    return Fixture(
        "FIX-LOOP",
        "two loops joined by an edge; loop deletion over C2",
        brauer=bp,
        weight=weight,
        expected={"cover_half_edges": 12, "cover_vertices": 4, "cover_edges": 6, "cover_loops": 0},
    )


def _fix_double() -> Fixture:
    bp = BrauerPermutation.from_cycles(
        sigma_cycles=[("1+", "2+", "3+", "4+"), ("1-", "2-"), ("3-", "4-")],
        tau_pairs=[("1+", "1-"), ("2+", "2-"), ("3+", "3-"), ("4+", "4-")],
        multiplicity={"1+": 1, "1-": 1, "3-": 1},
    )
    weight = GWeight.from_words(
        GroupSpec.cyclic(2), bp.half_edges, {"1-": "a", "2-": "a", "3-": "a", "4-": "a"}
    )
    return Fixture(
        "FIX-DOUBLE",
        "two double edges in a path; multi-edge deletion over C2 (tree form)",
        brauer=bp,
        weight=weight,
        expected={"cover_half_edges": 16, "cover_vertices": 6, "cover_edges": 8, "cover_simple": True},
    )


def _s3() -> GroupSpec:
    return GroupSpec.perm_group(3, {"a": [1, 2, 0], "b": [1, 0, 2]})


def _fix_s3() -> Fixture:
    base = _fix1()
    weight = GWeight.from_words(
        _s3(), base.brauer.half_edges, {"1+": "a", "1-": "a", "2+": "a", "2-": "b"}
    )
    return Fixture(
        "FIX-S3",
        "the running example weighted in the symmetric group of order 6",
        brauer=base.brauer,
        weight=weight,
        expected={"cover_half_edges": 24, "cover_vertices": 9, "cover_edges": 12, "cover_multiplicity": 1},
    )


def _fix_cycle() -> Fixture:
    bp = BrauerPermutation.from_cycles(
        sigma_cycles=[("1+", "3+"), ("1-", "2-"), ("2+", "3-")],
        tau_pairs=[("1+", "1-"), ("2+", "2-"), ("3+", "3-")],
        multiplicity={"1+": 1, "1-": 1, "2+": 1},
    )
    weight = GWeight.from_words(
        GroupSpec.infinite_cyclic(), bp.half_edges, {"1-": "a^-1", "2-": "a"}
    )
    return Fixture(
        "FIX-CYCLE",
        "a triangle; the hand-picked infinite-cyclic weight unwinds it into a path",
        brauer=bp,
        weight=weight,
        expected={"window_shape": "path", "edge_label_cycle": ["1+", "3+", "2+"]},
    )


def _fix_br1() -> Fixture:
    quiver = BoundQuiver(
        vertices=("1", "2", "3"),
        arrows=(
            Arrow("a1", "1", "2"),
            Arrow("a2", "2", "1"),
            Arrow("b1", "1", "3"),
            Arrow("b2", "3", "1"),
        ),
        relations=(
            ((1, ("a1", "a2")), (-1, ("b1", "b2"))),
            ((1, ("a2", "b1")),),
            ((1, ("b2", "a1")),),
            ((1, ("a2", "a1", "a2")),),
            ((1, ("b2", "b1", "b2")),),
        ),
    )
    weight = GWeight.from_words(
        GroupSpec.infinite_cyclic(), [a.name for a in quiver.arrows], {"a2": "a", "b2": "a"}
    )
    return Fixture(
        "FIX-BR1",
        "two 2-cycles sharing a vertex, bound by a commutativity relation; weighted over Z",
        quiver=quiver,
        weight=weight,
        expected={"window_vertices": 9, "window_arrows": 12},
    )


_REGISTRY = {
    fix.id: fix
    for fix in (_fix1(), _fix_mult(), _fix_loop(), _fix_double(), _fix_s3(), _fix_cycle(), _fix_br1())
}


def fixture_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def get_fixture(fixture_id: str) -> Fixture:
    try:
        return _REGISTRY[fixture_id]
    except KeyError:
        raise UnknownNameError(f"unknown fixture {fixture_id!r}", witness=fixture_id) from None
