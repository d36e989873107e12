"""Path weights, admissibility and homogeneity."""

from __future__ import annotations

import pytest

from brauer_cover import (
    BrauerPermutation,
    GroupSpec,
    GWeight,
    is_admissible,
    is_homogeneous_brauer,
    is_homogeneous_quiver,
    path_weight,
)
from brauer_cover.errors import UnknownNameError
from brauer_cover.fixtures import get_fixture
from brauer_cover.randgen import random_brauer, random_total_weight, seeded_rng, small_groups


def test_path_weight_s3_special_cycle():
    fix = get_fixture("FIX-S3")
    # mu_{1+} = a_{2+} a_{1-} a_{1+} has weight a*a*a = 1 in the order-6 group
    w = path_weight(fix.weight, ("1+", "1-", "2+"))
    assert fix.weight.group.is_identity(w)


def test_path_weight_single_arrow():
    fix = get_fixture("FIX-S3")
    assert path_weight(fix.weight, ("2-",)) == fix.weight["2-"]


def test_path_weight_cycle_fixture():
    fix = get_fixture("FIX-CYCLE")
    # mu_{1-} = a_{2-} a_{1-} has weight a * a^-1 = 1
    assert fix.weight.group.is_identity(path_weight(fix.weight, ("1-", "2-")))


def test_path_weight_unknown_arrow():
    fix = get_fixture("FIX-S3")
    with pytest.raises(UnknownNameError):
        path_weight(fix.weight, ("nope",))


def test_admissible_fix_mult():
    fix = get_fixture("FIX-MULT")
    assert is_admissible(fix.brauer, fix.weight) == (True, None)


def test_admissible_identity_weight():
    bp = get_fixture("FIX1").brauer
    weight = GWeight.total(GroupSpec.cyclic(4), bp.half_edges)
    assert is_admissible(bp, weight) == (True, None)


def test_not_admissible_with_witness():
    fix = get_fixture("FIX-MULT")
    group = fix.weight.group
    bad = GWeight.from_words(group, fix.brauer.half_edges, {"1+": "a", "1-": "a^2"})
    ok, witness = is_admissible(fix.brauer, bad)
    assert not ok and witness == "1+"  # (a)^2 = a^2 != 1 in C6


def test_admissible_implies_homogeneous():
    rng = seeded_rng(23)
    from brauer_cover.randgen import random_admissible_weight

    for fid in ("FIX-MULT", "FIX-LOOP", "FIX-DOUBLE", "FIX-S3"):
        fix = get_fixture(fid)
        assert is_homogeneous_brauer(fix.brauer, fix.weight) == (True, None)
    for _ in range(30):
        bp = random_brauer(rng)
        group = rng.choice(small_groups())
        weight = random_admissible_weight(rng, bp, group)
        assert is_admissible(bp, weight)[0]
        assert is_homogeneous_brauer(bp, weight)[0]


def test_homogeneous_witness_on_fix1():
    bp = get_fixture("FIX1").brauer
    weight = GWeight.from_words(GroupSpec.infinite_cyclic(), bp.half_edges, {"2-": "a"})
    ok, witness = is_homogeneous_brauer(bp, weight)
    # W(mu_{2+}^1) = 1 but W(mu_{2-}^2) = a^2
    assert not ok and witness == "2+"


def test_homogeneous_single_edge_reduces_to_equality():
    bp = BrauerPermutation.from_cycles([], [("e", "f")], {"e": 1, "f": 1})
    group = GroupSpec.cyclic(5)
    same = GWeight.from_words(group, bp.half_edges, {"e": "a^2", "f": "a^2"})
    assert is_homogeneous_brauer(bp, same) == (True, None)
    different = GWeight.from_words(group, bp.half_edges, {"e": "a^2", "f": "a^3"})
    assert is_homogeneous_brauer(bp, different)[0] is False


def test_homogeneous_quiver_br1():
    fix = get_fixture("FIX-BR1")
    assert is_homogeneous_quiver(fix.quiver, fix.weight) == (True, None)


def test_homogeneous_quiver_br1_broken():
    fix = get_fixture("FIX-BR1")
    bad = GWeight.from_words(
        fix.weight.group, [a.name for a in fix.quiver.arrows], {"a2": "a"}
    )  # b2 now weight 1: the two commutativity paths disagree
    ok, witness = is_homogeneous_quiver(fix.quiver, bad)
    assert not ok and witness == 0


def test_monomial_generators_always_homogeneous():
    fix = get_fixture("FIX-BR1")
    from brauer_cover import BoundQuiver

    monomial = BoundQuiver(
        fix.quiver.vertices,
        fix.quiver.arrows,
        tuple(r for r in fix.quiver.relations if len(r) == 1),
    )
    rng = seeded_rng(3)
    group = GroupSpec.cyclic(6)
    for _ in range(10):
        values = {a.name: rng.choice(group.elements()) for a in monomial.arrows}
        assert is_homogeneous_quiver(monomial, GWeight(group, values)) == (True, None)


def test_brauer_and_quiver_homogeneity_agree():
    # the commutativity generators encode exactly the homogeneity equation
    rng = seeded_rng(7)
    for _ in range(60):
        bp = random_brauer(rng)
        group = rng.choice(small_groups())
        weight = random_total_weight(rng, bp, group)
        assert is_homogeneous_brauer(bp, weight)[0] == is_homogeneous_quiver(bp.bound_quiver(), weight)[0]


def test_path_weight_multiplicative():
    rng = seeded_rng(13)
    for _ in range(40):
        bp = random_brauer(rng)
        group = rng.choice(small_groups())
        weight = random_total_weight(rng, bp, group)
        # random composable walk: successive arrows a_e, a_{sigma e}, ...
        e = rng.choice(bp.half_edges)
        length = rng.randint(2, 6)
        walk = [e]
        for _ in range(length - 1):
            walk.append(bp.sigma[walk[-1]])
        cut = rng.randint(1, length - 1)
        first, second = tuple(walk[:cut]), tuple(walk[cut:])
        assert path_weight(weight, tuple(walk)) == weight.group.multiply(
            path_weight(weight, second), path_weight(weight, first)
        )


def test_total_weight_requires_known_names():
    bp = get_fixture("FIX1").brauer
    with pytest.raises(UnknownNameError):
        GWeight.from_words(GroupSpec.cyclic(2), bp.half_edges, {"zz": "a"})
