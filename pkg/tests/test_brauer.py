"""Brauer permutations, graphs, bound quivers and classification."""

from __future__ import annotations

import pytest

from brauer_cover import Arrow, BoundQuiver, BrauerPermutation, validate
from brauer_cover.errors import InvalidBrauerPermutationError, UnknownNameError
from brauer_cover.fixtures import get_fixture
from brauer_cover.randgen import random_brauer, seeded_rng

from conftest import brute_force_cycle_vertices, graph_from_edges


def fix1() -> BrauerPermutation:
    return get_fixture("FIX1").brauer


def single_edge() -> BrauerPermutation:
    return BrauerPermutation.from_cycles([], [("e", "f")], {"e": 1, "f": 1})


# --------------------------------------------------------------------------- #
# validation


def test_fix1_is_valid():
    bp = fix1()
    assert validate(bp.sigma, bp.tau, bp.multiplicity) == []


def test_tau_fixed_point_is_reported():
    sigma = {"e": "f", "f": "e"}
    tau = {"e": "e", "f": "f"}
    violations = validate(sigma, tau, {"e": 1})
    assert any(v.code == "tau_not_free" for v in violations)
    with pytest.raises(InvalidBrauerPermutationError):
        BrauerPermutation(sigma, tau, {"e": 1})


def test_missing_multiplicity_is_reported():
    violations = validate({"e": "e", "f": "f"}, {"e": "f", "f": "e"}, {"e": 1})
    assert any(v.code == "multiplicity_missing" for v in violations)


def test_duplicate_multiplicity_is_reported():
    violations = validate({"e": "f", "f": "e"}, {"e": "f", "f": "e"}, {"e": 1, "f": 1})
    assert any(v.code == "multiplicity_duplicate" for v in violations)


def test_non_bijective_sigma_is_reported():
    violations = validate({"e": "f", "f": "f"}, {"e": "f", "f": "e"}, {"e": 1})
    assert any(v.code == "sigma_not_bijection" for v in violations)


def test_bad_multiplicity_value():
    violations = validate({"e": "e", "f": "f"}, {"e": "f", "f": "e"}, {"e": 0, "f": 1})
    assert any(v.code == "bad_multiplicity" for v in violations)


# --------------------------------------------------------------------------- #
# orbits


def test_sigma_orbit_fix1():
    bp = fix1()
    assert bp.sigma_orbit("1+") == ("1+", "1-", "2+")
    assert bp.n("1+") == 3
    assert bp.sigma_orbit("2-") == ("2-",)
    assert bp.n("2-") == 1
    assert bp.sigma_orbit("1-") == ("1-", "2+", "1+")


def test_sigma_orbit_identity_permutation():
    bp = single_edge()
    assert bp.sigma_orbit("e") == ("e",)


def test_unknown_half_edge():
    with pytest.raises(UnknownNameError):
        fix1().sigma_orbit("zz")


def test_multiplicity_queries():
    bp = fix1()
    assert bp.m("1+") == bp.m("2+") == 1
    assert bp.m("2-") == 2
    # keyed by the least orbit member even if given on another member
    again = BrauerPermutation(bp.sigma, bp.tau, {"2+": 1, "2-": 2})
    assert again.multiplicity == {"1+": 1, "2-": 2}


# --------------------------------------------------------------------------- #
# Brauer graph


def test_graph_fix1():
    graph = fix1().graph()
    assert graph.vertices == (("1+", "1-", "2+"), ("2-",))
    assert graph.edges == (("1+", "1-"), ("2+", "2-"))
    assert graph.incidence["1+"] == ("1+", "1+")  # loop at lambda
    assert graph.incidence["2+"] == ("1+", "2-")
    assert graph.multiplicity == {"1+": 1, "2-": 2}


def test_graph_single_edge():
    graph = single_edge().graph()
    assert len(graph.vertices) == 2
    assert len(graph.edges) == 1
    flags = graph.classify()
    assert not flags.has_loops and not flags.has_multiple_edges
    assert flags.is_tree and flags.is_connected


def test_graph_fix_loop():
    graph = get_fixture("FIX-LOOP").brauer.graph()
    assert len(graph.vertices) == 2
    assert graph.loops() == ("1+", "3+")
    assert graph.incidence["2+"] == ("1+", "2-")


def test_graph_round_trip():
    for fid in ("FIX1", "FIX-LOOP", "FIX-DOUBLE", "FIX-CYCLE"):
        bp = get_fixture(fid).brauer
        graph = bp.graph()
        mult = {min(c): graph.multiplicity[min(c)] for c in graph.vertices}
        rebuilt = BrauerPermutation.from_cycles(graph.vertices, graph.edges, mult)
        assert rebuilt == bp


# --------------------------------------------------------------------------- #
# bound Brauer quiver


def test_bound_quiver_fix1_exact():
    quiver = fix1().bound_quiver()
    assert quiver.vertices == ("1+", "2+")
    assert quiver.arrows == (
        Arrow("1+", "1+", "1+"),
        Arrow("1-", "1+", "2+"),
        Arrow("2+", "2+", "1+"),
        Arrow("2-", "2+", "2+"),
    )
    # zero relations a_{1+}^2, a_{2-}a_{1-}, a_{1-}a_{2+}, a_{2+}a_{2-}
    zero = set(quiver.relations[:4])
    assert zero == {
        ((1, ("1+", "1+")),),
        ((1, ("1-", "2-")),),
        ((1, ("2+", "1-")),),
        ((1, ("2-", "2+")),),
    }
    # commutativity: a_{2+}a_{1-}a_{1+} - a_{1+}a_{2+}a_{1-} and a_{1-}a_{1+}a_{2+} - a_{2-}^2
    assert quiver.relations[4] == ((1, ("1+", "1-", "2+")), (-1, ("1-", "2+", "1+")))
    assert quiver.relations[5] == ((1, ("2+", "1+", "1-")), (-1, ("2-", "2-")))


def evaluate_definition(bp: BrauerPermutation):
    """Independent oracle: literal transcription of the bound-quiver recipe."""
    vertices = sorted({min(e, bp.tau[e]) for e in bp.half_edges})
    arrows = {}
    for e in bp.half_edges:
        arrows[e] = (min(e, bp.tau[e]), min(bp.sigma[e], bp.tau[bp.sigma[e]]))
    zero = set()
    for e in bp.half_edges:
        zero.add((e, bp.tau[bp.sigma[e]]))  # application order: a_e then a_{tau sigma e}
    comm = set()
    for e in bp.half_edges:
        f = bp.tau[e]
        key = min(e, f)
        mu_key = tuple(bp.sigma_orbit(key)) * bp.m(key)
        mu_other = tuple(bp.sigma_orbit(bp.tau[key])) * bp.m(bp.tau[key])
        comm.add((mu_key, mu_other))
    return vertices, arrows, zero, comm


def test_bound_quiver_two_element_instance():
    # hand evaluation on E = {e, f}, sigma = id, m = 1: one vertex, two
    # loop arrows, zero relations a_f a_e and a_e a_f, and the length-one
    # commutativity generator a_e - a_f
    bp = single_edge()
    quiver = bp.bound_quiver()
    assert quiver.vertices == ("e",)
    assert quiver.arrows == (Arrow("e", "e", "e"), Arrow("f", "e", "e"))
    assert set(quiver.relations) == {
        ((1, ("e", "f")),),
        ((1, ("f", "e")),),
        ((1, ("e",)), (-1, ("f",))),
    }


@pytest.mark.parametrize("fid", ["FIX1", "FIX-LOOP", "FIX-DOUBLE", "FIX-CYCLE", "FIX-MULT"])
def test_bound_quiver_agrees_with_definition_oracle(fid):
    bp = get_fixture(fid).brauer
    quiver = bp.bound_quiver()
    vertices, arrows, zero, comm = evaluate_definition(bp)
    assert list(quiver.vertices) == vertices
    assert {a.name: (a.source, a.target) for a in quiver.arrows} == arrows
    got_zero = {r[0][1] for r in quiver.relations if len(r) == 1}
    assert got_zero == zero
    got_comm = {(r[0][1], r[1][1]) for r in quiver.relations if len(r) == 2}
    assert got_comm == comm


def test_bound_quiver_deterministic():
    assert fix1().bound_quiver() == fix1().bound_quiver()


def test_bound_quiver_counts_random():
    rng = seeded_rng(5)
    for _ in range(25):
        bp = random_brauer(rng)
        quiver = bp.bound_quiver()
        n = len(bp.half_edges)
        assert sum(len(c) for c in bp.vertices()) == n == 2 * len(bp.edges())
        assert len(quiver.arrows) == n
        assert sum(1 for r in quiver.relations if len(r) == 1) == n
        assert sum(1 for r in quiver.relations if len(r) == 2) == n // 2
        # BoundQuiver.__post_init__ asserts parallelism of every generator


def test_bound_quiver_rejects_nonparallel_relation():
    with pytest.raises(ValueError):
        BoundQuiver(
            vertices=("u", "v"),
            arrows=(Arrow("x", "u", "v"), Arrow("y", "v", "u")),
            relations=(((1, ("x",)), (1, ("y",))),),
        )


# --------------------------------------------------------------------------- #
# classification


def test_classify_fix1():
    flags = fix1().graph().classify()
    assert flags.has_loops
    assert flags.cycle_vertices == frozenset({"1+"})
    assert not flags.multiplicity_trivial


def test_classify_triangle():
    flags = get_fixture("FIX-CYCLE").brauer.graph().classify()
    assert not flags.is_tree
    assert len(flags.cycle_vertices) == 3
    assert flags.is_connected and not flags.has_loops and not flags.has_multiple_edges


def test_classify_parallel_pair_is_a_cycle():
    graph = graph_from_edges([("u", "v"), ("u", "v")])
    flags = graph.classify()
    assert flags.has_multiple_edges
    assert flags.cycle_vertices == frozenset({min(c) for c in graph.vertices})


def test_classify_disconnected():
    graph = graph_from_edges([("u", "v"), ("x", "y")])
    flags = graph.classify()
    assert not flags.is_connected and not flags.is_tree


def test_cycle_vertices_against_brute_force():
    rng = seeded_rng(11)
    for _ in range(40):
        graph = random_brauer(rng, max_edges=4).graph()
        assert graph.classify().cycle_vertices == brute_force_cycle_vertices(graph)
