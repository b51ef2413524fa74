import random
from fractions import Fraction
from itertools import combinations

import pytest

from errgraph.classic import HammingView, JohnsonView, SrgFamily, catalogue, srg_family
from errgraph.errors import InfeasibleError, UnreachableError
from errgraph.graph import (
    ExplicitGraph,
    ball,
    ball_decomposition_check,
    brute_automorphism_count,
    diameter,
    distance,
    format_adjacency,
    intersection_size,
    is_connected,
    lambda_mu,
    local_profile,
    lp_lower_bound,
    materialize,
    n_of_gamma,
    parse_adjacency,
    regular_upper_bound,
    spheres_up_to,
)
from errgraph.perm import parse_permutation
from errgraph.symt import SymnTView


def complete(n):
    return ExplicitGraph.from_edges(range(n), combinations(range(n), 2), name=f"K{n}")


def cycle(n):
    return ExplicitGraph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def k33():
    return ExplicitGraph.from_edges(range(6), [(a, b) for a in range(3) for b in range(3, 6)], name="K33")


def sym(n, text):
    return parse_permutation(text, n)


def test_distance_examples():
    g = SymnTView(4)
    assert distance(g, g.base_point(), sym(4, "(1 2 3 4)")) == 3
    assert distance(g, g.base_point(), g.base_point()) == 0
    h = HammingView(3, 2)
    assert distance(h, h.parse_vertex("000"), h.parse_vertex("111")) == 3


def test_distance_unreachable():
    g = ExplicitGraph({1: [2], 2: [1], 3: []})
    with pytest.raises(UnreachableError):
        distance(g, 1, 3)
    assert not is_connected(g)


def test_sphere_examples():
    g = SymnTView(4)
    assert [len(s) for s in spheres_up_to(g, g.base_point(), 3)] == [1, 6, 11, 6]
    assert spheres_up_to(g, g.base_point(), 0) == [[g.base_point()]]
    h = HammingView(3, 2)
    assert [len(s) for s in spheres_up_to(h, 0, 1)] == [1, 3]


def test_spheres_are_disjoint_and_cover_the_ball():
    g = JohnsonView(7, 3)
    x = g.base_point()
    spheres = spheres_up_to(g, x, 3)
    flat = [v for s in spheres for v in s]
    assert len(flat) == len(set(flat)) == len(ball(g, x, 3))
    for d, s in enumerate(spheres):
        assert all(g.metric(x, v) == d for v in s)


def test_intersection_examples():
    g = SymnTView(4)
    e = g.base_point()
    assert intersection_size(g, e, sym(4, "(1 2 3)"), 1) == 3
    assert intersection_size(g, e, sym(4, "(1 2)"), 1) == 2
    assert intersection_size(g, e, sym(4, "(1 2)(3 4)"), 0) == 0
    with pytest.raises(ValueError):
        intersection_size(g, e, e, 1)


def test_intersection_far_apart_is_empty():
    h = HammingView(6, 2)
    assert intersection_size(h, 0, h.parse_vertex("111111"), 2) == 0


def test_intersection_on_non_transitive_graph():
    # path 0-1-2-3-4 with a pendant at 2
    g = ExplicitGraph.from_edges(range(6), [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])
    assert intersection_size(g, 0, 4, 2) == len(ball(g, 0, 2) & ball(g, 4, 2)) == 1
    assert intersection_size(g, 1, 5, 1) == 1


def test_decomposition_examples():
    g = SymnTView(4)
    assert ball_decomposition_check(g, g.base_point(), sym(4, "(1 2)"), 2)
    assert ball_decomposition_check(g, g.base_point(), sym(4, "(1 2)"), 0)


@pytest.mark.parametrize("g", [HammingView(4, 2), SymnTView(5), JohnsonView(7, 3), HammingView(3, 3)],
                         ids=lambda g: g.name)
def test_decomposition_random_triples(g):
    rng = random.Random(1)
    vs = list(g.vertices())
    for _ in range(200):
        x, y = rng.sample(vs, 2)
        assert ball_decomposition_check(g, x, y, rng.randint(0, 3))


@pytest.mark.parametrize("g", [SymnTView(4), HammingView(3, 3), JohnsonView(6, 3), cycle(7)], ids=lambda g: g.name)
def test_metric_axioms(g):
    rng = random.Random(2)
    vs = list(g.vertices())
    for _ in range(100):
        a, b, c = (rng.choice(vs) for _ in range(3))
        dab, dba = distance(g, a, b), distance(g, b, a)
        assert dab == dba
        assert distance(g, a, c) <= dab + distance(g, b, c)
        assert (dab == 0) == (a == b)


def test_lambda_mu_examples():
    assert lambda_mu(SymnTView(5)) == (0, 3)
    assert lambda_mu(HammingView(4, 2)) == (0, 2)
    assert lambda_mu(k33()) == (0, 3)
    with pytest.raises(ValueError):
        lambda_mu(complete(4))


def test_n_of_gamma_examples():
    res = n_of_gamma(materialize(SymnTView(5)), 2)  # all pairs, no symmetry used
    assert res.value == 27 and res.argmax == [2]
    assert n_of_gamma(HammingView(4, 2), 1).value == 2
    assert n_of_gamma(JohnsonView(4, 2), 1).value == 4


def test_n_result_invariants():
    for g, r in [(SymnTView(5), 2), (HammingView(4, 2), 2), (cycle(9), 2), (JohnsonView(6, 3), 2)]:
        res = n_of_gamma(g, r)
        assert res.value == max(res.per_distance.values())
        x, y = res.witness
        assert intersection_size(g, x, y, r) == res.value
        assert distance(g, x, y) == res.argmax[0]
        assert set(res.per_distance) <= set(range(1, 2 * r + 1))


def test_transitive_shortcut_agrees_with_all_pairs():
    for g, r in [(HammingView(3, 3), 2), (JohnsonView(6, 2), 2), (SymnTView(4), 2)]:
        assert n_of_gamma(g, r).per_distance == n_of_gamma(materialize(g), r).per_distance


def test_n_of_gamma_budget():
    with pytest.raises(InfeasibleError) as info:
        n_of_gamma(materialize(SymnTView(5)), 2, budget=100)
    assert info.value.budget == 100 and info.value.required > 100


def _r1_graphs():
    graphs = [SymnTView(n) for n in (3, 4, 5)]
    graphs += [HammingView(n, 2) for n in range(2, 6)]
    graphs += [JohnsonView(n, w) for n in range(4, 7) for w in range(2, n - 1)]
    for fam in catalogue():
        g, rep = srg_family(fam)
        if rep.connected and len(g.vertices()) <= 50 and diameter(g) >= 2:
            graphs.append(g)
    return graphs


def test_n1_equals_max_lambda_plus_two_mu():
    for g in _r1_graphs():
        lam, mu = lambda_mu(g)
        assert n_of_gamma(g, 1).value == max(lam + 2, mu), g.name


@pytest.mark.parametrize("n", [3, 4, 5])
def test_hypercube_second_neighbourhood_bound(n):
    res = n_of_gamma(HammingView(n, 2), 2)
    assert res.per_distance[1] == 2 * n
    assert res.per_distance[2] >= res.per_distance[1]


@pytest.mark.parametrize("g", [SymnTView(5), HammingView(3, 3), JohnsonView(7, 3), k33()], ids=lambda g: g.name)
def test_local_profiles_count_edges(g):
    x = g.base_point() if g.transitive else next(iter(g.vertices()))
    k = len(list(g.neighbors(x)))
    for i, sphere in enumerate(spheres_up_to(g, x, 3)):
        profiles = [local_profile(g, x, y) for y in sphere]
        assert all(p.degree == k for p in profiles)
        assert k * len(sphere) == sum(p.c + p.a + p.b for p in profiles)


def test_lp_bound_examples():
    for k in range(2, 12):
        assert lp_lower_bound(k, 1, 5).value == k + 1
        assert lp_lower_bound(k, 2, 2).value == 2 * k
        assert lp_lower_bound(k, 3, 3).value == 3 * k - 4
    for k in range(2, 20):
        for mu in range(1, 8):
            for n1 in range(2, 10):
                b = lp_lower_bound(k, mu, n1)
                assert b.exact.denominator == 1 and b.value == b.exact


def test_lp_bound_on_transposition_graph():
    for n in range(5, 8):
        g = SymnTView(n)
        bound = lp_lower_bound(n * (n - 1) // 2, 3, 3).value
        assert bound == 3 * (n + 1) * (n - 2) // 2 - 1
        assert n_of_gamma(g, 2).per_distance[2] >= bound


def test_regular_upper_bound_examples():
    bound, eq = regular_upper_bound(6, 2, 4)
    assert bound == 4 and eq == (3, 2)
    bound, eq = regular_upper_bound(10, 0, 3)
    assert bound == 5 and eq is None
    petersen = SrgFamily("complement", (), SrgFamily("triangle", (5,))).build()
    assert n_of_gamma(petersen, 1).value == 2
    bound, eq = regular_upper_bound(13, 2, 6)
    assert bound == Fraction(15, 2) and eq is None
    with pytest.raises(ValueError):
        regular_upper_bound(5, 3, 4)


def test_automorphism_counts():
    assert brute_automorphism_count(materialize(SymnTView(3))) == 72
    assert brute_automorphism_count(cycle(4)) == 8
    assert brute_automorphism_count(complete(4)) == 24
    assert brute_automorphism_count(k33()) == 72
    with pytest.raises(InfeasibleError):
        brute_automorphism_count(cycle(50))


def test_explicit_graph_validation():
    with pytest.raises(ValueError):
        ExplicitGraph({1: [2], 2: []})
    with pytest.raises(ValueError):
        ExplicitGraph({1: [1]})


def test_adjacency_round_trip():
    g = materialize(JohnsonView(5, 2))
    text = format_adjacency(g)
    assert text.splitlines()[0].startswith("{1,2}:")
    back = parse_adjacency("# comment\n" + text)
    assert len(back.vertices()) == 10
    assert n_of_gamma(back, 1).value == n_of_gamma(g, 1).value
    assert format_adjacency(back) == text


def test_diameter():
    assert diameter(SymnTView(5)) == 4
    assert diameter(HammingView(4, 3)) == 4
    assert diameter(JohnsonView(7, 3)) == 3
    assert diameter(cycle(7)) == 3
