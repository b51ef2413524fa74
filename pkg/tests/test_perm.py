from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import cycle_histogram, cycles_of
from errgraph.counts import stirling_first_signless
from errgraph.graph import distance
from errgraph.perm import (
    CycleType,
    Permutation,
    all_permutations,
    apply_transposition,
    cayley_distance,
    class_reps,
    class_size,
    cycle_type,
    enumerate_ball,
    enumerate_class,
    enumerate_sphere,
    parse_permutation,
    same_cycle,
)
from errgraph.symt import SymnTView


def perm_strategy(n_min=1, n_max=9):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation)
    )


def same_degree(k, n_min=1, n_max=9):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.tuples(*[st.permutations(list(range(1, n + 1))).map(Permutation)] * k)
    )


def test_composition_convention():
    x = parse_permutation("(1 2)", 3)
    y = parse_permutation("(2 3)", 3)
    # (xy)(2) = x(y(2)) = x(3) = 3
    assert (x * y)(2) == 3
    assert str(x * y) == "(1 2 3)"


@pytest.mark.parametrize("text,n,expected", [
    ("(1 2 3)(4 5)", 6, "1^1 2^1 3^1"),
    ("()", 4, "1^4"),
    ("(1 2 3 4)", 4, "4^1"),
])
def test_cycle_type_examples(text, n, expected):
    assert str(cycle_type(parse_permutation(text, n))) == expected


def test_apply_transposition_join():
    p = parse_permutation("(1 2)(3 4)", 4)
    q = apply_transposition(p, 1, 3)
    assert q == p * Permutation.transposition(1, 3, 4)
    assert str(q) == "(1 4 3 2)"
    assert q.num_cycles() == p.num_cycles() - 1


def test_apply_transposition_split():
    p = parse_permutation("(1 2 3)", 3)
    q = apply_transposition(p, 1, 2)
    assert str(q) == "(1 3)"
    assert q.num_cycles() == p.num_cycles() + 1


def test_identity_times_transposition():
    e = Permutation.identity(5)
    assert apply_transposition(e, 2, 4) == Permutation.transposition(2, 4, 5)


@pytest.mark.parametrize("q,n,d", [("(1 2 3 4 5)", 5, 4), ("(1 2)(3 4)", 5, 2), ("()", 5, 0)])
def test_cayley_distance_examples(q, n, d):
    e = Permutation.identity(n)
    qq = parse_permutation(q, n)
    assert cayley_distance(e, qq) == d
    assert distance(SymnTView(n), e, qq) == d  # BFS oracle


def test_cayley_distance_equals_bfs_on_sym4():
    g = SymnTView(4)
    vs = list(all_permutations(4))
    for p in vs[:6]:
        for q in vs:
            assert cayley_distance(p, q) == distance(g, p, q)


@pytest.mark.parametrize("parts,n,size", [((2,), 4, 6), ((3,), 4, 8), ((), 6, 1)])
def test_class_size_examples(parts, n, size):
    ct = CycleType.of(n, *parts)
    assert class_size(ct) == size
    assert sum(1 for p in all_permutations(n) if cycle_type(p) == ct) == size


def test_sphere_examples():
    s = list(enumerate_sphere(4, 2))
    assert len(s) == 11
    kinds = sorted(str(cycle_type(p)) for p in s)
    assert kinds.count("1^1 3^1") == 8 and kinds.count("2^2") == 3
    assert list(enumerate_sphere(5, 0)) == [Permutation.identity(5)]
    assert sorted(enumerate_sphere(5, 1)) == sorted(
        Permutation.transposition(i, j, 5) for i, j in combinations(range(1, 6), 2)
    )


def test_class_reps_examples():
    assert {str(c) for c in class_reps(5, 2)} == {"1^2 3^1", "1^1 2^2"}
    s4 = {c.nontrivial for c in class_reps(9, 4)}
    assert s4 == {(5,), (4, 2), (3, 3), (3, 2, 2), (2, 2, 2, 2)}
    assert class_reps(7, 0) == [CycleType((1,) * 7)]


def test_class_reps_rejects_bad_index():
    with pytest.raises(ValueError):
        class_reps(4, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_sphere_membership_matches_distance(n):
    e = Permutation.identity(n)
    by_sphere = {i: set(enumerate_sphere(n, i)) for i in range(n)}
    for i, members in by_sphere.items():
        assert len(members) == stirling_first_signless(n, n - i)
    for p in all_permutations(n):
        i = cayley_distance(e, p)
        assert p in by_sphere[i]


def test_sphere_emits_each_element_once():
    seen = list(enumerate_ball(7, 3))
    assert len(seen) == len(set(seen))


@pytest.mark.parametrize("n", range(1, 13))
def test_class_sizes_sum_to_stirling(n):
    for i in range(n):
        assert sum(class_size(ct) for ct in class_reps(n, i)) == stirling_first_signless(n, n - i)


@pytest.mark.parametrize("n", range(1, 8))
def test_stirling_against_listing(n):
    hist = cycle_histogram(n)
    for k in range(1, n + 1):
        assert stirling_first_signless(n, k) == hist[k]


def test_enumerate_class_members_have_the_type():
    ct = CycleType.of(8, 3, 2, 2)
    members = list(enumerate_class(ct))
    assert len(members) == len(set(members)) == class_size(ct)
    assert all(cycle_type(p) == ct for p in members)


@given(same_degree(3))
def test_associativity(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)


@given(perm_strategy())
def test_inverse_laws(p):
    e = Permutation.identity(p.n)
    assert p * p.inverse() == e == p.inverse() * p
    assert p.inverse().inverse() == p


@given(st.integers(2, 20).flatmap(lambda n: st.tuples(
    st.permutations(list(range(1, n + 1))).map(Permutation),
    st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))))
def test_transposition_changes_cycle_count_by_one(args):
    p, (i, j) = args
    q = apply_transposition(p, i, j)
    joined = not same_cycle(p, (i, j))
    assert q.num_cycles() == p.num_cycles() + (-1 if joined else 1)
    assert cycles_of(q.images) == q.num_cycles()


@given(same_degree(3))
def test_distance_metric_axioms(t):
    a, b, c = t
    assert cayley_distance(a, b) == cayley_distance(b, a)
    assert cayley_distance(a, c) <= cayley_distance(a, b) + cayley_distance(b, c)
    assert (cayley_distance(a, b) == 0) == (a == b)


@given(perm_strategy())
def test_text_round_trip(p):
    assert parse_permutation(str(p), p.n) == p
    assert parse_permutation(p.one_line()) == p


@given(perm_strategy())
def test_cycle_type_round_trip(p):
    ct = cycle_type(p)
    assert CycleType.parse(str(ct)) == ct
    assert ct.n == p.n and ct.num_cycles == p.num_cycles()
    assert cycle_type(ct.representative()) == ct


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_permutation("(1 2 2)", 3)
    with pytest.raises(ValueError):
        parse_permutation("1 1 2")
    with pytest.raises(ValueError):
        parse_permutation("(1 5)", 4)
    with pytest.raises(ValueError):
        CycleType.of(3, 2, 2)
