from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parideal.poset_ideals import (
    antichain_sum_criterion,
    enumerate_J_antichains,
    enumerate_J_ideals,
    enumerate_J_ideals_bruteforce,
    ideal_from_antichain,
    is_abelian_J_antichain,
    is_J_antichain,
    is_J_ideal,
    lemma_checks,
    leq,
    minimal_elements,
    nilpotence_of_ideal,
    restricted_roots,
)
from parideal.rootsys import build_root_system


def brute_nilpotence(rs, Phi):
    """Smallest k with no (k+1)-multiset of Phi summing to a root, by plain search."""
    Phi = list(Phi)
    if not Phi:
        return 0
    k = 1
    while True:
        if not any(tuple(map(sum, zip(*c))) in rs.root_index
                   for c in combinations_with_replacement(Phi, k + 1)):
            return k
        k += 1


def brute_antichains(rs, J):
    pos = [a for a in rs.positive_roots]
    out = []
    for r in range(len(pos) + 1):
        for A in combinations(pos, r):
            if is_J_antichain(rs, A, J):
                out.append(A)
    return out


def test_restricted_roots_b3():
    rs = build_root_system("B3")
    full, pos = restricted_roots(rs, {2, 3})
    assert len(pos) == 4
    assert len(full) == 8


def test_j_antichain_example_a3():
    rs = build_root_system("A3")
    assert not is_J_antichain(rs, [(1, 1, 0), (0, 1, 1)], {1})
    assert is_J_antichain(rs, [(1, 1, 0), (0, 1, 1)], ())


def test_nodeset_out_of_range():
    with pytest.raises(ValueError):
        enumerate_J_antichains(build_root_system("A3"), {4})


def test_non_positive_root_rejected():
    with pytest.raises(ValueError):
        is_J_antichain(build_root_system("A2"), [(-1, 0)])


def test_ideal_from_non_antichain_rejected():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        ideal_from_antichain(rs, [(1, 0), (1, 1)])


def test_nilpotence_small():
    assert nilpotence_of_ideal(build_root_system("A2"), build_root_system("A2").positive_roots) == 2
    assert nilpotence_of_ideal(build_root_system("B2"), build_root_system("B2").positive_roots) == 3
    assert nilpotence_of_ideal(build_root_system("A2"), ()) == 0
    rs = build_root_system("G2")
    assert nilpotence_of_ideal(rs, [rs.theta]) == 1


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C3", "G2"])
def test_nilpotence_against_brute_force(name):
    rs = build_root_system(name)
    for A in enumerate_J_antichains(rs):
        Phi = ideal_from_antichain(rs, A)
        assert nilpotence_of_ideal(rs, Phi) == brute_nilpotence(rs, Phi)


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C3", "G2"])
def test_enumeration_matches_subset_filter(name):
    rs = build_root_system(name)
    for mask in range(1 << rs.rank):
        J = {i + 1 for i in range(rs.rank) if mask >> i & 1}
        assert set(enumerate_J_antichains(rs, J)) == set(brute_antichains(rs, J))


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2"])
def test_ideal_enumerations_agree(name):
    rs = build_root_system(name)
    for mask in range(1 << rs.rank):
        J = {i + 1 for i in range(rs.rank) if mask >> i & 1}
        fast = {frozenset(P) for P in enumerate_J_ideals(rs, J)}
        slow = {frozenset(P) for P in enumerate_J_ideals_bruteforce(rs, J)}
        assert fast == slow
        assert all(is_J_ideal(rs, P, J) for P in fast)


@pytest.mark.parametrize("name,total", [("A3", 14), ("A6", 429), ("B3", 20), ("D4", 50), ("G2", 8), ("F4", 105)])
def test_antichain_totals_catalan(name, total):
    # all antichains of R+ (J empty): the Catalan number of the type
    assert len(enumerate_J_antichains(build_root_system(name))) == total


def test_enumeration_deterministic_and_unique():
    rs = build_root_system("D4")
    a = enumerate_J_antichains(rs, {2})
    assert a == enumerate_J_antichains(rs, {2})
    assert len(set(a)) == len(a)


def test_parallel_split_is_deterministic():
    rs = build_root_system("B4")
    assert enumerate_J_antichains(rs, workers=3) == enumerate_J_antichains(rs, workers=1)
    assert enumerate_J_antichains(rs, abelian_only=True, workers=2) == enumerate_J_antichains(rs, abelian_only=True)


def test_threads_from_environment(monkeypatch):
    rs = build_root_system("A4")
    serial = enumerate_J_antichains(rs)
    monkeypatch.setenv("PARIDEAL_THREADS", "2")
    assert enumerate_J_antichains(rs) == serial


def test_size_filter():
    rs = build_root_system("A3")
    assert len(enumerate_J_antichains(rs, abelian_only=True)) == 8
    assert len(enumerate_J_antichains(rs, abelian_only=True, size=1)) == 6
    assert enumerate_J_antichains(rs, size=0) == [()]


def test_abelian_with_j_a3():
    assert len(enumerate_J_antichains(build_root_system("A3"), {1}, abelian_only=True)) == 4


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4"])
def test_abelian_criterion_agrees_with_nilpotence(name):
    rs = build_root_system(name)
    for mask in range(1 << rs.rank):
        J = {i + 1 for i in range(rs.rank) if mask >> i & 1}
        for A in enumerate_J_antichains(rs, J):
            nil = nilpotence_of_ideal(rs, ideal_from_antichain(rs, A, J))
            assert is_abelian_J_antichain(rs, A, J) == (nil <= 1)


def test_sum_criterion_counts_repetitions():
    # C2: theta = 2 alpha_1 + alpha_2, so alpha_1 + alpha_1 <= theta
    rs = build_root_system("C2")
    assert not antichain_sum_criterion(rs, [(1, 0)], 1)
    assert nilpotence_of_ideal(rs, ideal_from_antichain(rs, [(1, 0)])) > 1


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_lemma_checks_pass(name):
    for claim in lemma_checks(build_root_system(name)):
        assert claim["failure_count"] == 0, claim
        assert claim["instances_checked"] > 0 or claim["claim"] == "triple-sums"


NAMES = ["A3", "A4", "B3", "C3", "D4", "G2"]


@settings(max_examples=80, deadline=None)
@given(name=st.sampled_from(NAMES), data=st.data())
def test_bijection_round_trip(name, data):
    rs = build_root_system(name)
    J = data.draw(st.sets(st.integers(1, rs.rank)))
    chains = enumerate_J_antichains(rs, J)
    A = data.draw(st.sampled_from(chains))
    Phi = ideal_from_antichain(rs, A, J)
    assert minimal_elements(rs, Phi) == tuple(A)
    assert is_J_ideal(rs, Phi, J)


@settings(max_examples=80, deadline=None)
@given(name=st.sampled_from(NAMES), data=st.data())
def test_ideal_is_up_closed(name, data):
    rs = build_root_system(name)
    A = data.draw(st.sampled_from(enumerate_J_antichains(rs)))
    Phi = set(ideal_from_antichain(rs, A))
    for a in Phi:
        for b in rs.positive_roots:
            if leq(a, b):
                assert b in Phi
