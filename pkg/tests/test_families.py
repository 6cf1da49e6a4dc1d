from math import comb

import pytest

from parideal.families import (
    classical_abelian_families,
    closed_form_count,
    d_series,
    d_series_uncorrected,
)
from parideal.poset_ideals import enumerate_J_antichains
from parideal.rootsys import UnsupportedError, build_root_system

CLASSICAL = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D3", "D4", "D5", "D6"]


def subsets(n):
    for mask in range(1 << n):
        yield frozenset(i + 1 for i in range(n) if mask >> i & 1)


def by_size(found):
    out = {}
    for A in found:
        out.setdefault(len(A), set()).add(frozenset(A))
    return out


@pytest.mark.parametrize("name", CLASSICAL)
def test_families_equal_enumeration_for_every_J(name):
    rs = build_root_system(name)
    for J in subsets(rs.rank):
        enumerated = by_size(enumerate_J_antichains(rs, J, abelian_only=True))
        for s in range(0, rs.rank + 2):
            fams = {frozenset(A) for A in classical_abelian_families(rs.spec, J, s)}
            assert fams == enumerated.get(s, set()), (J, s)


@pytest.mark.parametrize("n", range(1, 7))
def test_type_a_per_size(n):
    for s in range(0, n + 1):
        expected = comb(n, 2 * s) + comb(n, 2 * s - 1) if s else 1
        assert closed_form_count(f"A{n}", (), s) == expected


def test_a3_singletons():
    fams = classical_abelian_families("A3", (), 1)
    assert len(fams) == 6


@pytest.mark.parametrize("n", range(2, 6))
def test_type_b_family_counts(n):
    for s in range(1, n + 1):
        assert len(classical_abelian_families(f"B{n}", (), s, family="1")) == comb(n, 2 * s)
        two = comb(n - 1, 2 * s - 2) + comb(n - 1, 2 * s - 1)
        assert len(classical_abelian_families(f"B{n}", (), s, family="2")) == two


def test_b3_family_two_singletons():
    # alpha_{1,l}: roots with d_1 = 1 that reach the last node
    fams = classical_abelian_families("B3", (), 1, family="2")
    roots = [r for (r,) in fams]
    assert roots
    assert all(r[0] == 1 for r in roots)


@pytest.mark.parametrize("name", ["A3", "A5", "C3", "C5"])
def test_parabolic_totals(name):
    rs = build_root_system(name)
    for J in subsets(rs.rank):
        assert len(enumerate_J_antichains(rs, J, abelian_only=True)) == 2 ** (rs.rank - len(J))
        assert closed_form_count(rs.spec, J) == 2 ** (rs.rank - len(J))


def test_c_with_j_has_no_per_size_closed_form():
    with pytest.raises(UnsupportedError):
        closed_form_count("C3", {1}, 1)


@pytest.mark.parametrize("n", range(3, 8))
def test_d_series_matches_enumeration(n):
    rs = build_root_system(f"D{n}")
    sizes = by_size(enumerate_J_antichains(rs, abelian_only=True))
    for s in range(1, n + 1):
        assert d_series(n, s) == len(sizes.get(s, ()))
    assert 1 + sum(d_series(n, s) for s in range(1, n + 1)) == 2 ** n


def test_d_series_uncorrected_differs():
    # the uncorrected sum overcounts singletons in D4
    assert d_series_uncorrected(4, 1) == 13
    assert d_series(4, 1) == 11


def test_d4_total():
    assert closed_form_count("D4") == 16
    assert sum(closed_form_count("D4", (), s) for s in range(0, 5)) == 16


def test_exceptional_has_no_families():
    with pytest.raises(UnsupportedError):
        closed_form_count("G2")
