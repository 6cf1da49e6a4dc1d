from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parideal.rootsys import (
    ConfigurationError,
    RootSystemSpec,
    UnsupportedError,
    build_root_system,
    cartan_matrix,
    canonical,
    d_coeff,
    height,
)

# standard positive-root counts per type
POSITIVE_COUNTS = {
    **{f"A{n}": n * (n + 1) // 2 for n in range(1, 8)},
    **{f"B{n}": n * n for n in range(2, 7)},
    **{f"C{n}": n * n for n in range(2, 7)},
    **{f"D{n}": n * (n - 1) for n in range(3, 8)},
    "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}

CLASSICAL_SMALL = ["A1", "A3", "A5", "B2", "B4", "C3", "C5", "D4", "D5"]


@pytest.mark.parametrize("name,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_count(name, count):
    assert len(build_root_system(name).positive_roots) == count


@pytest.mark.parametrize("name", sorted(POSITIVE_COUNTS))
def test_theta_is_unique_maximum(name):
    rs = build_root_system(name)
    assert all(all(t >= c for t, c in zip(rs.theta, a)) for a in rs.positive_roots)
    assert rs.pairing(rs.theta, rs.theta) == 2
    assert rs.is_long(rs.theta)


@pytest.mark.parametrize("name", sorted(POSITIVE_COUNTS))
def test_root_set_symmetric_and_closed_under_reflections(name):
    rs = build_root_system(name)
    assert len(rs.roots) == 2 * len(rs.positive_roots)
    for a in rs.roots:
        assert rs.negate(a) in rs.root_index
        for i in range(1, rs.rank + 1):
            assert rs.reflect(i, a) in rs.root_index


def test_known_highest_roots():
    assert build_root_system("C3").theta == (2, 2, 1)
    assert build_root_system("B3").theta == (1, 2, 2)
    assert build_root_system("F4").theta == (2, 3, 4, 2)
    assert build_root_system("G2").theta == (2, 3)
    assert build_root_system("E8").theta == (2, 3, 4, 6, 5, 4, 3, 2)


def test_cartan_convention_b2():
    # alpha_2 is short in B2: <alpha_1^vee, alpha_2> = -1, <alpha_2^vee, alpha_1> = -2
    a = cartan_matrix(RootSystemSpec("B", 2))
    assert [list(r) for r in a] == [[2, -1], [-2, 2]]


def test_a2_basics():
    rs = build_root_system("A2")
    assert rs.positive_roots == ((1, 0), (0, 1), (1, 1))
    assert rs.theta == (1, 1)
    pairs = [(a, b) for a in rs.positive_roots for b in rs.positive_roots
             if a < b and rs.add_roots(a, b) is not None]
    assert len(pairs) == 1  # only alpha_1 + alpha_2
    assert rs.pairing((1, 0), (0, 1)) == -1


def test_g2_root_addition():
    rs = build_root_system("G2")
    assert rs.add_roots((0, 1), (1, 2)) == (1, 3)
    assert rs.add_roots((1, 0), (1, 0)) is None


def test_height_and_coefficients():
    assert height((1, 2, 2)) == 5
    assert d_coeff((1, 2, 2), 3) == 2


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("D", 2), ("E", 5), ("F", 3), ("G", 3), ("H", 3)])
def test_bad_spec_rejected(bad):
    with pytest.raises(ConfigurationError):
        RootSystemSpec(*bad)


def test_parse_spec():
    assert RootSystemSpec.parse("b3") == RootSystemSpec("B", 3)
    with pytest.raises(ConfigurationError):
        RootSystemSpec.parse("Q")


def test_pairing_length_mismatch():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        rs.pairing((1, 0), (1, 0, 0))


def test_epsilon_last_simple_root():
    assert build_root_system("B3").to_epsilon((0, 0, 1)) == (0, 0, 1)
    assert build_root_system("C3").to_epsilon((0, 0, 1)) == (0, 0, 2)
    assert build_root_system("D4").to_epsilon((0, 0, 0, 1)) == (0, 0, 1, 1)
    assert build_root_system("C3").to_epsilon((2, 2, 1)) == (2, 0, 0)


def test_epsilon_unsupported_for_exceptional():
    with pytest.raises(UnsupportedError):
        build_root_system("G2").to_epsilon((1, 0))


@pytest.mark.parametrize("name", CLASSICAL_SMALL)
def test_epsilon_round_trip(name):
    rs = build_root_system(name)
    for a in rs.roots:
        assert rs.from_epsilon(rs.to_epsilon(a)) == a


@pytest.mark.parametrize("name", CLASSICAL_SMALL)
def test_pairing_matches_euclidean_form(name):
    # long roots of squared length 2 in types A, B, D; in C the long roots 2 eps_i have length 4
    rs = build_root_system(name)
    scale = Fraction(1, 2) if rs.family == "C" else 1
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            ea, eb = rs.to_epsilon(a), rs.to_epsilon(b)
            assert rs.pairing(a, b) == scale * sum(x * y for x, y in zip(ea, eb))


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "F4"])
def test_fundamental_weights_dual_to_coroots(name):
    rs = build_root_system(name)
    for i in range(1, rs.rank + 1):
        w = rs.fundamental_weight(i)
        for j in range(1, rs.rank + 1):
            assert rs.coroot_pairing(w, j) == (1 if i == j else 0)


def test_f4_omega4():
    assert build_root_system("F4").fundamental_weight(4) == (1, 2, 3, 2)


def test_weyl_group_orders():
    assert len(build_root_system("A3").weyl_group_perms()) == 24
    assert len(build_root_system("B3").weyl_group_perms()) == 48
    assert len(build_root_system("G2").weyl_group_perms()) == 12
    assert len(build_root_system("F4").weyl_group_perms()) == 1152
    with pytest.raises(UnsupportedError):
        build_root_system("E6").weyl_group_perms()


def test_canonical_order_and_dedup():
    assert canonical([(1, 1), (0, 1), (1, 0), (0, 1)]) == ((1, 0), (0, 1), (1, 1))


SYSTEMS = ["A2", "A3", "B3", "C3", "D4", "G2", "F4"]


@settings(max_examples=60, deadline=None)
@given(name=st.sampled_from(SYSTEMS), data=st.data())
def test_dominant_representative(name, data):
    rs = build_root_system(name)
    lam = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank)))
    dom, word = rs.dominant_representative(lam)
    assert rs.is_dominant(dom)
    assert rs.apply_word(word, lam) == tuple(dom)
    assert rs.apply_inverse_word(word, dom) == tuple(Fraction(x) for x in lam)
    # the Weyl group preserves the form
    assert rs.pairing(dom, dom) == rs.pairing(lam, lam)


@settings(max_examples=60, deadline=None)
@given(name=st.sampled_from(["A4", "B3", "C4", "D4"]), data=st.data())
def test_epsilon_round_trip_weights(name, data):
    rs = build_root_system(name)
    v = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=rs.rank, max_size=rs.rank)))
    assert rs.weight_from_epsilon(rs.to_epsilon(v)) == v
