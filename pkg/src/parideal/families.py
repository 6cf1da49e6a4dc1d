"""Explicit abelian antichain families and closed-form counts for types A-D.

Each family is generated from its index pattern in simple-root coordinates.
J-relative families are obtained by imposing, per member, the index
conditions under which that root is J-admissible (for instance alpha_{i,j}
needs i, j outside J, while beta_{k,k+1} tolerates k in J).
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

from .poset_ideals import nodeset
from .rootsys import CLASSICAL, RootSystem, RootSystemSpec, UnsupportedError, build_root_system, canonical


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n and n >= 0 else 0


# -- roots by name -------------------------------------------------------------

def _seg(n: int, i: int, j: int) -> list[int]:
    return [1 if i <= k <= j else 0 for k in range(1, n + 1)]


def _plus(*vs) -> tuple[int, ...]:
    return tuple(map(sum, zip(*vs)))


def _unit(n: int, i: int) -> list[int]:
    return _seg(n, i, i)


# -- index patterns -------------------------------------------------------------

def nested(indices, s: int, strict: bool = True) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs (i_1..i_s, j_1..j_s) with i_1<...<i_s < j_s<...<j_1 drawn from indices.

    With ``strict=False`` the innermost pair may also satisfy i_s == j_s.
    """
    indices = sorted(indices)
    if s == 0:
        yield (), ()
        return
    for c in combinations(indices, 2 * s):
        yield c[:s], tuple(reversed(c[s:]))
    if not strict:
        for c in combinations(indices, 2 * s - 1):
            yield c[:s], tuple(reversed(c[s - 1:]))


def _increasing(indices, s: int, weak: bool) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(i_1<...<i_s, j_1<...<j_s) with i_s < j_1, or i_s <= j_1 when ``weak``."""
    indices = sorted(indices)
    for c in combinations(indices, 2 * s):
        yield c[:s], c[s:]
    if weak:
        for c in combinations(indices, 2 * s - 1):
            yield c[:s], c[s - 1:]


# -- per-type generators (J = empty) ------------------------------------------------
# Each yields (family label, tuple of (kind, indices) members, tuple of roots).

def _families_A(n: int, s: int):
    for i, j in _increasing(range(1, n + 1), s, weak=True):
        members = tuple(("a", (ik, jk)) for ik, jk in zip(i, j))
        yield "A", members, tuple(_plus(_seg(n, ik, jk)) for ik, jk in zip(i, j))


def _families_B(n: int, s: int):
    def beta(k, l):
        return _plus(_seg(n, k, n), _seg(n, l, n))

    for i, j in nested(range(1, n + 1), s):
        yield "1", tuple(("b", p) for p in zip(i, j)), tuple(beta(*p) for p in zip(i, j))
    for l in range(1, n + 1):
        for i, j in nested(range(2, n + 1), s - 1):
            if s > 1 and j[0] > l:
                continue
            yield (
                "2",
                (("a1", (l,)),) + tuple(("b", p) for p in zip(i, j)),
                (_plus(_seg(n, 1, l)),) + tuple(beta(*p) for p in zip(i, j)),
            )


def _families_C(n: int, s: int):
    def beta(k, l):
        return _plus(_seg(n, k, n - 1), _seg(n, l, n))

    for i, j in nested(range(1, n), s, strict=False):
        yield "1", tuple(("b", p) for p in zip(i, j)), tuple(beta(*p) for p in zip(i, j))
    for l in range(1, n + 1):
        for i, j in nested(range(1, n), s - 1, strict=False):
            if s > 1 and not l < i[0]:
                continue
            yield (
                "2",
                (("an", (l,)),) + tuple(("b", p) for p in zip(i, j)),
                (_plus(_seg(n, l, n)),) + tuple(beta(*p) for p in zip(i, j)),
            )


def _d_roots(n: int):
    def beta(p, q):
        return _plus(_seg(n, p, n - 2), _unit(n, n - 1), _unit(n, n), _seg(n, q, n - 2))

    def gamma(i, last):
        return _plus(_seg(n, i, n - 2), _unit(n, last))

    def delta(i):
        return _plus(_seg(n, i, n - 2), _unit(n, n - 1), _unit(n, n))

    return beta, gamma, delta


def _families_D(n: int, s: int):
    beta, gamma, delta = _d_roots(n)
    tilde = range(1, n - 1)

    def bs(i, j):
        return tuple(("b", p) for p in zip(i, j)), tuple(beta(*p) for p in zip(i, j))

    # 1: nested beta_{i,j}
    for i, j in nested(tilde, s):
        yield ("1", *bs(i, j))
    # 2: alpha_{1,j0} over nested betas with 1 < i_1 and j_1 <= j0
    for j0 in tilde:
        for i, j in nested(range(2, n - 1), s - 1):
            if s > 1 and j[0] > j0:
                continue
            m, r = bs(i, j)
            yield "2", (("a1", (j0,)),) + m, (_plus(_seg(n, 1, j0)),) + r
    # 3: gamma_{1,n-1}, gamma_{1,n} over nested betas with 1 < i_1
    if s >= 2:
        for i, j in nested(range(2, n - 1), s - 2):
            m, r = bs(i, j)
            yield "3", (("g", (1, n - 1)), ("g", (1, n))) + m, (gamma(1, n - 1), gamma(1, n)) + r
    # 4: gamma_{i0,*}, delta_{i1} over nested betas with i0 < i1 < i_2
    if s >= 2:
        for i0 in tilde:
            for i1 in tilde:
                if not i0 < i1:
                    continue
                for i, j in nested(range(i1 + 1, n - 1), s - 2):
                    m, r = bs(i, j)
                    for last in (n - 1, n):
                        yield "4", (("g", (i0, last)), ("d", (i1,))) + m, (gamma(i0, last), delta(i1)) + r
    # 5: gamma_{1,n-1}, gamma_{1,n}, delta_{i1} over nested betas with 1 < i1 < i_2
    if s >= 3:
        for i1 in range(2, n - 1):
            for i, j in nested(range(i1 + 1, n - 1), s - 3):
                m, r = bs(i, j)
                yield (
                    "5",
                    (("g", (1, n - 1)), ("g", (1, n)), ("d", (i1,))) + m,
                    (gamma(1, n - 1), gamma(1, n), delta(i1)) + r,
                )
    # 6: one of gamma_{i0,n-1}, gamma_{i0,n}, delta_{i0} over nested betas with i0 < i_1;
    #    for s = 1 also the simple roots alpha_{n-1}, alpha_n (gamma_{n-1,*})
    for i0 in tilde:
        for i, j in nested(range(i0 + 1, n - 1), s - 1):
            m, r = bs(i, j)
            yield "6", (("g", (i0, n - 1)),) + m, (gamma(i0, n - 1),) + r
            yield "6", (("g", (i0, n)),) + m, (gamma(i0, n),) + r
            yield "6", (("d", (i0,)),) + m, (delta(i0),) + r
    if s == 1:
        yield "6", (("s", (n - 1,)),), (tuple(_unit(n, n - 1)),)
        yield "6", (("s", (n,)),), (tuple(_unit(n, n)),)


_GENERATORS = {"A": _families_A, "B": _families_B, "C": _families_C, "D": _families_D}


# -- J-admissibility by index conditions --------------------------------------------

def _admissible(family: str, n: int, kind: str, idx: tuple, J: frozenset[int]) -> bool:
    if family == "A":
        i, j = idx
        return i not in J and j not in J
    if family == "B":
        if kind == "b":
            k, l = idx
            return l not in J and (k not in J or l == k + 1)
        return 1 not in J and idx[0] not in J  # alpha_{1,l}
    if family == "C":
        if kind == "b":
            return not (set(idx) & J)
        return idx[0] not in J and n not in J  # alpha_{l,n}
    # D
    if kind == "b":
        p, q = idx
        return q not in J and (p not in J or q == p + 1)
    if kind == "a1":
        return 1 not in J and idx[0] not in J
    if kind == "s":
        return idx[0] not in J
    if kind == "g":
        i, last = idx
        return i not in J and last not in J
    (i,) = idx  # delta_i
    return n - 1 not in J and n not in J and (i not in J or i == n - 2)


def _spec(spec) -> RootSystemSpec:
    if isinstance(spec, RootSystem):
        return spec.spec
    if isinstance(spec, RootSystemSpec):
        return spec
    return build_root_system(spec).spec


def family_members(spec, J=(), s: int = 1):
    """(label, members, roots) for every family element of size s that is a J-antichain."""
    spec = _spec(spec)
    if spec.family not in CLASSICAL:
        raise UnsupportedError(f"no explicit families for type {spec.family}")
    rs = build_root_system(spec)
    J = nodeset(rs, J)
    n = spec.rank
    if s == 0:
        yield "0", (), ()
        return
    for label, members, roots in _GENERATORS[spec.family](n, s):
        if all(_admissible(spec.family, n, kind, idx, J) for kind, idx in members):
            yield _j_label(spec.family, label, members, J), members, roots


def _j_label(family, label, members, J):
    # the innermost beta_{i,i+1} with i in J forms the second J-subfamily
    if family in "BD" and J:
        for kind, idx in members:
            if kind == "b" and idx[0] in J:
                return f"{label},2"
        return f"{label},1"
    return label


def classical_abelian_families(spec, J=(), s: int = 1, family: str | None = None) -> list[tuple]:
    """The explicit abelian J-antichains of size s, as canonical root tuples."""
    out = []
    for label, _members, roots in family_members(spec, J, s):
        if family is None or label == family or label.split(",")[0] == family:
            out.append(canonical(roots))
    return sorted(out, key=lambda A: [tuple(-c for c in a) for a in A])


def max_size(spec) -> int:
    spec = _spec(spec)
    return build_root_system(spec).rank


def d_series(n: int, s: int) -> int:
    """Corrected six-family count of abelian antichains of size s >= 1 in D_n."""
    return (
        binom(n - 2, 2 * s)
        + binom(n - 3, 2 * s - 2) + binom(n - 3, 2 * s - 1)
        + binom(n - 3, 2 * s - 4)
        + (2 * binom(n - 2, 2 * s - 2) if s >= 2 else 0)
        + binom(n - 3, 2 * s - 5)
        + 3 * binom(n - 2, 2 * s - 1)
        + (2 if s == 1 else 0)
    )


def d_series_uncorrected(n: int, s: int) -> int:
    """The six-term D_n sum before the corrections in ``d_series``; it disagrees with enumeration."""
    return (
        binom(n - 2, 2 * s)
        + (binom(n - 3, 2 * s - 2) + binom(n - 3, 2 * s - 1))
        + 3 * binom(n - 2, 2 * s - 1)
        + binom(n - 3, 2 * s - 4)
        + 2 * binom(n - 2, 2 * s - 1)
        + binom(n - 3, 2 * s - 5)
    )


def closed_form_count(spec, J=(), s: int | None = None, family: str | None = None) -> int:
    """Number of abelian J-antichains with s elements (all sizes if s is None).

    Binomial formulas are used where they exist: A_n for every J, B_n, C_n and
    D_n for J empty, and the 2^(n-#J) totals for C_n.  B_n and D_n with J
    nonempty are counted by expanding the families.  ``family`` selects one
    family label ("1", "2", ...) for B and C with J empty.
    """
    spec = _spec(spec)
    f, n = spec.family, spec.rank
    if f not in CLASSICAL:
        raise UnsupportedError(f"no closed form for type {f}")
    J = nodeset(build_root_system(spec), J)
    m = n - len(J)
    if s is None:
        if family is not None:
            raise UnsupportedError("family totals are not tabulated; give s")
        if f in "AC" or not J:
            return 2 ** m
        return sum(closed_form_count(spec, J, k) for k in range(0, n + 1))
    if s == 0:
        if family not in (None, "0"):
            return 0
        return 1
    if f == "A":
        if family not in (None, "A"):
            raise UnsupportedError(f"type A has a single family, not {family!r}")
        return binom(m, 2 * s) + binom(m, 2 * s - 1)
    if J:
        if f == "C":
            raise UnsupportedError("C_n with J nonempty has only the 2^(n-#J) total in closed form")
        return len(classical_abelian_families(spec, J, s, family))
    if f == "B":
        parts = {"1": binom(n, 2 * s), "2": binom(n - 1, 2 * s - 2) + binom(n - 1, 2 * s - 1)}
    elif f == "C":
        parts = {
            "1": binom(n - 1, 2 * s) + binom(n - 1, 2 * s - 1),
            "2": binom(n - 1, 2 * s - 1) + binom(n - 1, 2 * s - 2),
        }
    else:
        if family is not None:
            return len(classical_abelian_families(spec, J, s, family))
        return d_series(n, s)
    if family is None:
        return sum(parts.values())
    if family not in parts:
        raise UnsupportedError(f"unknown family {family!r} for type {f}")
    return parts[family]
