"""Root subsets cut out by a weight, and irreducible ideals of parabolics.

A subset ``S`` of the full root system is a tuple of coefficient tuples (both
signs allowed).  Weights are handled through ``2 rho_S``, the plain sum of the
members of ``S``, which keeps everything integral.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Sequence

from .poset_ideals import nodeset, restricted_roots, support
from .rootsys import (
    CLASSICAL,
    Root,
    RootSystem,
    UnsupportedError,
    _vadd,
    _vsub,
    build_root_system,
    canonical,
)


class ScaleCapError(RuntimeError):
    """An exhaustive check was requested beyond its configured size cap."""


def _as_set(S) -> frozenset:
    return frozenset(tuple(a) for a in S)


def _check_roots(rs: RootSystem, S) -> None:
    for a in S:
        if tuple(a) not in rs.root_index:
            raise ValueError(f"{tuple(a)} is not a root of {rs.spec}")


def two_rho(rs: RootSystem, S) -> tuple[int, ...]:
    """Sum of the members of S (that is, 2 rho_S)."""
    total = rs.zero
    for a in S:
        total = _vadd(total, a)
    return total


def max_pairing(rs: RootSystem, lam: Sequence) -> Fraction:
    return max(rs.pairing(lam, a) for a in rs.roots)


def S_of_lambda(rs: RootSystem, lam: Sequence) -> tuple[Root, ...]:
    """Roots on which the pairing with lam is maximal."""
    values = {a: rs.pairing(lam, a) for a in rs.roots}
    top = max(values.values())
    return canonical(a for a, v in values.items() if v == top)


# -- bod ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _distance_table(spec, depth: int) -> dict:
    """Lattice points reachable as sums of at most ``depth`` roots, with minimal count."""
    rs = build_root_system(spec)
    dist = {rs.zero: 0}
    frontier = [rs.zero]
    for d in range(1, depth + 1):
        nxt = []
        for v in frontier:
            for a in rs.roots:
                w = _vadd(v, a)
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def bod(rs: RootSystem, eta: Sequence[int], max_depth: int | None = None) -> int | float:
    """Least number of roots (any signs, repetition allowed) summing to eta.

    Breadth-first search from both ends.  The default depth bound is the sum
    of |coefficients|, which is always attainable with simple roots; a smaller
    ``max_depth`` may return ``math.inf``.
    """
    eta = tuple(eta)
    if len(eta) != rs.rank:
        raise ValueError(f"expected a vector of length {rs.rank}")
    if max_depth is None:
        max_depth = sum(abs(c) for c in eta)
    if eta == rs.zero:
        return 0
    small = _distance_table(rs.spec, 2)
    if eta in small:
        return small[eta]
    # meet in the middle: R = -R, so distances from eta mirror those from 0
    seen_a, seen_b = {rs.zero: 0}, {eta: 0}
    front_a, front_b = [rs.zero], [eta]
    da = db = 0
    while da + db < max_depth:
        if len(front_a) <= len(front_b):
            da += 1
            front_a = _grow(rs, front_a, seen_a, da)
            hit = [seen_b[v] for v in front_a if v in seen_b]
            if hit:
                return da + min(hit)
        else:
            db += 1
            front_b = _grow(rs, front_b, seen_b, db)
            hit = [seen_a[v] for v in front_b if v in seen_a]
            if hit:
                return db + min(hit)
    return math.inf


def _grow(rs, frontier, seen, d):
    nxt = []
    for v in frontier:
        for a in rs.roots:
            w = _vadd(v, a)
            if w not in seen:
                seen[w] = d
                nxt.append(w)
    return nxt


# -- the four conditions ------------------------------------------------------------

def cond_i(rs: RootSystem, S) -> bool:
    """S = S(rho_S) and max rho_S > 0 (tested on 2 rho_S; argmax is scale invariant)."""
    S = _as_set(S)
    if not S:
        return False
    lam = two_rho(rs, S)
    return max_pairing(rs, lam) > 0 and set(S_of_lambda(rs, lam)) == S


def cond_ii(rs: RootSystem, S, lam: Sequence) -> bool:
    """S = S(lam) with max lam > 0, for the given witness weight lam."""
    return max_pairing(rs, lam) > 0 and set(S_of_lambda(rs, lam)) == _as_set(S)


def cond_iii(rs: RootSystem, S, depth: int = 3) -> bool:
    """Minimal root decompositions of elements of Z+S are exactly the S-only ones.

    Checked for every eta that is a sum of at most ``depth`` members of S:
    every S-decomposition of eta must have length bod(eta), and every root that
    occurs in some minimal decomposition of eta must lie in S.
    """
    S = canonical(S)
    if not S:
        return False
    Sset = set(S)
    dist = _distance_table(rs.spec, depth)
    for m in range(1, depth + 1):
        for combo in combinations_with_replacement(S, m):
            eta = combo[0]
            for b in combo[1:]:
                eta = _vadd(eta, b)
            if dist.get(eta) != m:
                return False
            for a in rs.roots:
                if a not in Sset and dist.get(_vsub(eta, a)) == m - 1:
                    return False
    return True


def cond_iv(rs: RootSystem, S) -> bool:
    """No two members of S sum to a root, and gamma + delta in S + S forces gamma in S."""
    S = canonical(S)
    if not S:
        return False
    Sset = set(S)
    sums = set()
    for x in range(len(S)):
        for y in range(x, len(S)):
            s = _vadd(S[x], S[y])
            if s in rs.root_index:
                return False
            sums.add(s)
    for sigma in sums:
        for g in rs.roots:
            if g not in Sset and _vsub(sigma, g) in rs.root_index:
                return False
    return True


def check_equivalence(rs: RootSystem, max_roots: int = 14, depth: int = 3) -> dict:
    """Compare conditions (i), (iii) and (iv) on every nonempty subset of R.

    Where (i) holds, (ii) is also checked with the witness 2 rho_S.
    """
    if len(rs.roots) > max_roots:
        raise ScaleCapError(f"{rs.spec} has {len(rs.roots)} roots; cap is {max_roots}")
    roots = rs.roots
    failures = []
    satisfied = 0
    count = 0
    for mask in range(1, 1 << len(roots)):
        S = tuple(roots[k] for k in range(len(roots)) if mask >> k & 1)
        count += 1
        c1 = cond_i(rs, S)
        c3 = cond_iii(rs, S, depth)
        c4 = cond_iv(rs, S)
        c2 = cond_ii(rs, S, two_rho(rs, S)) if c1 else True
        if not (c1 == c3 == c4) or not c2:
            failures.append({"S": [list(a) for a in S], "i": c1, "ii": c2, "iii": c3, "iv": c4})
        satisfied += c1
    return {
        "claim": "conditions-equivalent",
        "system": str(rs.spec),
        "instances_checked": count,
        "satisfying": satisfied,
        "failures": failures,
    }


# -- classification ------------------------------------------------------------------

def _search_sum_free(rs: RootSystem) -> list[tuple[Root, ...]]:
    """Every S satisfying condition (iv), by depth-first search.

    Each member added must not sum to a root with (or be the negative of) an
    earlier member; both are necessary for (iv) and inherited by subsets, so
    the pruning loses nothing.
    """
    roots = rs.roots
    out = []
    current: list[Root] = []

    def walk(start):
        if current and cond_iv(rs, current):
            out.append(canonical(current))
        for k in range(start, len(roots)):
            a = roots[k]
            neg = rs.negate(a)
            if any(b == neg or _vadd(a, b) in rs.root_index for b in current):
                continue
            if _vadd(a, a) in rs.root_index:
                continue
            current.append(a)
            walk(k + 1)
            current.pop()

    walk(0)
    return out


def _weyl_orbits_of_i0(rs: RootSystem, limit: int = 5000) -> list[tuple[Root, ...]]:
    perms = rs.weyl_group_perms(limit)
    roots = rs.roots
    found = set()
    for J in _proper_subsets(rs.rank):
        base = [rs.root_index[a] for a in _theta_class(rs, J)]
        for w in perms:
            found.add(frozenset(roots[w[k]] for k in base))
    return [canonical(S) for S in found]


def enumerate_irreducible_S(rs: RootSystem, method: str = "auto", verify: bool = True) -> list[tuple[Root, ...]]:
    """All subsets S of R satisfying condition (iv), canonically ordered.

    ``method="search"`` runs a complete pruned subset search.  ``"weyl"``
    collects the Weyl translates of the irreducible ideals of the standard
    parabolics and ``"families"`` expands the classical families; both are
    re-checked against (iv) when ``verify``.  ``"auto"`` picks the search up to
    24 roots, then the Weyl orbits while the group has at most 5000 elements,
    then the families.
    """
    if method == "auto":
        if len(rs.roots) <= 24:
            method = "search"
        else:
            try:
                rs.weyl_group_perms()
                method = "weyl"
            except UnsupportedError:
                if rs.family not in CLASSICAL:
                    raise ScaleCapError(f"no feasible classification method for {rs.spec}")
                method = "families"
    if method == "search":
        return sorted(_search_sum_free(rs), key=_set_key)
    if method == "weyl":
        found = _weyl_orbits_of_i0(rs)
    elif method == "families":
        found = [fs.roots for fs in classical_S_families(rs)]
    else:
        raise ValueError(f"unknown method {method!r}")
    if verify:
        bad = [S for S in found if not cond_iv(rs, S)]
        if bad:
            raise AssertionError(f"{len(bad)} generated sets fail condition (iv)")
    return sorted(found, key=_set_key)


def _set_key(S):
    return (len(S), [tuple(-c for c in a) for a in S])


@dataclass(frozen=True)
class FamilySet:
    label: str
    I: tuple[int, ...]
    J: tuple[int, ...]
    roots: tuple[Root, ...]


def _eps(dim: int, *terms) -> list[int]:
    v = [0] * dim
    for sign, i in terms:
        v[i - 1] += sign
    return v


def classical_S_families(
    rs: RootSystem, equal_pairs_in_C: bool = True, cases_ab_only: bool = False
) -> list[FamilySet]:
    """Expand the families of admissible S for types A-D.

    ``equal_pairs_in_C`` allows i1 == i2 in the C_n terms eps_i1 + eps_i2 (the
    long roots 2 eps_i).  For B_n and D_n the cases (a), (b) alone do
    not exhaust condition (iv); the remaining sets

        +-{eps_i + s_k eps_k : k in K},  K of size >= 2, signs s_k = +-1,

    (the argmax sets of weights with lambda_1 > lambda_2 > 0) are added as case
    (c) unless ``cases_ab_only``.  I and J of a (c) set are the positive and
    negative supports of 2 rho_S.
    """
    f, n = rs.family, rs.rank
    if f not in CLASSICAL:
        raise UnsupportedError(f"no explicit S families for type {f}")
    dim = rs.epsilon_dim
    out: list[FamilySet] = []

    def add(label, I, J, vecs):
        roots = canonical(rs.from_epsilon(v) for v in vecs)
        if roots:
            out.append(FamilySet(label, tuple(I), tuple(J), roots))

    for I, J in _disjoint_pairs(range(1, dim + 1)):
        if f == "A":
            if I and J:
                add("A", I, J, [_eps(dim, (1, i), (-1, j)) for i in I for j in J])
            continue
        vecs = [_eps(dim, (1, i), (-1, j)) for i in I for j in J]
        if f == "C":
            pairs = combinations_with_replacement if equal_pairs_in_C else combinations
            vecs += [_eps(dim, (1, a), (1, b)) for a, b in pairs(I, 2)]
            vecs += [_eps(dim, (-1, a), (-1, b)) for a, b in pairs(J, 2)]
            add("C", I, J, vecs)
        else:
            vecs += [_eps(dim, (1, a), (1, b)) for a, b in combinations(I, 2)]
            vecs += [_eps(dim, (-1, a), (-1, b)) for a, b in combinations(J, 2)]
            add(f"{f}(a)", I, J, vecs)
    if f in "BD":
        for i in range(1, n + 1):
            for sign in (1, -1):
                vecs = [_eps(dim, (sign, i), (sign * t, j)) for j in range(1, n + 1) if j != i for t in (1, -1)]
                if f == "B":
                    vecs.append(_eps(dim, (sign, i)))
                I, J = ((i,), ()) if sign > 0 else ((), (i,))
                add(f"{f}(b)", I, J, vecs)
    if f in "BD" and not cases_ab_only:
        for i in range(1, n + 1):
            others = [k for k in range(1, n + 1) if k != i]
            for size in range(2, n):
                for K in combinations(others, size):
                    for signs in product((1, -1), repeat=size):
                        for sign in (1, -1):
                            vecs = [_eps(dim, (sign, i), (sign * t, k)) for k, t in zip(K, signs)]
                            eps2rho = rs.to_epsilon(two_rho(rs, [rs.from_epsilon(v) for v in vecs]))
                            I = tuple(k + 1 for k, c in enumerate(eps2rho) if c > 0)
                            J = tuple(k + 1 for k, c in enumerate(eps2rho) if c < 0)
                            add(f"{f}(c)", I, J, vecs)
    seen = set()
    unique = []
    for fs in out:
        if fs.roots not in seen:
            seen.add(fs.roots)
            unique.append(fs)
    return unique


def _disjoint_pairs(indices):
    indices = list(indices)
    for r in range(len(indices) + 1):
        for I in combinations(indices, r):
            rest = [k for k in indices if k not in I]
            for q in range(len(rest) + 1):
                for J in combinations(rest, q):
                    yield I, J


def f4_short_fixture(rs: RootSystem) -> tuple[Root, ...]:
    """The F4 set {alpha in R+ : d_4(alpha) = 2}."""
    if rs.spec.family != "F":
        raise UnsupportedError("F4 only")
    return canonical(a for a in rs.positive_roots if a[3] == 2)


def classify(rs: RootSystem, method: str = "auto", with_conditions: bool = True) -> list[dict]:
    """Every admissible S with its family label, index sets and 2 rho_S."""
    lookup = {}
    if rs.family in CLASSICAL:
        for fs in classical_S_families(rs):
            lookup.setdefault(fs.roots, fs)
    rows = []
    for S in enumerate_irreducible_S(rs, method):
        fs = lookup.get(S)
        row = {
            "family": fs.label if fs else ("unmatched" if lookup else str(rs.spec)),
            "I": list(fs.I) if fs else [],
            "J": list(fs.J) if fs else [],
            "size": len(S),
            "two_rho": list(two_rho(rs, S)),
            "roots": [list(a) for a in S],
        }
        if with_conditions:
            row["all_conditions"] = cond_i(rs, S) and cond_iii(rs, S) and cond_iv(rs, S)
        rows.append(row)
    return rows


# -- parabolics and the irreducible ideal -----------------------------------------------

@dataclass(frozen=True)
class Parabolic:
    """Root partition of a parabolic containing the Cartan subalgebra.

    ``origin`` is ``("J", nodes)`` for the standard parabolic of a node set or
    ``("weight", lam)`` for the parabolic of a nonzero weight.
    """

    origin: tuple
    levi_roots: tuple[Root, ...]
    nilradical_roots: tuple[Root, ...]

    @property
    def roots(self) -> frozenset:
        return frozenset(self.levi_roots) | frozenset(self.nilradical_roots)

    def __le__(self, other: "Parabolic") -> bool:
        return self.roots <= other.roots


def parabolic_from_weight(rs: RootSystem, lam: Sequence) -> Parabolic:
    lam = tuple(lam)
    if not any(lam):
        raise ValueError("the zero weight does not define a proper parabolic")
    levi, nil = [], []
    for a in rs.roots:
        v = rs.pairing(lam, a)
        if v == 0:
            levi.append(a)
        elif v > 0:
            nil.append(a)
    return Parabolic(("weight", lam), canonical(levi), canonical(nil))


def parabolic_from_J(rs: RootSystem, J) -> Parabolic:
    J = nodeset(rs, J)
    if len(J) == rs.rank:
        raise ValueError("J must be a proper subset of the nodes")
    full, pos = restricted_roots(rs, J)
    posJ = set(pos)
    return Parabolic(("J", tuple(sorted(J))), full, canonical(a for a in rs.positive_roots if a not in posJ))


def _theta_class(rs: RootSystem, J) -> tuple[Root, ...]:
    J = frozenset(J)
    theta = rs.theta
    return canonical(
        a for a in rs.positive_roots
        if all(t == c for k, (t, c) in enumerate(zip(theta, a)) if k + 1 not in J)
    )


def irreducible_ideal_of_parabolic(rs: RootSystem, p: Parabolic) -> tuple[Root, ...]:
    """Roots of the unique ad-nilpotent ideal of p that is irreducible under the Levi factor.

    For a standard parabolic this is the class of theta: the positive roots
    that agree with theta at every node outside J.  A weight parabolic is first
    moved to a standard one by the Weyl word making the weight dominant.
    """
    kind, data = p.origin
    if kind == "J":
        return _theta_class(rs, data)
    lam, word = rs.dominant_representative(data)
    J = [i for i in range(1, rs.rank + 1) if rs.coroot_pairing(lam, i) == 0]
    return canonical(rs.apply_inverse_word(word, a) for a in _theta_class(rs, J))


def _proper_subsets(n: int):
    for r in range(n):
        yield from combinations(range(1, n + 1), r)


@lru_cache(maxsize=None)
def parabolic_catalogue(spec, limit: int = 5000) -> dict:
    """i0 root set -> list of root sets of all parabolics (containing h) with that i0.

    Every such parabolic is a Weyl translate of a standard one.
    """
    rs = build_root_system(spec)
    perms = rs.weyl_group_perms(limit)
    roots = rs.roots
    cat: dict = {}
    seen = set()
    for J in _proper_subsets(rs.rank):
        p = parabolic_from_J(rs, J)
        pidx = [rs.root_index[a] for a in p.roots]
        iidx = [rs.root_index[a] for a in _theta_class(rs, J)]
        for w in perms:
            P = frozenset(roots[w[k]] for k in pidx)
            if P in seen:
                continue
            seen.add(P)
            cat.setdefault(frozenset(roots[w[k]] for k in iidx), []).append(P)
    return cat


def verify_corollary(rs: RootSystem, S, weyl_limit: int = 5000) -> dict:
    """Check that S is the irreducible ideal of p_{rho_S} and that p_{rho_S} is the largest such parabolic."""
    S = canonical(S)
    if not cond_iv(rs, S):
        raise ValueError("S does not satisfy condition (iv)")
    lam = two_rho(rs, S)
    failures = []
    dom, word = rs.dominant_representative(lam)
    moved = canonical(rs.apply_word(word, a) for a in S)
    J = tuple(i for i in range(1, rs.rank + 1) if rs.coroot_pairing(dom, i) == 0)
    i0_std = _theta_class(rs, J)
    if i0_std != moved:
        failures.append({"check": "i0-standard", "J": list(J)})
    p_rho = parabolic_from_weight(rs, lam)
    if irreducible_ideal_of_parabolic(rs, p_rho) != S:
        failures.append({"check": "i0-weight"})
    # standard parabolics p_J' in the positive system where rho_S is dominant
    p_std = parabolic_from_J(rs, J)
    checked = 0
    for Jp in _proper_subsets(rs.rank):
        if _theta_class(rs, Jp) == moved:
            checked += 1
            if not parabolic_from_J(rs, Jp) <= p_std:
                failures.append({"check": "containment-standard", "J'": list(Jp)})
    # every parabolic containing h, when the Weyl group is small enough
    sweep = None
    try:
        cat = parabolic_catalogue(rs.spec, weyl_limit)
    except UnsupportedError:
        cat = None
    if cat is not None:
        sweep = 0
        big = p_rho.roots
        for P in cat.get(frozenset(S), []):
            sweep += 1
            if not P <= big:
                failures.append({"check": "containment-weyl", "parabolic": sorted(map(list, P))})
        if sweep == 0:
            failures.append({"check": "catalogue-missing"})
    return {
        "claim": "corollary",
        "S": [list(a) for a in S],
        "two_rho": list(lam),
        "J": list(J),
        "standard_parabolics_checked": checked,
        "all_parabolics_checked": sweep,
        "failures": failures,
    }


# -- witness searches--------------------------------------------------------------------

def perp_census(rs: RootSystem, S) -> dict[Root, int]:
    """#{gamma in S : (alpha, gamma) = 0} for each alpha in S (S of long roots, condition (iv))."""
    S = canonical(S)
    if not all(rs.is_long(a) for a in S):
        raise ValueError("perp census needs S to consist of long roots")
    if not cond_iv(rs, S):
        raise ValueError("S does not satisfy condition (iv)")
    return {a: sum(1 for g in S if rs.pairing(a, g) == 0) for a in S}


def lemone_witness(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]):
    """Some (gamma, gamma') with gamma not in {alpha, beta} and alpha + beta = gamma + gamma'."""
    alpha, beta = tuple(alpha), tuple(beta)
    _check_roots(rs, (alpha, beta))
    if not rs.is_long(beta):
        raise ValueError("beta must be a long root")
    if rs.pairing(alpha, beta) != 0:
        raise ValueError("alpha and beta must be orthogonal")
    total = _vadd(alpha, beta)
    for g in rs.roots:
        if g == alpha or g == beta:
            continue
        rest = _vsub(total, g)
        if rest in rs.root_index:
            return g, rest
    return None


def weyl_translate(rs: RootSystem, i: int, S: Iterable) -> tuple[Root, ...]:
    return canonical(rs.reflect(i, a) for a in S)
