"""Dominance order on positive roots, J-antichains, J-ideals and their counts.

A node set ``J`` is any iterable of 1-based node indices.  Root sets are
returned as canonically ordered tuples of coefficient tuples.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .rootsys import Root, RootSystem, canonical, _vadd, _vsub


def nodeset(rs: RootSystem, J: Iterable[int] | None) -> frozenset[int]:
    J = frozenset(J or ())
    bad = [j for j in J if not 1 <= j <= rs.rank]
    if bad:
        raise ValueError(f"node indices {sorted(bad)} outside 1..{rs.rank}")
    return J


def leq(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """alpha <= beta in the dominance order (beta - alpha in Q+)."""
    return all(b >= a for a, b in zip(alpha, beta))


def comparable(alpha, beta) -> bool:
    return leq(alpha, beta) or leq(beta, alpha)


def support(alpha: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i, c in enumerate(alpha) if c)


def restricted_roots(rs: RootSystem, J) -> tuple[tuple[Root, ...], tuple[Root, ...]]:
    """(R(J), R+(J)): roots supported on the nodes in J."""
    J = nodeset(rs, J)
    full = tuple(a for a in rs.roots if support(a) <= J)
    return full, tuple(a for a in full if sum(a) > 0)


def _check_positive(rs: RootSystem, roots) -> None:
    for a in roots:
        if tuple(a) not in rs.positive_set:
            raise ValueError(f"{tuple(a)} is not a positive root of {rs.spec}")


def _j_admissible(rs: RootSystem, alpha: Root, J: frozenset[int]) -> bool:
    """alpha avoids R+(J) and alpha - alpha_j is not a root for j in J."""
    if support(alpha) <= J:
        return False
    for j in J:
        probe = list(alpha)
        probe[j - 1] -= 1
        if tuple(probe) in rs.root_index:
            return False
    return True


def is_antichain(roots: Sequence[Root]) -> bool:
    return not any(
        comparable(roots[a], roots[b])
        for a in range(len(roots))
        for b in range(a + 1, len(roots))
    )


def is_J_antichain(rs: RootSystem, A, J=()) -> bool:
    A = [tuple(a) for a in A]
    _check_positive(rs, A)
    J = nodeset(rs, J)
    if len(set(A)) != len(A):
        return False
    return is_antichain(A) and all(_j_admissible(rs, a, J) for a in A)


def is_J_ideal(rs: RootSystem, Phi, J=()) -> bool:
    Phi = {tuple(a) for a in Phi}
    _check_positive(rs, Phi)
    J = nodeset(rs, J)
    full_J, pos_J = restricted_roots(rs, J)
    if Phi & set(pos_J):
        return False
    movers = set(rs.positive_roots) | set(full_J)
    for a in Phi:
        for b in movers:
            s = _vadd(a, b)
            if s in rs.root_index and s not in Phi:
                return False
    return True


def up_set(rs: RootSystem, A) -> tuple[Root, ...]:
    return canonical(b for b in rs.positive_roots if any(leq(a, b) for a in A))


def ideal_from_antichain(rs: RootSystem, A, J=()) -> tuple[Root, ...]:
    """The J-ideal generated by a J-antichain: everything above some member."""
    if not is_J_antichain(rs, A, J):
        raise ValueError(f"{list(A)} is not a J-antichain for J={sorted(nodeset(rs, J))}")
    return up_set(rs, A)


def minimal_elements(rs: RootSystem, Phi) -> tuple[Root, ...]:
    Phi = canonical(Phi)
    return tuple(a for a in Phi if not any(b != a and leq(b, a) for b in Phi))


def nilpotence_of_ideal(rs: RootSystem, Phi) -> int:
    """Least k such that no k+1 members of Phi (repetition allowed) sum to a root.

    Sums are grown one summand at a time; partial sums that exceed theta in
    some coordinate cannot lead to a root and are dropped.
    """
    Phi = canonical(Phi)
    if not Phi:
        return 0
    theta = rs.theta
    hits = []
    layer = set(Phi)
    size = 1
    # a sum of more than ht(theta) positive roots has height above theta
    while layer and size <= sum(theta) + 1:
        hits.append(any(s in rs.root_index for s in layer))
        layer = {s2 for s in layer for b in Phi if leq(s2 := _vadd(s, b), theta)}
        size += 1
    hits.append(False)
    return hits.index(False, 1)


def antichain_sum_criterion(rs: RootSystem, A, k: int) -> bool:
    """Every multiset of k+1 members of A has a sum that is not <= theta."""
    A = canonical(A)
    theta = rs.theta
    for combo in combinations_with_replacement(A, k + 1):
        total = combo[0]
        for b in combo[1:]:
            total = _vadd(total, b)
        if leq(total, theta):
            return False
    return True


def _abelian_single(alpha, theta) -> bool:
    return any(2 * a > t for a, t in zip(alpha, theta))


def _abelian_pair(alpha, beta, theta) -> bool:
    return any(a + b > t for a, b, t in zip(alpha, beta, theta))


def is_abelian_J_antichain(rs: RootSystem, A, J=()) -> bool:
    """Coefficient test for a J-antichain to generate an abelian ideal."""
    A = canonical(A)
    if not is_J_antichain(rs, A, J):
        raise ValueError(f"{list(A)} is not a J-antichain")
    theta = rs.theta
    if not all(_abelian_single(a, theta) for a in A):
        return False
    return all(
        _abelian_pair(A[x], A[y], theta)
        for x in range(len(A))
        for y in range(x + 1, len(A))
    )


# -- enumeration -------------------------------------------------------------

def _candidates(rs: RootSystem, J: frozenset[int], abelian_only: bool) -> list[Root]:
    out = [a for a in rs.positive_roots if _j_admissible(rs, a, J)]
    if abelian_only:
        out = [a for a in out if _abelian_single(a, rs.theta)]
    return out


def _extend(cands, theta, abelian_only, size, start, current, out):
    if size is None or len(current) == size:
        out.append(tuple(current))
        if size is not None:
            return
    for k in range(start, len(cands)):
        a = cands[k]
        if any(comparable(a, b) for b in current):
            continue
        if abelian_only and not all(_abelian_pair(a, b, theta) for b in current):
            continue
        current.append(a)
        _extend(cands, theta, abelian_only, size, k + 1, current, out)
        current.pop()


def _branch(args):
    cands, theta, abelian_only, size, first = args
    out: list = []
    _extend(cands, theta, abelian_only, size, first + 1, [cands[first]], out)
    return out


def _thread_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("PARIDEAL_THREADS")
    return max(1, int(env)) if env else 1


def enumerate_J_antichains(
    rs: RootSystem,
    J=(),
    abelian_only: bool = False,
    size: int | None = None,
    workers: int | None = None,
) -> list[tuple[Root, ...]]:
    """All J-antichains (optionally abelian, optionally of a fixed size).

    Depth-first search over candidates in canonical order; a set is only
    extended by roots after its last member, so each set appears once.  The
    search splits on the first member and the branches are concatenated in
    order, so the output does not depend on ``workers``.
    """
    J = nodeset(rs, J)
    cands = _candidates(rs, J, abelian_only)
    theta = rs.theta
    out: list = []
    if size is None or size == 0:
        out.append(())
    if size == 0:
        return out
    jobs = [(cands, theta, abelian_only, size, k) for k in range(len(cands))]
    n = _thread_count(workers)
    if n > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            branches = list(pool.map(_branch, jobs))
    else:
        branches = [_branch(job) for job in jobs]
    for branch in branches:
        out.extend(branch)
    return out


def enumerate_J_ideals(rs: RootSystem, J=()) -> list[tuple[Root, ...]]:
    """All J-ideals, found as up-sets of R+ without going through antichains.

    Roots are decided from the top down; a root may be included only if every
    positive root directly above it is already included.
    """
    J = nodeset(rs, J)
    order = sorted(rs.positive_roots, key=lambda a: -sum(a))
    covers = {
        a: [b for b in rs.positive_roots if sum(b) == sum(a) + 1 and leq(a, b)]
        for a in order
    }
    out = []

    def walk(k, chosen: set):
        if k == len(order):
            if is_J_ideal(rs, chosen, J):
                out.append(canonical(chosen))
            return
        a = order[k]
        walk(k + 1, chosen)
        if all(b in chosen for b in covers[a]):
            chosen.add(a)
            walk(k + 1, chosen)
            chosen.remove(a)

    walk(0, set())
    return sorted(out, key=lambda s: (len(s), [tuple(-c for c in a) for a in s]))


def enumerate_J_ideals_bruteforce(rs: RootSystem, J=()) -> list[tuple[Root, ...]]:
    """All J-ideals by filtering every subset of R+ (small ranks only)."""
    pos = rs.positive_roots
    if len(pos) > 16:
        raise ValueError("subset filtering is limited to 16 positive roots")
    out = []
    for mask in range(1 << len(pos)):
        sub = [pos[k] for k in range(len(pos)) if mask >> k & 1]
        if is_J_ideal(rs, sub, J):
            out.append(canonical(sub))
    return out


# -- exhaustive lemma checks -------------------------------------------------------

MAX_FAILURES = 20


def claim_report(claim: str, instances: int, failures: list, **extra) -> dict:
    out = {"claim": claim, "instances_checked": instances, "failure_count": len(failures)}
    out.update(extra)
    out["failures"] = failures[:MAX_FAILURES]
    return out


def _all_node_sets(n: int):
    for mask in range(1 << n):
        yield frozenset(i + 1 for i in range(n) if mask >> i & 1)


def check_dominant_below_theta(rs: RootSystem) -> dict:
    """A dominant lambda <= theta is 0 or a root.

    Dominant elements of the root lattice have nonnegative simple-root
    coefficients, so scanning the box 0 <= lambda <= theta is exhaustive.
    """
    from itertools import product

    failures = []
    count = 0
    for lam in product(*(range(t + 1) for t in rs.theta)):
        count += 1
        if rs.is_dominant(lam) and any(lam) and lam not in rs.root_index:
            failures.append(list(lam))
    return claim_report("dominant-below-theta", count, failures)


def check_split_above(rs: RootSystem) -> dict:
    """beta < alpha in R+ implies alpha = gamma + delta with gamma >= beta, gamma, delta in R+."""
    pos = rs.positive_roots
    failures = []
    count = 0
    for alpha in pos:
        for beta in pos:
            if beta == alpha or not leq(beta, alpha):
                continue
            count += 1
            if not any(
                leq(beta, g) and _vsub(alpha, g) in rs.positive_set for g in pos
            ):
                failures.append([list(alpha), list(beta)])
    return claim_report("split-above", count, failures)


def check_jacobi_triples(rs: RootSystem) -> dict:
    """alpha+beta, alpha+beta+gamma in R implies alpha+gamma or beta+gamma in R.

    Triples with gamma = -alpha or gamma = -beta are skipped (one of the two
    sums is then 0) and counted separately.
    """
    R = rs.roots
    idx = rs.root_index
    failures = []
    count = degenerate = 0
    for a in R:
        for b in R:
            ab = _vadd(a, b)
            if ab not in idx:
                continue
            for g in R:
                if _vadd(ab, g) not in idx:
                    continue
                if g == rs.negate(a) or g == rs.negate(b):
                    degenerate += 1
                    continue
                count += 1
                if _vadd(a, g) not in idx and _vadd(b, g) not in idx:
                    failures.append([list(a), list(b), list(g)])
    return claim_report("triple-sums", count, failures, skipped_degenerate=degenerate)


def check_antichain_lemmas(rs: RootSystem) -> list[dict]:
    """For every J and J-antichain A: alpha - gamma is not a root (gamma in R+(J)),
    and distinct members (and members against alpha_j, j in J) pair nonpositively."""
    eq_fail, inn_fail = [], []
    eq_count = inn_count = 0
    for J in _all_node_sets(rs.rank):
        _, posJ = restricted_roots(rs, J)
        simple_J = [rs.simple_root(j) for j in sorted(J)]
        for A in enumerate_J_antichains(rs, J):
            for a in A:
                for g in posJ:
                    eq_count += 1
                    if _vsub(a, g) in rs.root_index:
                        eq_fail.append({"J": sorted(J), "alpha": list(a), "gamma": list(g)})
                for s in simple_J:
                    inn_count += 1
                    if rs.pairing(a, s) > 0:
                        inn_fail.append({"J": sorted(J), "alpha": list(a), "simple": list(s)})
            for x in range(len(A)):
                for y in range(x + 1, len(A)):
                    inn_count += 1
                    if rs.pairing(A[x], A[y]) > 0:
                        inn_fail.append({"J": sorted(J), "pair": [list(A[x]), list(A[y])]})
    return [claim_report("no-levi-difference", eq_count, eq_fail), claim_report("nonpositive-pairings", inn_count, inn_fail)]


def lemma_checks(rs: RootSystem) -> list[dict]:
    """Exhaustive checks of the elementary root lemmas over ``rs``."""
    return [
        check_dominant_below_theta(rs),
        check_split_above(rs),
        check_jacobi_triples(rs),
        *check_antichain_lemmas(rs),
    ]
