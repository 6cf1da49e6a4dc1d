"""Verification suites aggregating the exhaustive checks.

Each suite returns a report ``{"schema", "suite", "system", "passed", "claims"}``
where every claim carries its own instance count and failure list.
"""
from __future__ import annotations

from . import families as fam
from .irreducible import (
    ScaleCapError,
    check_equivalence,
    classical_S_families,
    cond_iv,
    enumerate_irreducible_S,
    f4_short_fixture,
    irreducible_ideal_of_parabolic,
    lemone_witness,
    parabolic_from_J,
    perp_census,
    two_rho,
    verify_corollary,
    weyl_translate,
)
from .poset_ideals import (
    _all_node_sets,
    antichain_sum_criterion,
    claim_report,
    enumerate_J_antichains,
    enumerate_J_ideals,
    enumerate_J_ideals_bruteforce,
    ideal_from_antichain,
    is_abelian_J_antichain,
    lemma_checks,
    minimal_elements,
    nilpotence_of_ideal,
)
from .rootsys import RootSystem, UnsupportedError, canonical

SCHEMA = "parideal/1"

SUITES = ("lemmas", "bijection", "nilpotence", "peterson", "theorem2", "classification", "corollary")

# largest rank each suite accepts by default; theorem2 is capped by |R| instead
DEFAULT_MAX_RANK = {
    "lemmas": 4,
    "bijection": 5,
    "nilpotence": 4,
    "peterson": 6,
    "classification": 5,
    "corollary": 4,
}
DEFAULT_MAX_ROOTS = 14


def _lemone_claim(rs: RootSystem) -> dict:
    failures, count = [], 0
    for a in rs.roots:
        for b in rs.roots:
            if rs.is_long(b) and rs.pairing(a, b) == 0:
                count += 1
                if lemone_witness(rs, a, b) is None:
                    failures.append([list(a), list(b)])
    return claim_report("orthogonal-sum-witness", count, failures)


def _admissible_claims(rs: RootSystem) -> list[dict]:
    """Checks over every S satisfying (iv): perp census, Weyl stability, nonnegative pairings."""
    sets = enumerate_irreducible_S(rs)
    perp_fail, weyl_fail, pos_fail = [], [], []
    perp_count = weyl_count = 0
    for S in sets:
        if all(rs.is_long(a) for a in S):
            perp_count += 1
            if len(set(perp_census(rs, S).values())) > 1:
                perp_fail.append([list(a) for a in S])
        for i in range(1, rs.rank + 1):
            weyl_count += 1
            if not cond_iv(rs, weyl_translate(rs, i, S)):
                weyl_fail.append({"S": [list(a) for a in S], "reflection": i})
        if any(rs.pairing(a, b) < 0 for a in S for b in S):
            pos_fail.append([list(a) for a in S])
    return [
        claim_report("equal-perp", perp_count, perp_fail),
        claim_report("weyl-stability", weyl_count, weyl_fail),
        claim_report("nonnegative-pairing", len(sets), pos_fail),
    ]


def suite_lemmas(rs: RootSystem) -> list[dict]:
    return lemma_checks(rs) + [_lemone_claim(rs)] + _admissible_claims(rs)


def suite_bijection(rs: RootSystem) -> list[dict]:
    fwd_fail, back_fail, count_fail, brute_fail = [], [], [], []
    fwd = back = brute = 0
    for J in _all_node_sets(rs.rank):
        chains = enumerate_J_antichains(rs, J)
        for A in chains:
            fwd += 1
            if minimal_elements(rs, ideal_from_antichain(rs, A, J)) != canonical(A):
                fwd_fail.append({"J": sorted(J), "A": [list(a) for a in A]})
        ideals = enumerate_J_ideals(rs, J)
        for Phi in ideals:
            back += 1
            if ideal_from_antichain(rs, minimal_elements(rs, Phi), J) != canonical(Phi):
                back_fail.append({"J": sorted(J), "ideal": [list(a) for a in Phi]})
        if len(chains) != len(ideals):
            count_fail.append({"J": sorted(J), "antichains": len(chains), "ideals": len(ideals)})
        if rs.rank <= 3:
            brute += 1
            if set(map(canonical, enumerate_J_ideals_bruteforce(rs, J))) != set(map(canonical, ideals)):
                brute_fail.append({"J": sorted(J)})
    return [
        claim_report("antichain-to-ideal-to-antichain", fwd, fwd_fail),
        claim_report("ideal-to-antichain-to-ideal", back, back_fail),
        claim_report("equal-counts", 1 << rs.rank, count_fail),
        claim_report("ideals-vs-subset-filter", brute, brute_fail),
    ]


def suite_nilpotence(rs: RootSystem, max_k: int = 3) -> list[dict]:
    crit_fail, ab_fail, min_fail, i0ab_fail = [], [], [], []
    crit = ab = mins = 0
    proper = 0
    for J in _all_node_sets(rs.rank):
        for A in enumerate_J_antichains(rs, J):
            nil = nilpotence_of_ideal(rs, ideal_from_antichain(rs, A, J))
            for k in range(1, max_k + 1):
                crit += 1
                if antichain_sum_criterion(rs, A, k) != (nil <= k):
                    crit_fail.append({"J": sorted(J), "A": [list(a) for a in A], "k": k, "nilpotence": nil})
            ab += 1
            if is_abelian_J_antichain(rs, A, J) != (nil <= 1):
                ab_fail.append({"J": sorted(J), "A": [list(a) for a in A], "nilpotence": nil})
        if len(J) == rs.rank:
            continue
        proper += 1
        i0 = set(irreducible_ideal_of_parabolic(rs, parabolic_from_J(rs, J)))
        if nilpotence_of_ideal(rs, i0) > 1:
            i0ab_fail.append({"J": sorted(J)})
        for Phi in enumerate_J_ideals(rs, J):
            if not Phi:
                continue
            mins += 1
            if not i0 <= set(Phi):
                min_fail.append({"J": sorted(J), "ideal": [list(a) for a in Phi]})
    return [
        claim_report("antichain-sum-criterion", crit, crit_fail),
        claim_report("abelian-criterion", ab, ab_fail),
        claim_report("i0-abelian", proper, i0ab_fail),
        claim_report("i0-minimal", mins, min_fail),
    ]


def _count_claims(rs: RootSystem, J) -> tuple[dict, list, dict, int]:
    """Per-size abelian J-antichain counts against closed forms or family expansion."""
    J = frozenset(J)
    n = rs.rank
    counts: dict[int, int] = {}
    for A in enumerate_J_antichains(rs, J, abelian_only=True):
        counts[len(A)] = counts.get(len(A), 0) + 1
    per_size = []
    compared = 0
    if rs.family in fam.CLASSICAL:
        for s in range(0, max(counts) + 2):
            compared += 1
            try:
                expected = fam.closed_form_count(rs.spec, J, s)
                source = "closed-form"
            except UnsupportedError:
                expected = len(fam.classical_abelian_families(rs.spec, J, s))
                source = "families"
            if expected != counts.get(s, 0):
                per_size.append({"J": sorted(J), "s": s, "enumerated": counts.get(s, 0),
                                 "expected": expected, "source": source})
    total = {"J": sorted(J), "total": sum(counts.values()), "expected": 1 << (n - len(J))}
    return counts, per_size, total, compared


def suite_peterson(rs: RootSystem, all_J: bool = True) -> list[dict]:
    total_fail, size_fail = [], []
    totals = sizes = 0
    borel = None
    node_sets = list(_all_node_sets(rs.rank)) if all_J else [frozenset()]
    parabolic_totals = rs.family in ("A", "C")
    for J in node_sets:
        counts, per_size, total, compared = _count_claims(rs, J)
        if not J:
            borel = counts
        sizes += compared
        size_fail += per_size
        # 2^(n - #J) is claimed for every J only in types A and C
        if not J or parabolic_totals:
            totals += 1
            if total["total"] != total["expected"]:
                total_fail.append(total)
    claims = [
        claim_report("abelian-total", totals, total_fail,
                     total=sum(borel.values()), per_size={str(s): c for s, c in sorted(borel.items())}),
        claim_report("per-size-counts", sizes, size_fail),
    ]
    if rs.family == "D":
        uncorrected = {s: fam.d_series_uncorrected(rs.rank, s) for s in range(1, max(borel) + 1)}
        mismatch = {str(s): [borel.get(s, 0), v] for s, v in uncorrected.items() if borel.get(s, 0) != v}
        claims.append({"claim": "d-series-uncorrected", "informational": True,
                       "mismatches_enumerated_vs_uncorrected": mismatch})
    return claims


def suite_theorem2(rs: RootSystem, max_roots: int = DEFAULT_MAX_ROOTS) -> list[dict]:
    rep = check_equivalence(rs, max_roots=max_roots)
    return [claim_report(rep["claim"], rep["instances_checked"], rep["failures"], satisfying=rep["satisfying"])]


def _eps_multiple(rs: RootSystem, vec, i: int, coeff: int) -> bool:
    target = [0] * rs.epsilon_dim
    target[i - 1] = coeff
    return list(rs.to_epsilon(vec)) == target


def suite_classification(rs: RootSystem) -> list[dict]:
    found = enumerate_irreducible_S(rs)
    claims = []
    if rs.family in fam.CLASSICAL:
        fams = {fs.roots for fs in classical_S_families(rs)}
        missing = [list(map(list, S)) for S in found if S not in fams]
        extra = [list(map(list, S)) for S in fams if S not in set(found)]
        claims.append(claim_report("families-complete", len(found), missing + extra,
                                   unmatched=len(missing), spurious=len(extra)))
        if rs.family in "BD":
            fixture_fail, n_b = [], 0
            coeff = 2 * rs.rank - (1 if rs.family == "B" else 2)
            for fs in classical_S_families(rs):
                if not fs.label.endswith("(b)"):
                    continue
                n_b += 1
                i = (fs.I or fs.J)[0]
                sign = 1 if fs.I else -1
                if not (cond_iv(rs, fs.roots) and _eps_multiple(rs, two_rho(rs, fs.roots), i, sign * coeff)):
                    fixture_fail.append({"i": i, "sign": sign, "two_rho": list(two_rho(rs, fs.roots))})
            claims.append(claim_report("case-b-two-rho", n_b, fixture_fail, expected_coefficient=coeff))
    if rs.family == "F":
        S = f4_short_fixture(rs)
        lam = two_rho(rs, S)
        w4 = rs.fundamental_weight(4)
        ok = cond_iv(rs, S) and all(x == 7 * y for x, y in zip(lam, w4)) and S in set(found)
        claims.append(claim_report("f4-fixture", 1, [] if ok else [{"two_rho": list(lam)}],
                                   two_rho=list(lam), multiple_of_omega4=7))
    if rs.family == "G":
        bad = [list(map(list, S)) for S in found if not all(rs.is_long(a) for a in S)]
        claims.append(claim_report("g2-long-only", len(found), bad))
    claims.append({"claim": "admissible-sets", "count": len(found)})
    return claims


def suite_corollary(rs: RootSystem) -> list[dict]:
    failures = []
    std = sweep = 0
    sets = enumerate_irreducible_S(rs)
    for S in sets:
        rep = verify_corollary(rs, S)
        std += rep["standard_parabolics_checked"]
        sweep += rep["all_parabolics_checked"] or 0
        if rep["failures"]:
            failures.append({"S": rep["S"], "failures": rep["failures"]})
    claims = [claim_report("corollary", len(sets), failures,
                           standard_parabolics_checked=std, all_parabolics_checked=sweep)]
    if rs.family == "F":
        S = f4_short_fixture(rs)
        rep = verify_corollary(rs, S)
        w4 = rs.fundamental_weight(4)
        ok = not rep["failures"] and rep["J"] == [1, 2, 3] and all(
            x == 7 * y for x, y in zip(rep["two_rho"], w4))
        claims.append(claim_report("f4-fixture", 1, [] if ok else [rep],
                                   two_rho=rep["two_rho"], J=rep["J"]))
    return claims


_RUNNERS = {
    "lemmas": suite_lemmas,
    "bijection": suite_bijection,
    "nilpotence": suite_nilpotence,
    "peterson": suite_peterson,
    "classification": suite_classification,
    "corollary": suite_corollary,
}


def run_suite(rs: RootSystem, suite: str, max_rank: int | None = None,
              max_roots: int = DEFAULT_MAX_ROOTS) -> dict:
    """Run one suite; raises ScaleCapError when the system exceeds the cap."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if suite == "theorem2":
        if len(rs.roots) > max_roots:
            raise ScaleCapError(f"{rs.spec} has {len(rs.roots)} roots; cap is {max_roots}")
        claims = suite_theorem2(rs, max_roots)
    else:
        cap = DEFAULT_MAX_RANK[suite] if max_rank is None else max_rank
        if rs.rank > cap:
            raise ScaleCapError(f"rank {rs.rank} above the {suite} cap {cap}")
        claims = _RUNNERS[suite](rs)
    passed = all(not c.get("failure_count") for c in claims)
    return {"schema": SCHEMA, "suite": suite, "system": str(rs.spec), "passed": passed, "claims": claims}
