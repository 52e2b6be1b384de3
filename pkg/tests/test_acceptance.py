"""Acceptance criteria A1-A6.

Each criterion prints one PASS/FAIL line (collected in the pytest terminal
summary, or printed directly when run as a script:
``python tests/test_acceptance.py``).
"""

import itertools
import os
import random
import sys
import time

sys.path.insert(0, os.path.dirname(__file__))

from corpus import HOPF, TREFOIL, UNKNOT, WHITEHEAD, in_va, in_vb  # noqa: E402
from cordrep.augment import enumerate_fp, mu_lambda_points, verify  # noqa: E402
from cordrep.braid import ComponentMap, components, parse_braid  # noqa: E402
from cordrep.cordcalc import (CordExpr, first_index_support,  # noqa: E402
                              last_index_support, oracle_reduce, reduce)
from cordrep.markov import apply_move, check_intertwiner, fuzz, random_start_pairs  # noqa: E402
from cordrep.props import check_separability, check_vanishing, is_microlocally_simple  # noqa: E402
from cordrep.relations import all_relations  # noqa: E402
from cordrep.rep import build_rep, check_link_relations  # noqa: E402

RESULTS = []


def _record(name, limit, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        ok, detail = False, f"{detail}; took {dt:.1f}s, limit {limit}s"
    line = f"{name} {'PASS' if ok else 'FAIL'} ({dt:.2f}s) {detail}"
    RESULTS.append(line)
    print(line)
    return ok, detail


# ------------------------------------------------------------ A1

def check_a1():
    p = 5
    sols = enumerate_fp(all_relations(parse_braid(UNKNOT)), p).solutions
    got = set(mu_lambda_points(sols))
    want = {(m, l) for m in range(1, p) for l in range(1, p) if (1 - l) * (1 - m) % p == 0}
    return got == want, f"{len(got)} (mu, lam) points, zero set of (1-lam)(1-mu) has {len(want)}"


# ------------------------------------------------------------ A2

def check_a2():
    p = 5
    sols = enumerate_fp(all_relations(parse_braid(HOPF)), p).solutions
    got = set(mu_lambda_points(sols))
    want = {pt for pt in itertools.product(range(1, p), repeat=4) if in_va(*pt, p) or in_vb(*pt, p)}
    bad_a = 0
    n_a = 0
    for a in sols:
        m1, m2 = a.mu
        l1, l2 = a.lam
        if in_va(m1, l1, m2, l2, p) and not (a.x[0][1] == 0 and a.x[1][0] == 0 and in_vb(m1, l1, m2, l2, p)):
            n_a += 1
            prod = -pow(m1, -1, p) * a.x[0][1] * a.x[1][0] % p
            bad_a += prod != (1 - pow(m1, -1, p)) * (1 - m2) % p
    ok = got == want and bad_a == 0 and n_a > 0
    return ok, f"{len(got)} points vs {len(want)} in V_A u V_B; {n_a} case-A solutions, {bad_a} product violations"


# ------------------------------------------------------------ A3

def check_a3():
    cases = [(UNKNOT, 3), (UNKNOT, 5), (HOPF, 3), (HOPF, 5), (TREFOIL, 3), (TREFOIL, 5), (WHITEHEAD, 3)]
    total = fails = 0
    for text, p in cases:
        b = parse_braid(text)
        cm = components(b)
        for a in enumerate_fp(all_relations(b), p).solutions:
            total += 1
            rep = build_rep(a, cm)
            if not (check_link_relations(rep, b).ok and is_microlocally_simple(rep).ok):
                fails += 1
    return fails == 0 and total > 0, f"{total} augmentations, {fails} failures"


# ------------------------------------------------------------ A4

def check_a4():
    moves = fails = 0
    examples = []
    for text in (UNKNOT, HOPF, TREFOIL, WHITEHEAD):
        b = parse_braid(text)
        moves_here = [f"conj:{k}" for k in range(1, b.n)] + [f"conjinv:{k}" for k in range(1, b.n)] + ["stab+", "stab-"]
        for a in enumerate_fp(all_relations(b), 3).solutions:
            for mv in moves_here:
                rep = check_intertwiner(apply_move(b, a, mv))
                moves += 1
                if not (rep.ok and rep.rank_source == rep.rank_target):
                    fails += 1
                    examples.append((text, mv))
    starts = random_start_pairs(seed=2024, p=3, braids=16, max_n=3, max_len=6)
    res = fuzz(starts, 200, seed=2024, length=3, max_n=4)
    fails += len(res.failures)
    detail = f"{moves} corpus moves + 200 random sequences ({res.moves} moves), {fails} failures"
    if examples:
        detail += f"; first {examples[0]}"
    return fails == 0, detail


# ------------------------------------------------------------ A5

def check_a5():
    rng = random.Random(5)
    fails = 0
    for _ in range(1000):
        n = rng.randint(1, 4)
        raw = [rng.randint(1, n) for _ in range(n)]
        ids = {}
        comp = tuple(ids.setdefault(c, len(ids) + 1) for c in raw)
        cm = ComponentMap(n, len(ids), comp)
        w = tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(rng.randint(0, 6)))
        c = CordExpr(rng.randint(1, n), w, rng.randint(1, n))
        same = oracle_reduce(c, cm, seed=rng.randrange(10 ** 9)) == reduce(c, cm)
        raw_poly = reduce(c, cm, normalize=False)
        support = first_index_support(raw_poly, c.i) and last_index_support(raw_poly, c.j)
        fails += not (same and support)
    return fails == 0, f"1000 cords, {fails} failures"


# ------------------------------------------------------------ A6

def check_a6():
    b = parse_braid(HOPF)
    cm = components(b)
    rels = all_relations(b)
    sols = enumerate_fp(rels, 5).solutions
    case_b = [a for a in sols if a.x[0][1] == 0 and a.x[1][0] == 0]
    sep_fail = van_fail = van_n = 0
    for a in case_b:
        assert verify(rels, a).ok
        rep = build_rep(a, cm)
        s = check_separability(a, rep, b, [1])
        if not (s.mixed_zero and s.decomposition and all(s.sub_link_relations)
                and sum(s.dims) == rep.dim):
            sep_fail += 1
        if a.mu[0] == 1:
            van_n += 1
            v = check_vanishing(a, rep, [1])
            van_fail += not (v.hypothesis_row and v.conclusion)
    ok = case_b and van_n and sep_fail == 0 and van_fail == 0
    return bool(ok), (f"{len(case_b)} case-B points ({sep_fail} not separable); "
                      f"{van_n} with mu_1 = 1 ({van_fail} vanishing failures)")


def test_a1_unknot_variety():
    ok, detail = _record("A1", 1.0, check_a1)
    assert ok, detail


def test_a2_hopf_variety():
    ok, detail = _record("A2", 120.0, check_a2)
    assert ok, detail


def test_a3_representations():
    ok, detail = _record("A3", None, check_a3)
    assert ok, detail


def test_a4_markov_invariance():
    ok, detail = _record("A4", 300.0, check_a4)
    assert ok, detail


def test_a5_rewriting_confluence():
    ok, detail = _record("A5", 30.0, check_a5)
    assert ok, detail


def test_a6_vanishing_and_separability():
    ok, detail = _record("A6", None, check_a6)
    assert ok, detail


if __name__ == "__main__":
    limits = {"A1": 1.0, "A2": 120.0, "A3": None, "A4": 300.0, "A5": 30.0, "A6": None}
    checks = {"A1": check_a1, "A2": check_a2, "A3": check_a3, "A4": check_a4, "A5": check_a5, "A6": check_a6}
    results = [_record(k, limits[k], checks[k])[0] for k in checks]
    sys.exit(0 if all(results) else 1)
