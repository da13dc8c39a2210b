"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines alongside the pytest verdicts.  Every tolerance is pinned here;
nothing is deferred to later calibration.
"""

import math
import random
import time
from fractions import Fraction
from itertools import product

from girthbound import bounds, constructions, graphcore, meanineq, search
from helpers import (
    is_biregular,
    random_biregular,
    random_bipartite,
    random_fraction_upto,
    random_girth_floor,
    random_min_degree2,
    random_rational_matrix,
)


def _report(num: int, name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {num} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


def test_criterion_1_small_case_extremal_values():
    cases = [(v, 3, v + 2) for v in range(3, 9)]
    cases += [(4, 4, 8), (5, 4, 9), (5, 5, 10), (6, 5, 12), (7, 5, 13)]
    ok = True
    for v, w, expected in cases:
        cert = search.max_size(v, w, 8)
        ok &= cert.exhaustive
        ok &= cert.e_max == expected
        ok &= cert.elapsed <= 30.0
    _report(1, "small-case extremal values", ok)


def test_criterion_2_equality_families():
    t0 = time.monotonic()
    ok = True
    wq_expect = {2: (15, 15, 45), 3: (40, 40, 160)}
    for q, (v, w, e) in wq_expect.items():
        g = constructions.wq_incidence(q)
        ok &= (g.v, g.w, g.e) == (v, w, e)
        ok &= graphcore.girth(g).girth == 8
        ok &= graphcore.verify_weak_gq(g)
        ok &= bounds.eval_cubic(g.v, g.w, g.e) == 0
    for q in (2, 3, 5):
        g = constructions.pg2_incidence(q)
        n = q * q + q + 1
        ok &= (g.v, g.w, g.e) == (n, n, (q + 1) * n)
        ok &= graphcore.girth(g).girth == 6
        ok &= bounds.eval_reiman(n, n, g.e) == 0
    ok &= time.monotonic() - t0 < 5.0
    _report(2, "equality families", ok)


def test_criterion_3_size_bounds_as_properties():
    rng = random.Random(20260808)
    ok = True
    produced = 0
    while produced < 1000:
        if produced % 2 == 0:
            g = random_girth_floor(rng, 8, max_side=12)
        else:
            g = random_bipartite(rng, max_side=12)
            rep = graphcore.girth(g)
            if rep.girth is not None and rep.girth < 8:
                continue
        rep = graphcore.girth(g)
        ok &= rep.girth is None or rep.girth >= 8
        produced += 1
        a, b = min(g.v, g.w), max(g.v, g.w)
        ok &= bounds.eval_cubic(g.v, g.w, g.e) <= 0
        ok &= bounds.eval_reiman(a, b, g.e) <= 0  # girth >= 8 implies girth >= 6
    ok &= produced == 1000
    _report(3, "cubic and quadratic bounds on random graphs", ok)


def test_criterion_4_mean_inequality():
    rng = random.Random(11)
    ok = True
    for v, w in product(range(2, 7), range(2, 7)):
        for _ in range(500):
            m = meanineq.NonnegMatrix(random_rational_matrix(rng, v, w))
            rho = random_fraction_upto(rng, min(m.row_sums) / 2)
            gamma = random_fraction_upto(rng, min(m.col_sums) / 2)
            verdict = meanineq.check(m, rho, gamma)
            ok &= verdict.hypotheses_hold and verdict.satisfied
    m1 = meanineq.NonnegMatrix([[2, 5], [4, 0]])
    v1 = meanineq.check(m1, 4, 5)
    ok &= min(m1.row_sums) >= 4 and min(m1.col_sums) >= 5  # single thresholds hold
    ok &= not v1.hypotheses_hold and not v1.satisfied
    m2 = meanineq.NonnegMatrix([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    v2 = meanineq.check(m2, 1, 1)
    ok &= min(m2.row_sums) >= 1 and min(m2.col_sums) >= 1
    ok &= not v2.hypotheses_hold and not v2.satisfied
    _report(4, "mean inequality and its sharp hypotheses", ok)


def test_criterion_5_paths3_double_count():
    rng = random.Random(13)
    ok = True
    equality_cases = strict_cases = 0
    for k in range(1000):
        if k % 10 == 8:
            g = random_min_degree2(rng, max_side=10)
        elif k % 10 == 9:
            g = random_biregular(rng, max_side=8)
        else:
            g = random_bipartite(rng, max_side=12)
        if g.v + g.w > 24:
            g = random_bipartite(rng, max_side=6)
        formula = graphcore.count_paths3(g)
        ok &= formula == graphcore.count_paths3_enumerate(g)
        if g.v >= 1 and g.w >= 1 and g.min_degree() >= 2:
            e = Fraction(g.e)
            lower = e * (e / g.v - 1) * (e / g.w - 1)
            ok &= formula >= lower
            if is_biregular(g):
                ok &= formula == lower
                equality_cases += 1
            else:
                ok &= formula > lower
                strict_cases += 1
    ok &= equality_cases > 0 and strict_cases > 0
    _report(5, "paths-3 formula vs enumeration and lower bound", ok)


def test_criterion_6_algebraic_identities():
    t0 = time.monotonic()
    ok = True
    # growth identity on the full grid v, w <= 60, 0 <= e <= vw
    for w in range(1, 61):
        prev_row = None
        for v in range(1, 62):
            row = [bounds.eval_cubic(v, w, e) for e in range(v * w + 2)]
            if prev_row is not None:
                vv = v - 1
                for e in range(vv * w + 1):
                    if bounds.growth_delta(vv, w, e) != row[e + 1] - prev_row[e]:
                        ok = False
            prev_row = row
    # growth lemma implication on v, w <= 40
    for w in range(1, 41):
        prev_row = None
        for v in range(1, 42):
            row = [bounds.eval_cubic(v, w, e) for e in range(v * w + 2)]
            if prev_row is not None:
                vv = v - 1
                for e in range(vv * w + 1):
                    if prev_row[e] <= 0 and row[e + 1] > 0:
                        ok = False
            prev_row = row
    # discriminant positivity
    for s in range(2, 101):
        for p in range(s - 1, s * s // 4 + 1):
            if bounds.discriminant_from_sp(s, p) <= 0:
                ok = False
    # orientation lemma for v <= w <= 50
    def largest(a, b):
        e = 0
        while bounds.eval_reiman(a, b, e + 1) <= 0:
            e += 1
        return e

    for w in range(1, 51):
        for v in range(1, w + 1):
            if largest(v, w) > largest(w, v):
                ok = False
    ok &= time.monotonic() - t0 < 60.0
    _report(6, "growth identity, growth lemma, discriminant, orientation", ok)


def test_criterion_7_balanced_approximation_sandwich():
    rng = random.Random(17)
    ok = True
    for _ in range(200):
        v = max(1, int(round(math.exp(rng.uniform(0.0, math.log(10 ** 6))))))
        e_hi = bounds.balanced_approx(v)
        e_lo = e_hi - 16.0 / 81.0
        scale = max(abs(e_hi) ** 3, float(v) ** 4, 1.0)
        tol = 1e-9 * scale
        ok &= bounds.eval_cubic(v, v, e_hi) >= -tol
        ok &= bounds.eval_cubic(v, v, e_lo) <= tol
    for k in range(1, 101):
        v = k ** 3
        e_exact = bounds.balanced_approx_at_cube(k)
        ok &= bounds.eval_cubic(v, v, e_exact) >= 0
        ok &= bounds.eval_cubic(v, v, e_exact - Fraction(16, 81)) <= 0
    _report(7, "balanced approximation sandwich", ok)


def test_criterion_8_optimal_unbalanced_constructions():
    ok = True
    g8 = constructions.unbalanced8(4, 10)
    ok &= g8.e == 14
    ok &= bounds.unbalanced_cap(10, 4) == 14
    ok &= bounds.girth8_coarse_bound(4, 10) == 14
    ok &= graphcore.girth(g8).girth == 8
    g6 = constructions.unbalanced6(4, 10)
    ok &= g6.e == 16
    ok &= bounds.girth6_coarse_bound(4, 10) == 16
    ok &= graphcore.girth(g6).girth == 6
    _report(8, "optimal unbalanced constructions", ok)
