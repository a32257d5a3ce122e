"""Acceptance criteria 1-8.

Each criterion is a function returning (passed, detail).  Under pytest every
criterion is one test and the terminal summary prints one PASS/FAIL line per
criterion; `python3 tests/test_acceptance.py` prints the same lines directly.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from lacunary_pit.cli import prop1_sweep
from lacunary_pit.cyclo import eval_expression_mod, vanishes_on_all_roots
from lacunary_pit.expression import Expression, Term
from lacunary_pit.generators import (gapped_instance, large_expression, large_zero_expression,
                                     random_expression, random_pair, random_rational,
                                     zero_instance)
from lacunary_pit.heights import algebraic_height_numeric
from lacunary_pit.hitting import (build_real_hitting_set, build_rou_hitting_set, delta,
                                  prime_count_bound)
from lacunary_pit.numtheory import is_prime
from lacunary_pit.oracle import expand_to_sparse, random_eval_mod, real_root_count
from lacunary_pit.tester import (NOT_REFUTED, REFUTED, SHIFTED, blackbox_zero_test, decompose,
                                 normalize, real_point_zero_test, refute_representation,
                                 structural_zero_test)

RESULTS = {}


def _record(number, title):
    def wrap(fn):
        def run():
            passed, detail = fn()
            RESULTS[number] = (title, passed, detail)
            return passed, detail
        run.__name__ = fn.__name__
        return run
    return wrap


def _all_verdicts(expr):
    nf = normalize(expr)
    p = nf.params()
    rou = build_rou_hitting_set(p["t"], p["d"], p["d_prime"], p["M"])
    real = build_real_hitting_set(max(nf.t, 0), sparse=nf.kind != SHIFTED)
    return (structural_zero_test(expr).is_zero,
            blackbox_zero_test(expr, rou).is_zero,
            real_point_zero_test(expr, real).is_zero,
            expand_to_sparse(expr).is_zero())


def _planted_zero(rng, pair):
    """A zero instance inside the criterion-1 ranges: t = 4, exponents <= 64."""
    a, b = pair
    c = random_rational(rng, 1000)
    al, be = rng.randint(0, 63), rng.randint(0, 63)
    d = random_rational(rng, 1000)
    g, h = rng.randint(0, 64), rng.randint(0, 64)
    terms = [Term(c, al, be + 1), Term(-a * c, al, be), Term(-b * c, al + 1, be),
             Term(d, g, h), Term(-d, g, h)]
    if any(abs(t.c.numerator) > 1000 or t.c.denominator > 1000 for t in terms):
        return None
    rng.shuffle(terms)
    return Expression(a, b, tuple(terms))


@_record(1, "oracle equivalence on 10,000 random expressions")
def criterion_1():
    rng = random.Random(101)
    n, zeros, disagreements = 0, 0, []
    start = time.perf_counter()
    while n < 10_000:
        pair = random_pair(rng)
        expr = None
        if n % 5 == 4:
            expr = _planted_zero(rng, pair)
        if expr is None:
            expr = random_expression(rng, t_max=4, exp_max=64, coef_bound=1000, pair=pair)
        verdicts = _all_verdicts(expr)
        if len(set(verdicts)) != 1:
            disagreements.append(expr)
        zeros += verdicts[-1]
        n += 1
    elapsed = time.perf_counter() - start
    ok = not disagreements and elapsed < 120
    return ok, (f"{n} instances ({zeros} zero), {len(disagreements)} disagreements, "
                f"{elapsed:.1f} s (limit 120 s)")


@_record(2, "zero-completeness on 1,000 constructed zero instances")
def criterion_2():
    rng = random.Random(202)
    failures = 0
    for i in range(1000):
        pair = random_pair(rng, allow_excluded=(i % 5 == 0))
        base = random_expression(rng, t_max=3, exp_max=12, coef_bound=50, pair=pair)
        failures += not all(_all_verdicts(zero_instance(base)))
    return failures == 0, f"1000 instances, {failures} failures (every tester must say zero)"


@_record(3, "height lower bound sweep and sixth-root exception")
def criterion_3():
    report = prop1_sweep([5, 7, 11, 13, 17], 10)
    bound = 5 ** (1 / 12) - 1e-9
    h3 = algebraic_height_numeric(Fraction(1), Fraction(1), 3)
    ok = report["min_height"] >= bound and abs(h3 - 1) <= 1e-9
    return ok, (f"{report['pairs']} pairs, min height {report['min_height']:.6f} at "
                f"{report['argmin']} vs {bound:.6f}; H(1+theta_3) = {h3:.12f}")


@_record(4, "gap machinery on 1,000 gapped instances")
def criterion_4():
    rng = random.Random(404)
    mismatches = few_blocks = zeros = 0
    for _ in range(1000):
        expr = gapped_instance(rng)
        _, gaps = decompose(expr)
        few_blocks += len(gaps.blocks) < 2
        v = structural_zero_test(expr).is_zero
        o = expand_to_sparse(expr).is_zero()
        mismatches += v != o
        zeros += o
    ok = mismatches == 0 and few_blocks == 0
    return ok, (f"1000 instances ({zeros} zero), {mismatches} verdict mismatches, "
                f"{few_blocks} with fewer than 2 blocks")


@_record(5, "bound arithmetic and monotonicity")
def criterion_5():
    checks = []
    checks.append(("delta(1,1)=6", delta(1, 1) == 6))
    checks.append(("prime_count_bound(1,8,1000,6)=56", prime_count_bound(1, 8, 1000, 6) == 56))
    ps = build_rou_hitting_set(1, 8, 1000, 1).primes
    checks.append(("56 distinct primes > 14",
                   len(ps) == 56 == len(set(ps)) and all(is_prime(p) and p > 14 and p >= 5
                                                          for p in ps)))
    grid = [(t, M) for t in range(1, 11) for M in (1, 2, 3, 7, 10, 100, 1000, 10 ** 6,
                                                   10 ** 12, 10 ** 30)]
    mono_delta = all(delta(t, M) <= delta(t, M + 1) and delta(t, M) <= delta(t + 1, M)
                     for t, M in grid)
    checks.append(("delta monotone on 100 points", len(grid) == 100 and mono_delta))
    rng = random.Random(505)
    pgrid = [(rng.randint(0, 8), rng.randint(0, 10 ** 9), rng.randint(0, 10 ** 9),
              rng.randint(0, 200)) for _ in range(100)]
    mono_pcb = all(
        prime_count_bound(t, d, dp, dl) <= min(prime_count_bound(t + 1, d, dp, dl),
                                               prime_count_bound(t, d + 1, dp, dl),
                                               prime_count_bound(t, d, dp + 1, dl),
                                               prime_count_bound(t, d, dp, dl + 1))
        for t, d, dp, dl in pgrid)
    checks.append(("prime_count_bound monotone on 100 points", mono_pcb))
    failed = [name for name, ok in checks if not ok]
    return not failed, "all checks hold" if not failed else f"failed: {failed}"


Q62 = 4611686018427387847  # largest prime below 2^62


@_record(6, "structural tester at t=50 with 2048-bit exponents")
def criterion_6():
    rng = random.Random(606)
    cases = [large_expression(rng, t=50, bits=2048) for _ in range(3)]
    cases += [large_zero_expression(rng, groups=17, bits=2048) for _ in range(2)]
    worst, bad = 0.0, []
    for expr in cases:
        assert expr.t == 50
        start = time.perf_counter()
        v = structural_zero_test(expr)
        worst = max(worst, time.perf_counter() - start)
        values = [random_eval_mod(expr, Q62, rng_seed=s) for s in range(20)]
        if v.is_zero != all(x == 0 for x in values):
            bad.append(v.result)
    verdicts = [structural_zero_test(e).result for e in cases]
    ok = not bad and worst < 10
    return ok, (f"{len(cases)} cases {verdicts}, slowest {worst:.3f} s (limit 10 s), "
                f"{len(bad)} mismatches against 20 evaluations mod a 62-bit prime")


def _root_bound_survey(bound_b_nonzero):
    rng = random.Random(707)
    violations, worst, n_shift = [], {}, 0
    while n_shift < 1000:
        a, b = random_pair(rng)
        if not b:
            continue
        expr = random_expression(rng, t_max=4, exp_max=16, coef_bound=20, pair=(a, b), t_min=1)
        poly = expand_to_sparse(expr)
        if poly.is_zero():
            continue
        n_shift += 1
        r = real_root_count(poly)
        worst[expr.t] = max(worst.get(expr.t, 0), r)
        if r > bound_b_nonzero(expr.t):
            violations.append((expr.t, r))
    sparse_viol, n_sparse = 0, 0
    while n_sparse < 1000:
        a = Fraction(rng.randint(-5, 5))
        expr = random_expression(rng, t_max=4, exp_max=16, coef_bound=20, pair=(a, Fraction(0)))
        poly = expand_to_sparse(expr)
        if poly.is_zero():
            continue
        n_sparse += 1
        t_sparse = len(poly.monomials) - 1
        nonzero_roots = real_root_count(poly) - (min(poly.monomials) > 0)
        sparse_viol += nonzero_roots > 2 * t_sparse + 1
    return violations, worst, sparse_viol


@_record(7, "real-root bound 6t-4 (b != 0) and 2t+1 (b = 0)")
def criterion_7():
    violations, worst, sparse_viol = _root_bound_survey(lambda t: 6 * t - 4)
    by_t = {}
    for t, _ in violations:
        by_t[t] = by_t.get(t, 0) + 1
    corrected, _, _ = _root_bound_survey(lambda t: 6 * (t + 1) - 4)
    ok = not violations and sparse_viol == 0
    return ok, (f"1000 shifted instances: {len(violations)} violations of 6t-4 (by t: {by_t}), "
                f"max roots by t {dict(sorted(worst.items()))}; "
                f"with t+1 terms counted, 6(t+1)-4 has {len(corrected)} violations; "
                f"b=0: {sparse_viol} violations of 2t+1 in 1000 instances")


def _product_expression():
    return Expression.build(1, 0, [(1, 23, 0), (-1, 18, 0), (-1, 16, 0), (-1, 12, 0),
                                   (1, 11, 0), (1, 7, 0), (1, 5, 0), (-1, 0, 0)])


@_record(8, "refuter on (X^5-1)(X^7-1)(X^11-1) and its 24 perturbations")
def criterion_8():
    targets = [5, 7, 11]
    base = _product_expression()
    r = refute_representation(base, targets)
    base_ok = r.status == NOT_REFUTED and r.confirmed_equal is True
    bad = []
    for i in range(len(base.terms)):
        for label, f in (("negate", lambda c: -c), ("double", lambda c: 2 * c),
                         ("zero", lambda c: 0 * c)):
            terms = list(base.terms)
            t = terms[i]
            terms[i] = Term(f(t.c), t.alpha, t.beta)
            expr = Expression(base.a, base.b, tuple(terms))
            first = refute_representation(expr, targets)
            again = refute_representation(expr, targets)
            ok = (first.status == REFUTED and first.witness.get("prime") is not None
                  and first.witness == again.witness)
            if ok:
                p = first.witness["prime"]
                residue = eval_expression_mod(expr, p)
                if first.witness["stage"] == "target":
                    ok = not vanishes_on_all_roots(residue)
            if not ok:
                bad.append((i, label))
    n = 3 * len(base.terms)
    return base_ok and not bad, (f"base not_refuted={r.status == NOT_REFUTED} "
                                 f"confirmed_equal={r.confirmed_equal}; {n - len(bad)}/{n} "
                                 f"perturbations refuted with reproducible prime witness")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(criterion):
    passed, detail = criterion()
    assert passed, detail


def test_criterion_7_corrected_indexing():
    """The root bound holds once the expression's t+1 terms are counted as the bound's t."""
    violations, _, sparse_viol = _root_bound_survey(lambda t: 6 * (t + 1) - 4)
    assert not violations and sparse_viol == 0


def test_criterion_7_two_term_counterexample():
    e = Expression.build(-3, 1, [(1, 1, 2), (2, 0, 1)])
    assert e.t == 1 and real_root_count(expand_to_sparse(e)) == 3 > 6 * e.t - 4


def format_results():
    lines = []
    for number in sorted(RESULTS):
        title, passed, detail = RESULTS[number]
        lines.append(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {title}: {detail}")
    return lines


if __name__ == "__main__":
    for c in CRITERIA:
        c()
    print("\n".join(format_results()))
