"""Timing suites for `lacunary-pit bench`."""

from __future__ import annotations

import random
import time

from . import cyclo, generators, hitting, oracle, tester


def _timed(suite, case, fn, repeat=1):
    start = time.perf_counter()
    for _ in range(repeat):
        out = fn()
    elapsed = (time.perf_counter() - start) / repeat
    return {"suite": suite, "case": case, "seconds": round(elapsed, 6), "result": out}


def structural_suite():
    rng = random.Random(6)
    big = generators.large_expression(rng, t=50, bits=2048)
    zero = generators.large_zero_expression(rng, groups=17, bits=2048)
    yield _timed("structural", "t=50 2048-bit random",
                 lambda: tester.structural_zero_test(big).result)
    yield _timed("structural", "t=50 2048-bit zero",
                 lambda: tester.structural_zero_test(zero).result)


def blackbox_suite():
    rng = random.Random(1)
    exprs = [generators.random_expression(rng) for _ in range(200)]

    def run():
        zeros = 0
        for e in exprs:
            spec = hitting.build_rou_hitting_set(e.t, e.d, e.d_prime,
                                                 tester.normalize(e).params()["M"])
            zeros += tester.blackbox_zero_test(e, spec).is_zero
        return zeros

    yield _timed("blackbox", "200 random desk instances", run)


def cyclo_suite():
    u = cyclo.CycloElement.from_coeffs(101, [i % 7 - 3 for i in range(101)])
    yield _timed("cyclo", "pow p=101 e=64", lambda: len(cyclo.pow(u, 64, 20).terms))
    rng = random.Random(2)
    expr = generators.random_expression(rng, t_max=4, exp_max=64)
    yield _timed("cyclo", "eval p=10007", lambda: len(cyclo.eval_expression_mod(expr, 10007).terms))


def sturm_suite():
    rng = random.Random(3)
    polys = [oracle.expand_to_sparse(generators.random_expression(rng, t_min=1))
             for _ in range(20)]
    polys = [p for p in polys if not p.is_zero()]
    yield _timed("sturm", f"{len(polys)} expansions",
                 lambda: sum(oracle.real_root_count(p) for p in polys))


SUITES = {
    "structural": structural_suite,
    "blackbox": blackbox_suite,
    "cyclo": cyclo_suite,
    "sturm": sturm_suite,
}
