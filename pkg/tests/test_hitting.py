from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lacunary_pit.hitting import (C_DEFAULT, REAL, ROU, GapConstant, HittingSetSpec,
                                  SpecTooSmall, build_real_hitting_set,
                                  build_rou_hitting_set, delta, prime_count_bound,
                                  real_point_count, sparsity_bound)
from lacunary_pit.numtheory import ceil_log2, is_prime


def test_default_constant_is_a_lower_bound():
    import math
    assert C_DEFAULT.c_log2_lower == Fraction(193, 1000)
    assert float(C_DEFAULT.c_log2_lower) < math.log2(5) / 12


def test_gap_constant_must_be_positive():
    with pytest.raises(ValueError):
        GapConstant(Fraction(0))


@pytest.mark.parametrize("t, M, expected", [(1, 1, 6), (1, 2, 11), (0, 7, 0)])
def test_delta_examples(t, M, expected):
    assert delta(t, M) == expected


def test_delta_independent_formula():
    import math
    for t in range(1, 8):
        for M in range(1, 40):
            assert delta(t, M) == math.ceil(ceil_log2(t * (t + 1) * M) * 1000 / 193 - 1e-12)


def test_delta_rejects_zero_height():
    with pytest.raises(ValueError):
        delta(1, 0)


def test_smaller_constant_gives_wider_gap():
    weak = GapConstant(Fraction(1, 10))
    assert delta(3, 17, weak) >= delta(3, 17)


def test_prime_count_examples():
    assert prime_count_bound(1, 8, 1000, 6) == 56
    # t = 0: (delta*0+1) * ceil_log2(d+1) vs ceil_log2(d+d'+1)
    assert prime_count_bound(0, 8, 1000, 0) == ceil_log2(1009) == 10
    assert prime_count_bound(0, 0, 0, 0) == 0


@given(st.integers(0, 6), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6),
       st.integers(0, 50), st.sampled_from(["t", "d", "dp", "delta"]))
def test_prime_count_monotone(t, d, dp, dl, which):
    base = prime_count_bound(t, d, dp, dl)
    bumped = dict(t=t, d=d, dp=dp, delta=dl)
    bumped[which] += 1
    assert prime_count_bound(bumped["t"], bumped["d"], bumped["dp"], bumped["delta"]) >= base


@given(st.integers(1, 10), st.integers(1, 10 ** 9))
def test_delta_monotone_in_M(t, M):
    assert delta(t, M) <= delta(t, M + 1)
    assert delta(t, M) <= delta(t + 1, M)


def test_build_rou_example():
    spec = build_rou_hitting_set(1, 8, 1000, 1)
    ps = spec.primes
    assert len(ps) == 56 == len(set(ps))
    assert ps[0] == 17 and all(p > 14 and p >= 5 and is_prime(p) for p in ps)
    assert spec.params.delta == 6


def test_build_rou_t0():
    spec = build_rou_hitting_set(0, 3, 4, 1)
    assert spec.primes[0] == 5 and spec.count == ceil_log2(8)


def test_build_rou_rejects_zero_height():
    with pytest.raises(ValueError):
        build_rou_hitting_set(1, 2, 3, 0)


@settings(max_examples=60)
@given(st.integers(0, 4), st.integers(0, 2 ** 64), st.integers(0, 2 ** 64), st.integers(1, 1000))
def test_built_specs_satisfy_invariants(t, d, dp, M):
    spec = build_rou_hitting_set(t, d, dp, M)
    dl = delta(t, M)
    assert spec.count == max(1, prime_count_bound(t, d, dp, dl))
    assert spec.min_prime > max(4, sparsity_bound(t, dl))
    first = list(zip(range(30), spec.iter_primes()))
    ps = [p for _, p in first]
    assert all(is_prime(p) for p in ps) and ps == sorted(set(ps))
    spec.check_covers(t, d, dp, M)


def test_lazy_spec_handles_huge_counts():
    spec = build_rou_hitting_set(4, 64, 64, 10 ** 6)
    assert spec.count > 10 ** 4
    it = spec.iter_primes()
    assert next(it) >= spec.min_prime


def test_check_covers_rejects_small_sets():
    spec = build_rou_hitting_set(1, 8, 1000, 1)
    with pytest.raises(SpecTooSmall):
        spec.check_covers(1, 10 ** 6, 1000, 1)
    low = HittingSetSpec(ROU, spec.params, min_prime=5, count=spec.count)
    with pytest.raises(SpecTooSmall):
        low.check_covers(1, 8, 1000, 1)


def test_enlarged_spec_still_covers():
    spec = build_rou_hitting_set(1, 8, 1000, 1)
    bigger = HittingSetSpec(ROU, spec.params, min_prime=spec.min_prime, count=spec.count + 10)
    bigger.check_covers(1, 8, 1000, 1)


def test_text_round_trip():
    spec = build_rou_hitting_set(1, 8, 1000, 1)
    text = spec.to_text()
    assert text.splitlines()[0] == "rou 1 8 1000 1 6"
    back = HittingSetSpec.from_text(text)
    assert back.primes == spec.primes and back.params == spec.params
    back.check_covers(1, 8, 1000, 1)
    real = build_real_hitting_set(2)
    assert HittingSetSpec.from_text(real.to_text()).points == real.points


@pytest.mark.parametrize("text", [
    "rou 1 2 3 4\n",
    "rou 1 2 3 4 5\n9\n",
    "rou 1 2 3 4 5\n11\n7\n",
    "real 1 0 0 0 0\n1\n1\n",
    "",
])
def test_text_rejects_malformed(text):
    with pytest.raises(ValueError):
        HittingSetSpec.from_text(text)


def test_real_point_counts():
    # 6(t+1) - 3 rather than 6t - 3; see the counterexample in test_tester.py
    assert build_real_hitting_set(1).points == tuple(Fraction(i) for i in range(1, 10))
    assert build_real_hitting_set(0).size == 3
    assert build_real_hitting_set(2).size == 15
    assert real_point_count(3, sparse=True) == 8
    assert build_real_hitting_set(1).kind == REAL
