from fractions import Fraction
import math

import pytest

import fastdice as fd


def test_exact_cost_rationals():
    assert fd.exact_cost(3) == Fraction(8, 3)
    assert fd.exact_cost(5) == Fraction(18, 5)
    assert fd.exact_cost(9) == Fraction(14, 3)
    assert fd.exact_cost(1 << 40) == 40
    assert fd.toll(3) == pytest.approx(1.0817041659455103, abs=1e-12)


def test_uniform_draws_in_range_and_reproducible():
    a = fd.uniform_many(fd.BitSource(5), 6, 1000)
    b = fd.uniform_many(fd.BitSource(5), 6, 1000)
    assert a == b
    assert set(a) == set(range(6))


def test_fdr_reports_bits():
    src = fd.ScriptedBitSource([1, 0, 1, 1])
    assert fd.fdr_uniform(src, 5) == (1, 4)
    assert src.bits_consumed == 4
    with pytest.raises(fd.ScriptExhausted):
        fd.fdr_uniform(fd.ScriptedBitSource([1, 1]), 5)


def test_dyadic_range_uses_log2_bits():
    src = fd.BitSource(1)
    for _ in range(100):
        assert fd.fdr_uniform(src, 1024)[1] == 10


def test_errors_map_to_python_exceptions():
    src = fd.BitSource()
    with pytest.raises(fd.InvalidArgument):
        fd.fdr_uniform(src, 0)
    with pytest.raises(fd.RangeTooLarge):
        fd.fdr_uniform(src, fd.MAX_RANGE + 1)
    with pytest.raises(fd.ImproperFraction):
        fd.bernoulli(src, 3, 2)
    with pytest.raises(fd.FactorialOverflow):
        fd.random_permutation(src, 21)
    assert issubclass(fd.FactorialOverflow, fd.Error)
    assert issubclass(fd.Error, ValueError)


def test_permutations():
    src = fd.BitSource(3)
    for sampler in (fd.fisher_yates, fd.random_permutation, fd.random_permutation_selection):
        assert sorted(sampler(src, 9)) == list(range(1, 10))
    digits = fd.rank_to_lehmer(4000, 7)
    assert fd.lehmer_to_rank(digits) == 4000
    perm = fd.lehmer_to_permutation(digits)
    assert fd.inversion_count(perm) == sum(digits)
    assert sorted(fd.lehmer_to_permutation(digits, method="fy")) == list(range(1, 8))


def test_bernoulli_mean():
    src = fd.BitSource(11)
    ones = sum(fd.bernoulli(src, 1, 3) for _ in range(30000))
    assert abs(ones / 30000 - 1 / 3) < 0.02
    assert fd.binary_expansion(1, 3, 6) == [0, 1, 0, 1, 0, 1]


def test_cost_analysis():
    assert fd.batch_cost(3, 6) == pytest.approx(1.7944315472525175, abs=1e-12)
    assert fd.auto_batch_size(3) == 39
    assert fd.asymptotic_constant() == pytest.approx(1.1099488636120963, abs=1e-12)
    assert abs(fd.asymptotic_cost(3000) - fd.exact_cost_float(3000)) < 0.2
    z = fd.zeta(complex(1, 1))
    assert z.real == pytest.approx(0.5821580597520036, abs=1e-12)
    assert fd.nu(1, 3) + fd.nu(2, 3) == pytest.approx(2.0, abs=1e-12)
    assert math.isclose(fd.fluctuation(0.25, 12), fd.fluctuation(1.25, 12), abs_tol=1e-12)


def test_bench_report():
    report = fd.bench(8, 1000, seed=2)
    assert report["total_bits"] == 3000
    assert report["abs_deviation"] == 0
    report = fd.bench(3, 6000, batch=6, seed=2)
    assert abs(report["mean_bits"] - report["theory"]) < 0.05
