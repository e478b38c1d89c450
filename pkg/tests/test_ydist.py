from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conedgraph.acceptance import random_structured_word
from conedgraph.aperiodic import WordSchedule, v, w
from conedgraph.geometry import random_c_free_word, random_reduced_word
from conedgraph.woracle import WOracleConfig, is_w_word
from conedgraph.words import multiply, power, reduce
from conedgraph.ydist import (
    power_lengths,
    y_dist,
    y_factorization,
    y_length,
    y_length_dp,
    y_length_greedy,
)

from conftest import brute_y_length, reduced_words

L1 = WOracleConfig.with_base_length(1)


def test_dp_examples():
    for n in (1, 2, 17, 150):
        assert y_length_dp(v(n), L1).length == 1
    fac = y_length_dp("acb", L1)
    assert fac.factors == ("ac", "b")
    assert [y_length_dp("a" * k, L1).length for k in (1, 2, 3)] == [1, 1, 2]


def test_greedy_examples():
    assert y_length_greedy("acb", L1).factors == ("ac", "b")
    assert [y_length_greedy("a" * k, L1).length for k in (1, 2, 3)] == [1, 1, 2]
    assert y_length_greedy(v(40), L1).length == 1


def test_identity_has_length_zero():
    assert y_length_dp("").length == 0
    assert y_length_greedy("").factors == ()
    assert y_length("") == 0


def test_y_dist_examples():
    assert y_dist("abC", "abC") == 0
    for n in (1, 5, 30):
        assert y_dist("", w(n)) == 1
    d = y_dist("", power("ab", 14))
    assert d >= 2
    assert d == y_length_dp(power("ab", 14)).length == 7


def test_factorization_is_graphical_and_valid(rng):
    sched = WordSchedule()
    for _ in range(300):
        word = random_structured_word(rng, 120, sched)
        for fac in (y_length_dp(word), y_length_greedy(word)):
            assert fac.word() == word
            assert all(is_w_word(z) for z in fac.factors)
            assert fac.breakpoints()[-1] == len(word)


def test_dp_matches_exhaustive_search(rng):
    sched = WordSchedule()
    for _ in range(150):
        word = random_structured_word(rng, 9, sched) if rng.random() < 0.5 else random_reduced_word(rng, rng.randint(1, 9))
        assert y_length_dp(word).length == brute_y_length(word)


def test_greedy_equals_dp_on_random_words(rng):
    sched = WordSchedule()
    for k in range(2000):
        word = random_structured_word(rng, 200, sched) if k % 2 else random_reduced_word(rng, rng.randint(1, 200))
        assert y_length_greedy(word).length == y_length_dp(word).length


def test_bounded_length():
    word = power("ab", 20)
    assert y_length(word) == 10
    assert y_length(word, limit=10) == 10
    assert y_length(word, limit=9) is None


@settings(max_examples=300)
@given(reduced_words, reduced_words, reduced_words)
def test_metric_axioms(x, y, z):
    assert y_dist(x, y) == y_dist(y, x)
    assert y_dist(x, z) <= y_dist(x, y) + y_dist(y, z)
    assert (y_dist(x, y) == 0) == (x == y)
    assert y_dist(x, y) <= len(multiply(x[::-1].swapcase(), y))


@settings(max_examples=200)
@given(reduced_words, reduced_words, reduced_words)
def test_left_invariance(g, x, y):
    assert y_dist(multiply(g, x), multiply(g, y)) == y_dist(x, y)


@settings(max_examples=100)
@given(st.text(alphabet="abcABC", min_size=1, max_size=6).map(reduce).filter(bool), st.integers(1, 12), st.integers(1, 12))
def test_subadditivity(g, m, n):
    assert y_length(power(g, m + n)) <= y_length(power(g, m)) + y_length(power(g, n))


def test_power_lengths_examples():
    est = power_lengths("a", 21)
    assert all(k >= n // 7 for n, k in est.samples)
    assert est.lower == Fraction(1, 7) and est.upper >= est.lower
    assert not est.power_bound_violations

    cw = power_lengths("ac", 30)
    assert all(k == 1 for _, k in cw.samples)
    assert cw.upper == Fraction(1, 30)
    assert cw.lower is None

    with pytest.raises(ValueError):
        power_lengths("", 3)


def test_power_bound_on_random_c_free(rng):
    for _ in range(50):
        g = random_c_free_word(rng, rng.randint(1, 8))
        est = power_lengths(g, 49, method="dp")
        assert not est.power_bound_violations
        assert est.upper >= Fraction(1, 7)


def test_non_properness_witness():
    for base_length in (1, 3):
        cfg = WOracleConfig.with_base_length(base_length)
        sched = cfg.schedule
        for n in range(1, 201, 7):
            assert y_dist("", sched.v(n), cfg) == 1
            assert len(sched.v(n)) == base_length + n - 1


def test_y_factorization_of_pair():
    fac = y_factorization("ac", "c")
    assert fac.word() == "CAc"
    assert fac.length == 2
