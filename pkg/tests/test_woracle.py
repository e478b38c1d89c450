import itertools

import pytest
from hypothesis import given, settings

from conedgraph.acceptance import random_w_word
from conedgraph.aperiodic import WordSchedule, tm_prefix, v
from conedgraph.woracle import (
    WOracleConfig,
    is_tm_factor,
    is_w_word,
    longest_w_prefix,
    w_word_witness,
)
from conedgraph.words import invert

from conftest import brute_is_w_word, reduced_words

L1 = WOracleConfig.with_base_length(1)


def test_tm_factor_examples():
    assert is_tm_factor("abba")
    assert not is_tm_factor("aaa")
    assert not is_tm_factor("ababa")  # overlap
    assert is_tm_factor("")


def test_tm_factor_window_validation(rng):
    text = tm_prefix(1 << 16)
    factors = {text[i : i + n] for n in range(1, 25) for i in range(len(text) - n + 1)}
    assert all(is_tm_factor(s) for s in factors)
    misses = 0
    while misses < 1000:
        s = "".join(rng.choice("ab") for _ in range(rng.randint(3, 24)))
        if s in factors:
            continue
        misses += 1
        assert not is_tm_factor(s)


@pytest.mark.parametrize("z, expected", [("c", True), ("cac", True), ("acb", False), ("acc", False), ("a", True), ("C", True)])
def test_w_word_examples(z, expected):
    assert is_w_word(z, L1) is expected


def test_identity_is_not_a_w_word():
    with pytest.raises(ValueError, match="nontrivial"):
        is_w_word("")


def test_every_letter_is_a_w_word():
    for base_length in (1, 2, 5):
        cfg = WOracleConfig.with_base_length(base_length)
        assert all(is_w_word(x, cfg) for x in "abcABC")


def test_mixed_signs_are_rejected():
    assert not is_w_word("aB")
    assert not is_w_word("Ca")


@pytest.mark.parametrize("base_length", [1, 2, 3])
def test_oracle_matches_brute_force(base_length):
    cfg = WOracleConfig.with_base_length(base_length)
    for n in range(1, 9):
        for t in itertools.product("abc", repeat=n):
            z = "".join(t)
            assert is_w_word(z, cfg) == brute_is_w_word(z, base_length), z


@pytest.mark.parametrize("base_length", [1, 4])
def test_witness_is_genuine(rng, base_length):
    cfg = WOracleConfig.with_base_length(base_length)
    sched = cfg.schedule
    for _ in range(500):
        z = random_w_word(rng, sched)
        wit = w_word_witness(z, cfg)
        assert wit is not None
        text = sched.w(wit.n) * abs(wit.m)
        assert (z if wit.m > 0 else invert(z)) in text


def test_factor_closed(rng):
    sched = WordSchedule(1)
    for _ in range(200):
        z = random_w_word(rng, sched, max_n=20)[:30]
        for i in range(len(z)):
            for j in range(i + 1, len(z) + 1):
                assert is_w_word(z[i:j]), (z, i, j)


@settings(max_examples=300)
@given(reduced_words.filter(bool))
def test_sign_rule(z):
    assert is_w_word(z) == is_w_word(invert(z))


def test_longest_prefix_examples():
    assert longest_w_prefix("acb", 0, L1) == 2
    assert longest_w_prefix(v(5), 0, L1) == 5
    assert longest_w_prefix("b", 0, L1) == 1
    with pytest.raises(ValueError):
        longest_w_prefix("ab", 2)


@settings(max_examples=300)
@given(reduced_words.filter(bool))
def test_longest_prefix_matches_linear_scan(w):
    for start in range(len(w)):
        linear = max(l for l in range(1, len(w) - start + 1) if is_w_word(w[start : start + l]))
        assert longest_w_prefix(w, start) == linear


def test_long_schedule_words_are_w_words():
    for base_length in (1, 3):
        sched = WordSchedule(base_length)
        cfg = WOracleConfig(schedule=sched)
        for n in (1, 10, 100, 300):
            assert w_word_witness(sched.v(n), cfg) is not None
            assert is_w_word(sched.w(n) * 3, cfg)
            assert is_w_word(invert(sched.w(n) * 3), cfg)
            assert not is_w_word(sched.w(n) + sched.w(n + 1), cfg)
