from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from conedgraph.aperiodic import WordSchedule
from conedgraph.words import reduce

letters = st.sampled_from("abcABC")
raw_words = st.text(alphabet="abcABC", max_size=40)
reduced_words = raw_words.map(reduce)
c_free_words = st.text(alphabet="abAB", max_size=30).map(reduce)


def tm_oracle(n: int) -> str:
    """Thue-Morse prefix straight from the popcount definition."""
    return "".join("ab"[bin(i).count("1") % 2] for i in range(n))


def brute_is_w_word(z: str, base_length: int = 1, max_n: int = 64, max_m: int = 12) -> bool:
    """Search the powers w_n^m and w_n^-m directly."""
    sched = WordSchedule(base_length)
    inv = z[::-1].swapcase()
    for n in range(1, max_n + 1):
        text = sched.w(n) * max_m
        if z in text or inv in text:
            return True
    return False


def brute_y_length(w: str, base_length: int = 1) -> int:
    """Minimal number of W-word factors by exhaustive recursion (short words only)."""
    memo: dict[int, int] = {len(w): 0}

    def best(i: int) -> int:
        if i not in memo:
            memo[i] = min(1 + best(j) for j in range(i + 1, len(w) + 1) if brute_is_w_word(w[i:j], base_length))
        return memo[i]

    return best(0)


@pytest.fixture
def rng():
    return random.Random(20261017)
