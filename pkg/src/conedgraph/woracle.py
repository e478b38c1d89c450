"""Membership oracle for W-words: nontrivial subwords of some power w_n^m, m != 0.

The positive W-words form the generating set of the coned-off graph Y,
viewed as a Cayley graph of F(a, b, c).  The decision procedure splits a
positive candidate at its c letters and reduces every case to prefix and
factor tests against the Thue-Morse word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .aperiodic import WordSchedule, tm_prefix
from .words import invert


@dataclass(frozen=True)
class WOracleConfig:
    schedule: WordSchedule = field(default_factory=WordSchedule)
    recurrence_window_factor: int = 16
    recurrence_window_pad: int = 64

    @classmethod
    def with_base_length(cls, base_length: int) -> WOracleConfig:
        return cls(schedule=WordSchedule(base_length))

    @property
    def base_length(self) -> int:
        return self.schedule.base_length

    def window(self, length: int) -> int:
        return self.recurrence_window_factor * length + self.recurrence_window_pad


DEFAULT_CONFIG = WOracleConfig()


class Witness(NamedTuple):
    """z is a subword of w_n^m."""

    n: int
    m: int


def is_tm_factor(s: str, config: WOracleConfig = DEFAULT_CONFIG) -> bool:
    """True iff the positive {a,b}-word s occurs in the infinite Thue-Morse word."""
    if not s:
        return True
    return s in tm_prefix(config.window(len(s)))


def _occurrence_end(s: str, min_end: int, config: WOracleConfig) -> int | None:
    """Some end position >= min_end of an occurrence of s in the Thue-Morse word."""
    if not s:
        return min_end
    start = max(0, min_end - len(s))
    text = tm_prefix(min_end + config.window(len(s)))
    i = text.find(s, start)
    return None if i < 0 else i + len(s)


def _positive_witness(z: str, config: WOracleConfig) -> Witness | None:
    sched = config.schedule
    blocks = z.split("c")
    k = len(blocks) - 1
    if k == 0:
        # c-free: z must be a subword of some v_n
        end = _occurrence_end(z, sched.base_length, config)
        return None if end is None else Witness(sched.index_of_length(end), 1)
    first, last = blocks[0], blocks[-1]
    if k == 1:
        # first is a suffix of v_n, last is a prefix of v_n
        if last != tm_prefix(len(last)):
            return None
        end = _occurrence_end(first, max(sched.base_length, len(last)), config)
        if end is None:
            return None
        return Witness(sched.index_of_length(end), 2 if last else 1)
    # k >= 2: the interior blocks are full copies of a single v_n
    middle = blocks[1]
    n = sched.index_of_length(len(middle))
    if n is None or middle != tm_prefix(len(middle)):
        return None
    if any(b != middle for b in blocks[2:-1]):
        return None
    if not (middle.endswith(first) and middle.startswith(last)):
        return None
    return Witness(n, k + 1 if last else k)


@lru_cache(maxsize=1 << 20)
def _witness(z: str, config: WOracleConfig) -> Witness | None:
    if z.islower():
        return _positive_witness(z, config)
    if z.isupper():
        wit = _positive_witness(invert(z), config)
        return None if wit is None else Witness(wit.n, -wit.m)
    return None  # mixed signs


def w_word_witness(z: str, config: WOracleConfig = DEFAULT_CONFIG) -> Witness | None:
    """A pair (n, m) with z a subword of w_n^m, or None when z is not a W-word.

    z must be a nontrivial freely reduced word.
    """
    if not z:
        raise ValueError("W-words are nontrivial")
    return _witness(z, config)


def is_w_word(z: str, config: WOracleConfig = DEFAULT_CONFIG) -> bool:
    if not z:
        raise ValueError("W-words are nontrivial")
    return _witness(z, config) is not None


def longest_w_prefix(w: str, start: int = 0, config: WOracleConfig = DEFAULT_CONFIG) -> int:
    """Largest l >= 1 such that w[start:start+l] is a W-word.

    Galloping then binary search; valid because W-words are closed under
    taking nontrivial subwords.
    """
    n = len(w) - start
    if n <= 0:
        raise ValueError("start must lie inside the word")
    good, step = 1, 1
    bad = n + 1
    while good < n:
        probe = min(good + step, n)
        if _witness(w[start : start + probe], config) is not None:
            good = probe
            step *= 2
        else:
            bad = probe
            break
    while bad - good > 1:
        mid = (good + bad) // 2
        if _witness(w[start : start + mid], config) is not None:
            good = mid
        else:
            bad = mid
    return good


def clear_cache() -> None:
    _witness.cache_clear()
