"""Coned-off Cayley graph Y of F(a,b,c) and experiments on the F(a,b) action."""

from .aperiodic import WordSchedule, is_7_aperiodic, tm_prefix
from .woracle import WOracleConfig, is_tm_factor, is_w_word, longest_w_prefix, w_word_witness
from .words import (
    CyclicWord,
    WordParseError,
    common_root,
    cyclic_reduce,
    invert,
    multiply,
    parse,
    power,
    primitive_root,
)
from .ydist import WFactorization, power_lengths, y_dist, y_length, y_length_dp, y_length_greedy

__version__ = "0.1.0"
