"""Thue-Morse words and the word schedule v_n, w_n = v_n c."""

from __future__ import annotations

from dataclasses import dataclass

_SWAP_AB = str.maketrans("ab", "ba")
_tm = "a"


def tm_prefix(length: int) -> str:
    """Prefix of the infinite Thue-Morse word over {a, b}.

    Letter i is ``a`` when the binary popcount of i is even.
    """
    global _tm
    if length < 0:
        raise ValueError("length must be non-negative")
    while len(_tm) < length:
        _tm = _tm + _tm.translate(_SWAP_AB)
    return _tm[:length]


def is_k_aperiodic(w: str, k: int = 7) -> bool:
    """True iff no nonempty u has u^k as a subword of w."""
    n = len(w)
    for p in range(1, n // k + 1):
        need = (k - 1) * p  # matching positions i with w[i] == w[i+p] in a row
        run = 0
        for i in range(n - p):
            if w[i] == w[i + p]:
                run += 1
                if run >= need:
                    return False
            else:
                run = 0
    return True


def is_7_aperiodic(w: str) -> bool:
    return is_k_aperiodic(w, 7)


@dataclass(frozen=True)
class WordSchedule:
    """v_n is the Thue-Morse prefix of length base_length + n - 1."""

    base_length: int = 1

    def __post_init__(self):
        if self.base_length < 1:
            raise ValueError("base_length must be >= 1")

    def length(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be >= 1")
        return self.base_length + n - 1

    def index_of_length(self, length: int) -> int | None:
        """The n with |v_n| == length, or None."""
        if length < self.base_length:
            return None
        return length - self.base_length + 1

    def v(self, n: int) -> str:
        return tm_prefix(self.length(n))

    def w(self, n: int) -> str:
        return self.v(n) + "c"

    def words(self, count: int) -> list[str]:
        return [self.v(n) for n in range(1, count + 1)]


DEFAULT_SCHEDULE = WordSchedule()


def v(n: int, base_length: int = 1) -> str:
    return WordSchedule(base_length).v(n)


def w(n: int, base_length: int = 1) -> str:
    return WordSchedule(base_length).w(n)
