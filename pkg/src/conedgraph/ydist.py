"""Exact Y-lengths and Y-distances via minimal W-decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .woracle import DEFAULT_CONFIG, WOracleConfig, _witness, longest_w_prefix
from .words import invert, is_c_free, multiply, power


@dataclass(frozen=True)
class WFactorization:
    """Graphical factorization of a reduced word into W-words."""

    factors: tuple[str, ...]
    method: str

    @property
    def length(self) -> int:
        return len(self.factors)

    def word(self) -> str:
        return "".join(self.factors)

    def breakpoints(self) -> list[int]:
        """Positions 0 = p_0 < p_1 < ... < p_k = |w| between factors."""
        points = [0]
        for z in self.factors:
            points.append(points[-1] + len(z))
        return points


def y_length_dp(w: str, config: WOracleConfig = DEFAULT_CONFIG) -> WFactorization:
    """Optimal W-decomposition by dynamic programming over cut positions.

    best[i] = 1 + min best[j] over j < i with w[j:i] a W-word.  The scan
    over j stops at the first non-W-word segment, since every longer
    segment ending at i contains it.
    """
    n = len(w)
    best = [0] + [n + 1] * n
    back = [0] * (n + 1)
    for i in range(1, n + 1):
        for j in range(i - 1, -1, -1):
            if _witness(w[j:i], config) is None:
                break
            if best[j] + 1 < best[i]:
                best[i] = best[j] + 1
                back[i] = j
    factors = []
    i = n
    while i > 0:
        factors.append(w[back[i] : i])
        i = back[i]
    return WFactorization(tuple(reversed(factors)), "dp")


def y_length_greedy(w: str, config: WOracleConfig = DEFAULT_CONFIG) -> WFactorization:
    """Repeatedly split off the longest W-word prefix."""
    factors = []
    pos = 0
    while pos < len(w):
        step = longest_w_prefix(w, pos, config)
        factors.append(w[pos : pos + step])
        pos += step
    return WFactorization(tuple(factors), "greedy")


def y_length(w: str, config: WOracleConfig = DEFAULT_CONFIG, limit: int | None = None) -> int | None:
    """|w|_Y for a reduced word w.

    With ``limit`` set, gives up and returns None as soon as the length is
    known to exceed it; this is what makes displacement checks on very long
    words cheap.
    """
    count = pos = 0
    while pos < len(w):
        if limit is not None and count >= limit:
            return None
        pos += longest_w_prefix(w, pos, config)
        count += 1
    return count


def y_dist(x: str, y: str, config: WOracleConfig = DEFAULT_CONFIG) -> int:
    return y_length(multiply(invert(x), y), config)


def y_factorization(x: str, y: str, config: WOracleConfig = DEFAULT_CONFIG) -> WFactorization:
    return y_length_dp(multiply(invert(x), y), config)


@dataclass
class TranslationLengthEstimate:
    g: str
    samples: list[tuple[int, int]] = field(default_factory=list)
    upper: Fraction = Fraction(0)
    lower: Fraction | None = None
    power_bound_violations: list[int] = field(default_factory=list)

    @property
    def c_free(self) -> bool:
        return is_c_free(self.g)

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "samples": [{"n": n, "y_length": k} for n, k in self.samples],
            "upper": str(self.upper),
            "upper_float": float(self.upper),
            "lower": None if self.lower is None else str(self.lower),
            "power_bound_violations": self.power_bound_violations,
        }


def power_lengths(
    g: str, max_power: int, config: WOracleConfig = DEFAULT_CONFIG, method: str = "greedy"
) -> TranslationLengthEstimate:
    """Sample |g^n|_Y for n = 1..max_power and bound the translation length of g.

    By subadditivity the translation length is inf_n |g^n|_Y / n, so the
    running minimum is an upper bound.  For g in F(a,b) the lower bound 1/7
    holds and every sample must satisfy |g^n|_Y >= floor(n/7); violations
    are recorded rather than raised.
    """
    if not g:
        raise ValueError("translation length of the identity is not sampled")
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    measure = y_length_dp if method == "dp" else y_length_greedy
    est = TranslationLengthEstimate(g)
    for n in range(1, max_power + 1):
        k = measure(power(g, n), config).length
        est.samples.append((n, k))
    est.upper = min(Fraction(k, n) for n, k in est.samples)
    if est.c_free:
        est.lower = Fraction(1, 7)
        est.power_bound_violations = [n for n, k in est.samples if k < n // 7]
    return est
