"""Empirical hyperbolicity and fellow-traveling measurements in Y.

All constants reported here are maxima over samples, so they are lower
bounds for the true constants.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import combinations

from .woracle import DEFAULT_CONFIG, WOracleConfig
from .words import invert, is_c_free, multiply
from .ydist import y_dist, y_length, y_length_dp


@dataclass(frozen=True)
class VertexPath:
    vertices: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1


@dataclass
class GeometryReport:
    kind: str
    estimate: int | float = 0
    sample_count: int = 0
    witness: tuple[str, ...] | None = None
    values: list = field(default_factory=list)
    lengths: list[int] = field(default_factory=list)
    seed: int | None = None

    def update(self, value, witness) -> None:
        self.sample_count += 1
        self.values.append(value)
        if self.witness is None or value > self.estimate:
            self.estimate = value
            self.witness = tuple(witness)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "estimate": self.estimate,
            "sample_count": self.sample_count,
            "witness": list(self.witness) if self.witness else None,
            "seed": self.seed,
        }


def x_geodesic(x: str, y: str) -> VertexPath:
    h = multiply(invert(x), y)
    return VertexPath(tuple(multiply(x, h[:i]) for i in range(len(h) + 1)))


def y_geodesic(x: str, y: str, config: WOracleConfig = DEFAULT_CONFIG) -> VertexPath:
    """Y-geodesic through the prefix products of the optimal W-decomposition of x^-1 y."""
    h = multiply(invert(x), y)
    fac = y_length_dp(h, config)
    return VertexPath(tuple(multiply(x, h[:p]) for p in fac.breakpoints()))


def hausdorff_Y(P: VertexPath, Q: VertexPath, config: WOracleConfig = DEFAULT_CONFIG) -> int:
    """Symmetrized Hausdorff distance between vertex sets, measured in d_Y."""
    if not P.vertices or not Q.vertices:
        raise ValueError("paths must be nonempty")
    cache: dict[tuple[str, str], int] = {}

    def d(p: str, q: str) -> int:
        key = (p, q) if p <= q else (q, p)
        if key not in cache:
            cache[key] = y_dist(p, q, config)
        return cache[key]

    one = max(min(d(p, q) for q in Q.vertices) for p in P.vertices)
    two = max(min(d(p, q) for p in P.vertices) for q in Q.vertices)
    return max(one, two)


def geodesic_hausdorff(x: str, y: str, config: WOracleConfig = DEFAULT_CONFIG) -> tuple[int, int]:
    """hausdorff_Y(x_geodesic(x, y), y_geodesic(x, y)) without the quadratic scan.

    Both geodesics have all their vertices at x * (prefix of h), h = x^-1 y,
    and the distance between prefixes i < j is |h[i:j]|_Y, which only grows
    as the segment grows.  So the nearest Y-vertex to any X-vertex is one of
    its two neighbours in position order.  Returns (distance, position of a
    worst X-vertex).
    """
    h = multiply(invert(x), y)
    points = y_length_dp(h, config).breakpoints()
    worst, where = 0, 0
    for i in range(len(h) + 1):
        k = bisect_right(points, i) - 1
        lo = points[k]
        if lo == i:
            continue
        hi = points[k + 1]
        best = min(y_length(h[lo:i], config), y_length(h[i:hi], config))
        if best > worst:
            worst, where = best, i
    return worst, where


def gluing_defect(x: str, x_mid: str, y: str, config: WOracleConfig = DEFAULT_CONFIG) -> int:
    h = multiply(invert(x), y)
    part = multiply(invert(x), x_mid)
    if not h.startswith(part):
        raise ValueError(f"{x_mid!r} does not lie on the X-geodesic from {x!r} to {y!r}")
    return abs(y_dist(x, x_mid, config) + y_dist(x_mid, y, config) - y_dist(x, y, config))


def four_point_defect(w: str, x: str, y: str, z: str, config: WOracleConfig = DEFAULT_CONFIG) -> float:
    d = {}
    pts = (w, x, y, z)
    for i, j in combinations(range(4), 2):
        d[i, j] = y_dist(pts[i], pts[j], config)
    sums = sorted([d[0, 1] + d[2, 3], d[0, 2] + d[1, 3], d[0, 3] + d[1, 2]])
    return (sums[2] - sums[1]) / 2


def delta_estimate(sample, config: WOracleConfig = DEFAULT_CONFIG) -> GeometryReport:
    report = GeometryReport("delta")
    for quad in sample:
        report.update(four_point_defect(*quad, config=config), quad)
    return report


def quasiconvexity_probe(g: str, config: WOracleConfig = DEFAULT_CONFIG) -> int:
    """Farthest a Y-geodesic from 1 to g strays from the X-geodesic, which lies in F(a,b)."""
    if not is_c_free(g):
        raise ValueError(f"{g!r} is not in F(a,b)")
    P = y_geodesic("", g, config)
    Q = x_geodesic("", g)
    qset = set(Q.vertices)
    worst = 0
    for p in P.vertices:
        if p in qset:
            continue
        worst = max(worst, min(y_dist(p, q, config) for q in Q.vertices))
    return worst


def random_reduced_word(rng: random.Random, length: int, alphabet: str = "abcABC") -> str:
    """Uniform random freely reduced word of the given length over ``alphabet``."""
    out: list[str] = []
    while len(out) < length:
        x = rng.choice(alphabet)
        if out and out[-1] == x.swapcase():
            continue
        out.append(x)
    return "".join(out)


def random_c_free_word(rng: random.Random, length: int) -> str:
    return random_reduced_word(rng, length, "abAB")


def hausdorff_experiment(
    samples: int, min_length: int, max_length: int, seed: int, config: WOracleConfig = DEFAULT_CONFIG
) -> GeometryReport:
    rng = random.Random(seed)
    report = GeometryReport("hausdorff", seed=seed)
    for _ in range(samples):
        x = random_reduced_word(rng, rng.randint(0, 20))
        h = random_reduced_word(rng, rng.randint(min_length, max_length))
        y = multiply(x, h)
        value, _ = geodesic_hausdorff(x, y, config)
        report.update(value, (x, y))
        report.lengths.append(len(h))
    return report


def delta_experiment(samples: int, length: int, seed: int, config: WOracleConfig = DEFAULT_CONFIG) -> GeometryReport:
    rng = random.Random(seed)
    quads = [tuple(random_reduced_word(rng, rng.randint(0, length)) for _ in range(4)) for _ in range(samples)]
    report = delta_estimate(quads, config)
    report.seed = seed
    return report


def qc_experiment(samples: int, length: int, seed: int, config: WOracleConfig = DEFAULT_CONFIG) -> GeometryReport:
    rng = random.Random(seed)
    report = GeometryReport("quasiconvexity", seed=seed)
    for _ in range(samples):
        g = random_c_free_word(rng, rng.randint(1, length))
        report.update(quasiconvexity_probe(g, config), (g,))
    return report


def gluing_experiment(
    samples: int, min_length: int, max_length: int, seed: int, config: WOracleConfig = DEFAULT_CONFIG
) -> GeometryReport:
    rng = random.Random(seed)
    report = GeometryReport("gluing", seed=seed)
    for _ in range(samples):
        x = random_reduced_word(rng, rng.randint(0, 20))
        h = random_reduced_word(rng, rng.randint(min_length, max_length))
        i = rng.randint(0, len(h))
        y = multiply(x, h)
        x_mid = multiply(x, h[:i])
        report.update(gluing_defect(x, x_mid, y, config), (x, x_mid, y))
    return report
