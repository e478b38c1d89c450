"""End-to-end checks of the F(a,b) action on Y at desk scale.

Each ``criterion_*`` function runs one experiment and returns a
CriterionResult; ``run_all`` chains them for ``verify-all``.  ``scale``
shrinks sample counts for smoke runs and is 1.0 for the real thing.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .acylindricity import AcylindricityViolation, AcylParams, census, check_census
from .aperiodic import WordSchedule, is_7_aperiodic
from .geometry import (
    gluing_experiment,
    hausdorff_experiment,
    qc_experiment,
    random_c_free_word,
    random_reduced_word,
)
from .woracle import WOracleConfig, is_w_word
from .words import cyclic_reduce, invert, multiply, power, primitive_root
from .ydist import power_lengths, y_dist, y_length, y_length_dp, y_length_greedy


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float = 0.0
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name} ({self.seconds:.1f}s) {self.detail.get('summary', '')}"

    def as_dict(self) -> dict:
        return {
            "number": self.number,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }


def _scaled(n: int, scale: float, minimum: int = 1) -> int:
    return max(minimum, round(n * scale))


def criterion_orbit_not_qi(base_length: int = 1, count: int = 200, limit_s: float = 10.0) -> CriterionResult:
    t0 = time.perf_counter()
    sched = WordSchedule(base_length)
    config = WOracleConfig(schedule=sched)
    bad = []
    for n in range(1, count + 1):
        v = sched.v(n)
        d = y_dist("", v, config)
        if d != 1 or len(v) != base_length + n - 1:
            bad.append({"n": n, "y_dist": d, "length": len(v)})
    dt = time.perf_counter() - t0
    return CriterionResult(
        1,
        "orbit map not a quasi-isometric embedding",
        not bad and dt < limit_s,
        dt,
        {"violations": bad, "count": count, "summary": f"d_Y(1,v_n)=1 for n<={count}, |v_n| up to {base_length + count - 1}"},
    )


def power_sample(seed: int, samples: int = 50, max_length: int = 8, max_power: int = 49, base_length: int = 1):
    rng = random.Random(seed)
    config = WOracleConfig.with_base_length(base_length)
    out = []
    for _ in range(samples):
        g = random_c_free_word(rng, rng.randint(1, max_length))
        out.append(power_lengths(g, max_power, config, method="dp"))
    return out


def criterion_power_bound(estimates, seconds: float, limit_s: float = 300.0) -> CriterionResult:
    bad = [{"g": e.g, "n": n, "y_length": k} for e in estimates for n, k in e.samples if k < n // 7]
    return CriterionResult(
        2,
        "|g^n|_Y >= floor(n/7) on F(a,b)",
        not bad and seconds < limit_s,
        seconds,
        {"violations": bad, "samples": len(estimates), "summary": f"{len(bad)} violations over {len(estimates)} elements"},
    )


def criterion_translation_bound(estimates) -> CriterionResult:
    bad = [{"g": e.g, "upper": str(e.upper)} for e in estimates if e.upper < Fraction(1, 7)]
    lowest = min(estimates, key=lambda e: e.upper)
    return CriterionResult(
        3,
        "translation length >= 1/7 on F(a,b)",
        not bad,
        0.0,
        {
            "violations": bad,
            "smallest_upper": str(lowest.upper),
            "smallest_upper_g": lowest.g,
            "summary": f"smallest min_n |g^n|_Y/n = {lowest.upper} ({lowest.g})",
        },
    )


def random_w_word(rng: random.Random, sched: WordSchedule, max_n: int = 40) -> str:
    """A random nontrivial subword of a random power w_n^m, m != 0."""
    n = rng.randint(1, max_n)
    m = rng.randint(1, 4)
    text = sched.w(n) * m
    i = rng.randrange(len(text))
    j = rng.randint(i + 1, len(text))
    z = text[i:j]
    return invert(z) if rng.random() < 0.5 else z


def random_structured_word(rng: random.Random, max_length: int, sched: WordSchedule) -> str:
    """Random reduced word assembled from W-word pieces, so factorizations are nontrivial."""
    w = ""
    target = rng.randint(1, max_length)
    while len(w) < target:
        w = multiply(w, random_w_word(rng, sched))
    return w[:target] or "a"


def brute_w_words(max_length: int, base_length: int, max_n: int = 64, max_m: int = 12) -> set[str]:
    """All positive W-words of length <= max_length, by listing subwords of w_n^m."""
    sched = WordSchedule(base_length)
    found: set[str] = set()
    for n in range(1, max_n + 1):
        text = sched.w(n) * max_m
        for i in range(len(text)):
            for j in range(i + 1, min(i + max_length, len(text)) + 1):
                found.add(text[i:j])
    return found


def criterion_cross_validation(
    seed: int, words: int = 10_000, max_length: int = 200, brute_length: int = 12, limit_s: float = 600.0
) -> CriterionResult:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    config = WOracleConfig()
    sched = config.schedule
    greedy_bad = []
    for k in range(words):
        if k % 2:
            w = random_reduced_word(rng, rng.randint(1, max_length))
        else:
            w = random_structured_word(rng, max_length, sched)
        d, g = y_length_dp(w, config).length, y_length_greedy(w, config).length
        if d != g:
            greedy_bad.append({"word": w, "dp": d, "greedy": g})
    brute_bad = []
    checked = 0
    for base_length in (1, 2, 3):
        cfg = WOracleConfig.with_base_length(base_length)
        brute = brute_w_words(brute_length, base_length)
        for n in range(1, brute_length + 1):
            for letters in itertools.product("abc", repeat=n):
                z = "".join(letters)
                expected = z in brute
                checked += 1
                if is_w_word(z, cfg) != expected or (y_length_dp(z, cfg).length == 1) != expected:
                    brute_bad.append({"z": z, "base_length": base_length, "brute": expected})
    dt = time.perf_counter() - t0
    return CriterionResult(
        4,
        "greedy == DP and oracle == brute force",
        not greedy_bad and not brute_bad and dt < limit_s,
        dt,
        {
            "greedy_mismatches": greedy_bad[:20],
            "brute_mismatches": brute_bad[:20],
            "words": words,
            "brute_checked": checked,
            "summary": f"{words} words, {checked} brute-force memberships; "
            f"{len(greedy_bad)}+{len(brute_bad)} mismatches",
        },
    )


def criterion_metric_axioms(seed: int, triples: int = 10_000, max_length: int = 100) -> CriterionResult:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    sched = WordSchedule()
    bad = []
    for k in range(triples):
        if k % 2:
            x, y, z = (random_reduced_word(rng, rng.randint(0, max_length)) for _ in range(3))
        else:
            # close points, so the triangle inequality is tight more often
            x = random_structured_word(rng, max_length, sched)
            y = multiply(x, random_structured_word(rng, 20, sched))
            z = multiply(y, random_structured_word(rng, 20, sched))
        dxy, dyx = y_dist(x, y), y_dist(y, x)
        dyz, dxz = y_dist(y, z), y_dist(x, z)
        if dxy != dyx or dxz > dxy + dyz or (dxy == 0) != (x == y):
            bad.append({"x": x, "y": y, "z": z})
    dt = time.perf_counter() - t0
    return CriterionResult(
        5, "y_dist symmetry and triangle inequality", not bad, dt,
        {"violations": bad[:20], "triples": triples, "summary": f"{len(bad)} violations over {triples} triples"},
    )


def criterion_fellow_traveling(seed: int, samples: int = 500) -> CriterionResult:
    t0 = time.perf_counter()
    report = hausdorff_experiment(samples, 50, 400, seed)
    low = [v for v, n in zip(report.values, report.lengths) if n < 200]
    high = [v for v, n in zip(report.values, report.lengths) if n >= 200]
    low_max = max(low, default=0)
    high_max = max(high, default=0)
    dt = time.perf_counter() - t0
    return CriterionResult(
        6, "X- and Y-geodesics fellow-travel", high_max <= low_max + 1, dt,
        {
            "C_hat": report.estimate,
            "band_50_200": low_max,
            "band_200_400": high_max,
            "witness": list(report.witness or ()),
            "summary": f"C_hat = {report.estimate} (bands: {low_max} / {high_max})",
        },
    )


def criterion_quasiconvexity(seed: int, c_hat: int, samples: int = 500) -> CriterionResult:
    t0 = time.perf_counter()
    report = qc_experiment(samples, 200, seed)
    bad = [v for v in report.values if v > c_hat + 1]
    dt = time.perf_counter() - t0
    return CriterionResult(
        7, "F(a,b) orbit is (C+1)-quasiconvex", not bad, dt,
        {"max_probe": report.estimate, "bound": c_hat + 1, "summary": f"max probe {report.estimate} <= {c_hat + 1}"},
    )


def criterion_gluing(seed: int, c_hat: int, samples: int = 1000) -> CriterionResult:
    t0 = time.perf_counter()
    report = gluing_experiment(samples, 1, 400, seed)
    bad = [v for v in report.values if v > 2 * c_hat]
    dt = time.perf_counter() - t0
    return CriterionResult(
        8, "gluing defect <= 2C", not bad, dt,
        {"max_defect": report.estimate, "bound": 2 * c_hat, "witness": list(report.witness or ()),
         "summary": f"max defect {report.estimate} <= {2 * c_hat}"},
    )


def _root_free_c_free(rng: random.Random, max_length: int = 5) -> str:
    while True:
        u = random_c_free_word(rng, rng.randint(1, max_length))
        if not cyclic_reduce(u).conjugator and primitive_root(u)[1] == 1:
            return u


def census_pairs(seed: int, separation: int, count: int = 20) -> list[tuple[str, str]]:
    """Vertex pairs (x, y) with d_Y(x, y) >= separation.

    Mixes random c-free targets with y = x u^N for a root-free c-free u, whose
    coarse stabilizer contains the conjugates x u^t x^-1.
    """
    rng = random.Random(seed)
    pairs = []
    for k in range(count):
        kind = k % 4
        x = ""
        if kind == 3:
            x = random_c_free_word(rng, rng.randint(1, 3))
        elif kind == 2:
            x = random_reduced_word(rng, rng.randint(1, 3))
        if kind == 0:
            h = random_c_free_word(rng, 3 * separation)
        else:
            u = _root_free_c_free(rng)
            h = power(u, 1)
            while y_length(h) < separation:
                h = power(u, 2 * len(h) // len(u))
        y = multiply(x, h)
        if y_dist(x, y) < separation:
            h = multiply(h, random_c_free_word(rng, 3 * separation))
            y = multiply(x, h)
        pairs.append((x, y))
    return pairs


def criterion_acylindricity(seed: int, c_hat: int, pairs: int = 20, cap: int = 10, radii=(1, 2)) -> CriterionResult:
    t0 = time.perf_counter()
    c_hat = max(1, c_hat)

    separation = max(AcylParams(R, c_hat).L for R in radii)
    vertex_pairs = census_pairs(seed, separation, pairs)
    rows = []
    failures = []
    for R in radii:
        for x, y in vertex_pairs:
            try:
                rep = census(x, y, R, cap, c_hat)
                check_census(rep)
                ok = rep.complete and rep.separation >= rep.params.L
                rows.append({
                    "R": R, "x": x, "y_length_A": len(y), "separation": rep.separation,
                    "members": rep.member_words, "root": None if rep.root is None else rep.root.as_dict(),
                })
                if not ok:
                    failures.append({"R": R, "x": x, "reason": "incomplete or not separated"})
            except AcylindricityViolation as err:
                failures.append({"R": R, "x": x, "reason": str(err)})
    dt = time.perf_counter() - t0
    most = max((len(r["members"]) for r in rows), default=0)
    return CriterionResult(
        9, "acylindricity census", not failures, dt,
        {
            "C_hat": c_hat,
            "params": {R: AcylParams(R, c_hat).as_dict() for R in radii},
            "censuses": rows,
            "failures": failures,
            "summary": f"{len(rows)} censuses at cap {cap}, max {most} nontrivial members, {len(failures)} failures",
        },
    )


def criterion_aperiodic(base_length: int = 1, count: int = 512, limit_s: float = 60.0) -> CriterionResult:
    t0 = time.perf_counter()
    sched = WordSchedule(base_length)
    bad = [n for n in range(1, count + 1) if not is_7_aperiodic(sched.v(n))]
    dt = time.perf_counter() - t0
    return CriterionResult(
        10, "every v_n is 7-aperiodic", not bad and dt < limit_s, dt,
        {"violations": bad, "summary": f"checked v_1..v_{count}"},
    )


def run_all(seed: int = 7, scale: float = 1.0, base_length: int = 1, callback=None) -> list[CriterionResult]:
    results = []

    def done(r: CriterionResult) -> CriterionResult:
        results.append(r)
        if callback:
            callback(r)
        return r

    done(criterion_orbit_not_qi(base_length, _scaled(200, scale)))
    t0 = time.perf_counter()
    estimates = power_sample(seed, _scaled(50, scale), base_length=base_length)
    done(criterion_power_bound(estimates, time.perf_counter() - t0))
    done(criterion_translation_bound(estimates))
    done(criterion_cross_validation(seed, _scaled(10_000, scale), brute_length=12 if scale >= 1 else 7))
    done(criterion_metric_axioms(seed, _scaled(10_000, scale)))
    fellow = done(criterion_fellow_traveling(seed, _scaled(500, scale)))
    c_hat = fellow.detail["C_hat"]
    done(criterion_quasiconvexity(seed, c_hat, _scaled(500, scale)))
    done(criterion_gluing(seed, c_hat, _scaled(1000, scale)))
    done(criterion_acylindricity(seed, c_hat, _scaled(20, scale, 4), cap=10 if scale >= 1 else 6))
    done(criterion_aperiodic(base_length, _scaled(512, scale)))
    return results
