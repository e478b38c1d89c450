"""Coarse stabilizer census for the F(a,b) action on Y.

For vertices x, y far apart in Y, the set
S = {g in F(a,b) : d_Y(x, gx) <= R and d_Y(y, gy) <= R}
must have at most M(R) elements, all powers of one root-free element with
bounded exponents.  The census enumerates S up to a word-length cap.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .woracle import DEFAULT_CONFIG, WOracleConfig
from .words import conjugate, invert, multiply, primitive_root
from .ydist import y_dist, y_length

log = logging.getLogger(__name__)

C_FREE_LETTERS = "abAB"
DEFAULT_BUDGET = 2_000_000


class AcylindricityViolation(AssertionError):
    """A census contradicts the acylindricity bounds for the supplied constants."""

    def __init__(self, message: str, details: dict):
        super().__init__(message)
        self.details = details


@dataclass(frozen=True)
class AcylParams:
    R: int
    C_hat: int = 1

    def __post_init__(self):
        if self.R < 1 or self.C_hat < 1:
            raise ValueError("R and C_hat must be >= 1")

    @property
    def L(self) -> int:
        return 100 * (self.R + 4 * self.C_hat) * (self.R + 6 * self.C_hat + 10)

    @property
    def M(self) -> int:
        return 14 * (self.R + 4 * self.C_hat + 1) + 1

    @property
    def exponent_cap(self) -> int:
        return 7 * (self.R + 4 * self.C_hat + 1)

    def as_dict(self) -> dict:
        return {"R": self.R, "C_hat": self.C_hat, "L": self.L, "M": self.M, "exponent_cap": self.exponent_cap}


@dataclass
class RootStructure:
    root: str
    exponents: list[int]

    def as_dict(self) -> dict:
        return {"root": self.root, "exponents": self.exponents}


@dataclass
class CensusReport:
    x: str
    y: str
    params: AcylParams
    cap: int
    separation: int
    members: list[dict] = field(default_factory=list)
    enumerated: int = 0
    complete: bool = True
    warnings: list[str] = field(default_factory=list)
    root: RootStructure | None = None

    @property
    def member_words(self) -> list[str]:
        return [m["g"] for m in self.members]

    @property
    def within_bound(self) -> bool:
        """Nontrivial member count <= M - 1 (the identity always qualifies)."""
        return len(self.members) <= self.params.M - 1

    def as_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "params": self.params.as_dict(),
            "cap": self.cap,
            "separation": self.separation,
            "separated": self.separation >= self.params.L,
            "identity_qualifies": True,
            "member_count": len(self.members),
            "members": self.members,
            "within_bound": self.within_bound,
            "enumerated": self.enumerated,
            "complete": self.complete,
            "warnings": self.warnings,
            "root_structure": None if self.root is None else self.root.as_dict(),
        }


def displacement(g: str, p: str, config: WOracleConfig = DEFAULT_CONFIG) -> int:
    """d_Y(p, g p)."""
    return y_dist(p, multiply(g, p), config)


def _displacement_at_most(g: str, p: str, bound: int, config: WOracleConfig) -> int | None:
    return y_length(conjugate(g, p), config, limit=bound)


def _scan_subtree(prefix: str, x: str, y: str, R: int, cap: int, budget: int, config: WOracleConfig):
    """Depth-first walk over reduced c-free words extending ``prefix``.

    With x the identity, d_Y(1, g) = |g|_Y can only grow along the tree, so
    subtrees are cut as soon as it exceeds R.
    """
    members = []
    visited = 0
    complete = True
    stack = [prefix]
    prune = x == ""
    while stack:
        g = stack.pop()
        visited += 1
        if visited > budget:
            complete = False
            break
        dx = _displacement_at_most(g, x, R, config)
        if dx is None and prune:
            continue
        if dx is not None:
            dy = _displacement_at_most(g, y, R, config)
            if dy is not None:
                members.append({"g": g, "dx": dx, "dy": dy})
        if len(g) < cap:
            last = g[-1]
            stack.extend(g + s for s in reversed(C_FREE_LETTERS) if s != last.swapcase())
    return members, visited, complete


def census(
    x: str,
    y: str,
    R: int,
    cap: int,
    C_hat: int = 1,
    config: WOracleConfig = DEFAULT_CONFIG,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> CensusReport:
    """Enumerate all g in F(a,b) with 1 <= |g|_A <= cap moving both x and y by at most R."""
    params = AcylParams(R, C_hat)
    separation = y_dist(x, y, config)
    report = CensusReport(x, y, params, cap, separation)
    if separation < params.L:
        msg = f"d_Y(x, y) = {separation} < L(R) = {params.L}; the bound M(R) is not claimed here"
        report.warnings.append(msg)
        log.warning(msg)
    if cap < 1:
        return report
    per_root = budget // len(C_FREE_LETTERS)
    jobs = [(s, x, y, R, cap, per_root, config) for s in C_FREE_LETTERS]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_scan_job, jobs))
    else:
        results = [_scan_job(job) for job in jobs]
    for members, visited, complete in results:
        report.members.extend(members)
        report.enumerated += visited
        report.complete &= complete
    report.members.sort(key=lambda m: (len(m["g"]), m["g"]))
    if report.complete and len(report.members) >= 2:
        # the common-root claim only applies to separated pairs
        report.root = root_structure(report, check=separation >= params.L)
    return report


def _scan_job(job):
    return _scan_subtree(*job)


def root_structure(report: CensusReport, check: bool = True) -> RootStructure | None:
    """Common primitive root of the nontrivial members, with signed exponents.

    Raises AcylindricityViolation (when ``check``) if the roots differ or an
    exponent exceeds the cap.
    """
    words = report.member_words
    if len(words) < 2:
        return None
    root, _ = primitive_root(words[0])
    exponents = []
    for g in words:
        r, e = primitive_root(g)
        if r == root:
            exponents.append(e)
        elif r == invert(root):
            exponents.append(-e)
        elif check:
            raise AcylindricityViolation(
                "census members have different primitive roots",
                {"root": root, "member": g, "member_root": r, "report": report.as_dict()},
            )
        else:
            return None
    cap = report.params.exponent_cap
    if check and any(abs(t) > cap for t in exponents):
        raise AcylindricityViolation(
            f"exponent beyond {cap}",
            {"root": root, "exponents": exponents, "report": report.as_dict()},
        )
    return RootStructure(root, exponents)


def check_census(report: CensusReport) -> None:
    """Raise AcylindricityViolation if a separated census breaks the member bound."""
    if report.separation >= report.params.L and not report.within_bound:
        raise AcylindricityViolation(
            f"{len(report.members)} nontrivial members exceed M(R) - 1 = {report.params.M - 1}",
            report.as_dict(),
        )
