"""Batch cross-checks of the closed forms against the character oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .blocks import linkage_classes
from .characters import weyl_character
from .filtrations import (
    RESOLUTION_KINDS,
    edge_allowed,
    euler_check,
    good_resolution,
    p_filtration,
    xanth_sections,
)
from .homdim import (
    g_lambda,
    gfd_schur,
    gfd_schur_q2,
    glob_schur_formula,
    glob_schur_q2,
)
from .weights import SlWeight, dominance_lt

SUITES = ("xanth", "pfilt", "resolutions", "glob", "quantum", "monotone")

_MAX_REPORTED = 20


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case):
        self.checked += 1
        if not ok:
            self.failures.append(case)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failed": len(self.failures),
            "passed": self.passed,
            "failures": [str(f) for f in self.failures[:_MAX_REPORTED]],
        }


def _primes(p, default):
    return (p,) if p is not None else default


def suite_xanth(p=None, bound=None) -> SuiteResult:
    res = SuiteResult("xanth")
    for m in _primes(p, (2, 3, 5)):
        for r in range(1, (bound or 25) + 1):
            for a in range(m):
                sub, quot = xanth_sections(r, a, m)
                total = sub.character()
                if quot is not None:
                    total = total + quot.character()
                res.record(total == weyl_character(SlWeight((m * r + a,))), (m, r, a))
    return res


def pfilt_problems(f) -> list[str]:
    """Structural and character-level defects of one p-filtration."""
    problems = []
    lam, p = f.lam, f.p
    if f.character_sum() != weyl_character(lam):
        problems.append("character sum")
    bottom = f.bottom()
    if bottom.is_zero or bottom.weight != lam:
        problems.append("bottom section")
    for e in f.edges:
        u, v = sorted(e)
        if f.layers[u] == f.layers[v]:
            problems.append(f"edge {u}-{v} within a layer")
    if f.n == 3:
        nonzero = f.nonzero_sections()
        joined = {frozenset(e) for e in f.edges}
        for s, t in combinations(nonzero, 2):
            verdict = edge_allowed(s, t, p)
            if verdict is None:
                continue
            if verdict != (frozenset((s.label, t.label)) in joined):
                problems.append(f"edge rule {s.label}-{t.label}")
    return problems


def suite_pfilt(p=None, bound=None) -> SuiteResult:
    res = SuiteResult("pfilt")
    bound = 6 if bound is None else bound
    for q in _primes(p, (2, 3, 5)):
        for a in range(bound + 1):
            for b in range(bound + 1):
                for x in range(q):
                    for y in range(q):
                        lam = SlWeight((q * a + x, q * b + y))
                        problems = pfilt_problems(p_filtration(lam, q))
                        res.record(not problems, (q, str(lam), problems))
    return res


def suite_resolutions(p=None, bound=None) -> SuiteResult:
    res = SuiteResult("resolutions")
    bound = 6 if bound is None else bound
    for q in _primes(p, (3, 5)):
        for kind in RESOLUTION_KINDS:
            for a in range(bound + 1):
                for b in range(bound + 1):
                    for r in range(q):
                        for s in range(q):
                            if kind in ("lower", "upper") and r + s > q - 3:
                                continue
                            if kind in ("wall-A", "wall-B") and r + s != q - 2:
                                continue
                            if kind == "lower" and b < 1:
                                continue
                            rs = good_resolution(kind, a, b, r, s, q)
                            ok = len(rs.terms) == a + 1 and euler_check(rs)
                            res.record(ok, (kind, a, b, r, s, q))
    return res


def suite_glob(p=None, bound=None) -> SuiteResult:
    res = SuiteResult("glob")
    for q in _primes(p, (2, 3, 5, 7)):
        for n, rmax in ((2, 200), (3, 60)):
            for r in range((rmax if bound is None else bound) + 1):
                res.record(glob_schur_formula(n, r, q) == gfd_schur(n, r, q).glob, (n, r, q))
    return res


def suite_quantum(p=None, bound=None) -> SuiteResult:
    res = SuiteResult("quantum")
    for l in (2, 3, 4, 5):
        for q in _primes(p, (2, 3, 5)):
            for r in range((120 if bound is None else bound) + 1):
                res.record(glob_schur_q2(r, l, q) == gfd_schur_q2(r, l, q).glob, (r, l, q))
    return res


def suite_monotone(p=None, bound=None) -> SuiteResult:
    """g never increases going down inside a primitive block."""
    res = SuiteResult("monotone")
    bound = 30 if bound is None else bound
    for q in _primes(p, (2, 3, 5)):
        for n in (2, 3):
            for cls in linkage_classes(q, n, bound):
                if not cls.is_primitive:
                    continue
                g = {w: g_lambda(w, q) for w in cls.members}
                for lam in cls.members:
                    for mu in cls.members:
                        if dominance_lt(mu, lam):
                            res.record(g[mu] <= g[lam], (q, str(mu), str(lam)))
    return res


def run_suite(name: str, p=None, bound=None) -> SuiteResult:
    fn = {
        "xanth": suite_xanth,
        "pfilt": suite_pfilt,
        "resolutions": suite_resolutions,
        "glob": suite_glob,
        "quantum": suite_quantum,
        "monotone": suite_monotone,
    }[name]
    return fn(p=p, bound=bound)
