"""Good filtration dimensions and global dimensions of Schur algebras.

Every closed form here has a brute-force counterpart: the Schur-algebra
dimension is the maximum over its simple modules, and the simple module
dimension is computed from the weight by ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .weights import (
    GlPartition,
    RestrictedClass,
    SlWeight,
    as_weight,
    enumerate_partitions,
    is_primitive,
    p_decompose,
    p_valuation,
    restricted_class,
    sl2_canonical_decomposition,
    steinberg_depth,
    to_sl_weight,
)

METHODS = ("formula", "bruteforce")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _require_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


@dataclass(frozen=True)
class HomDimReport:
    n: int
    r: int
    p: int
    gfd: int
    wfd: int
    glob: int
    witness: GlPartition
    method: str
    l: int | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.wfd != self.gfd or self.glob != 2 * self.gfd:
            raise AssertionError("report violates wfd = gfd, glob = 2 gfd")

    def to_json(self) -> dict:
        out = {"n": self.n, "r": self.r, "p": self.p}
        if self.l is not None:
            out["l"] = self.l
        out.update(
            gfd=self.gfd,
            wfd=self.wfd,
            glob=self.glob,
            witness=list(self.witness.parts),
            method=self.method,
        )
        return out


def g_lambda(lam, p: int, n: int | None = None) -> int:
    """The integer g of a primitive weight."""
    lam = as_weight(lam)
    if not is_primitive(lam, p):
        raise ValueError(f"{lam} is not primitive for p={p}")
    dec = p_decompose(lam, p)
    if len(lam) == 1:
        return dec.lambda1[0]
    a, b = dec.lambda1
    cls = restricted_class(dec.lambda0, p)
    if cls is RestrictedClass.LOWER_INTERIOR:
        return 2 * (a + b)
    if cls is RestrictedClass.UPPER_INTERIOR:
        return 2 * (a + b) + 1
    return a + b


def gfd_simple(lam, p: int, n: int | None = None) -> int:
    """Good filtration dimension of L(lam) (and of nabla_p(lam))."""
    return _gfd_simple(as_weight(lam), p)


@lru_cache(maxsize=1 << 16)
def _gfd_simple(lam: SlWeight, p: int) -> int:
    _, lam1 = steinberg_depth(lam, p)
    return g_lambda(lam1, p)


@lru_cache(maxsize=1 << 14)
def _gfd_sl2_checked(m: int, p: int) -> int:
    value = _gfd_simple(SlWeight((m,)), p)
    _, c1, _ = sl2_canonical_decomposition(m, p)
    if c1 != value:
        raise AssertionError(f"canonical decomposition disagrees for ({m}), p={p}")
    return value


def gfd_simple_schur(part: GlPartition, p: int) -> int:
    if part.n == 2:
        return _gfd_sl2_checked(part.parts[0] - part.parts[1], p)
    return _gfd_simple(to_sl_weight(part), p)


def _max_over(parts, value) -> tuple[int, GlPartition]:
    best, witness = -1, None
    for part in parts:
        v = value(part)
        if v > best:
            best, witness = v, part
    return best, witness


def gfd_schur(n: int, r: int, p: int) -> HomDimReport:
    """Brute force: maximum of gfd over the simple modules of S(n, r)."""
    _require_prime(p)
    best, witness = _max_over(enumerate_partitions(n, r), lambda q: gfd_simple_schur(q, p))
    return HomDimReport(n, r, p, best, best, 2 * best, witness, "bruteforce")


def glob_schur_formula(n: int, r: int, p: int) -> int:
    _require_prime(p)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n == 2:
        if p == 2:
            return r if r % 2 == 0 else 2 * (r // 4)
        return 2 * (r // p)
    if n == 3:
        if p == 2:
            return 2 * (r // 2)
        if p == 3:
            return 4 * (r // 3) if r % 3 == 0 else 2 * (r // 3)
        return 4 * (r // p)
    raise ValueError("n must be 2 or 3")


def schur_report(n: int, r: int, p: int, method: str = "bruteforce") -> HomDimReport:
    """Report for S(n, r); the formula variant searches only for a witness."""
    if method == "bruteforce":
        return gfd_schur(n, r, p)
    if method != "formula":
        raise ValueError(f"unknown method {method!r}")
    g = glob_schur_formula(n, r, p) // 2
    witness = next((q for q in enumerate_partitions(n, r) if gfd_simple_schur(q, p) == g), None)
    if witness is None:
        raise AssertionError(f"no simple module of S({n},{r}) attains {g}")
    return HomDimReport(n, r, p, g, g, 2 * g, witness, "formula")


# ---------------------------------------------------------------------------
# quantum GL_2 at an l-th root of unity over a field of characteristic p


def gfd_simple_q2(r: int, l: int, p: int) -> int:
    if l < 2:
        raise ValueError("l must be >= 2")
    _require_prime(p)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r % l <= l - 2:
        return r // l
    t = (r + 1) // l
    e = p_valuation(t, p)
    r1 = t // p**e - 1
    return r1 // p


def glob_schur_q2(r: int, l: int, p: int) -> int:
    if l < 2:
        raise ValueError("l must be >= 2")
    _require_prime(p)
    if l == 2:
        return r if r % 2 == 0 else 2 * (r // (2 * p))
    return 2 * (r // l)


def gfd_schur_q2(r: int, l: int, p: int) -> HomDimReport:
    """Brute force over the simple modules of S_q(2, r)."""
    _require_prime(p)
    best, witness = _max_over(
        enumerate_partitions(2, r), lambda q: gfd_simple_q2(q.parts[0] - q.parts[1], l, p)
    )
    return HomDimReport(2, r, p, best, best, 2 * best, witness, "bruteforce", l=l)
