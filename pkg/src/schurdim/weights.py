"""Weight-lattice bookkeeping for SL_2 and SL_3.

Weights are written in the basis of fundamental weights, so an SL_3 weight
``(a, b)`` is dominant when ``a, b >= 0`` and the simple roots are
``(2, -1)`` and ``(-1, 2)``.  For SL_2 there is a single coordinate and the
simple root is ``(2,)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

INT64_MAX = 2**63 - 1


def _checked(x: int) -> int:
    if not isinstance(x, (int,)) or isinstance(x, bool):
        # numpy integers are accepted but normalised
        try:
            x = int(x)
        except (TypeError, ValueError):
            raise TypeError(f"weight coordinate must be an integer, got {x!r}")
    if not -INT64_MAX <= x <= INT64_MAX:
        raise OverflowError(f"coordinate {x} exceeds 64-bit range")
    return x


@dataclass(frozen=True, order=True)
class SlWeight:
    """A point of the SL_n weight lattice, n in {2, 3}."""

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(_checked(c) for c in self.coords)
        if len(coords) not in (1, 2):
            raise ValueError(f"SlWeight needs 1 or 2 coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: int) -> "SlWeight":
        return cls(tuple(coords))

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_restricted(self, m: int) -> bool:
        return all(0 <= c <= m - 1 for c in self.coords)

    def plus(self, other: "SlWeight | Sequence[int]") -> "SlWeight":
        return SlWeight(tuple(_checked(x + y) for x, y in zip(self.coords, other, strict=True)))

    def minus(self, other: "SlWeight | Sequence[int]") -> "SlWeight":
        return SlWeight(tuple(_checked(x - y) for x, y in zip(self.coords, other, strict=True)))

    def scaled(self, m: int) -> "SlWeight":
        return SlWeight(tuple(_checked(m * x) for x in self.coords))


def weight(*coords: int) -> SlWeight:
    """Shorthand for ``SlWeight.of``."""
    return SlWeight(tuple(coords))


def zero_weight(n: int) -> SlWeight:
    return SlWeight((0,) * (n - 1))


def rho(n: int) -> SlWeight:
    return SlWeight((1,) * (n - 1))


def as_weight(w) -> SlWeight:
    if isinstance(w, SlWeight):
        return w
    if isinstance(w, int):
        return SlWeight((w,))
    return SlWeight(tuple(w))


@dataclass(frozen=True)
class GlPartition:
    """A partition with exactly n (possibly zero) parts, weakly decreasing."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(_checked(x) for x in self.parts)
        if len(parts) not in (2, 3):
            raise ValueError("only n = 2 or 3 parts are supported")
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "GlPartition":
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def r(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.parts) + ")"


def enumerate_partitions(n: int, r: int) -> list[GlPartition]:
    """All partitions of r with at most n parts, padded to length n.

    Output is in decreasing lexicographic order.
    """
    if n not in (2, 3):
        raise ValueError("n must be 2 or 3")
    if r < 0:
        raise ValueError("r must be nonnegative")
    out: list[GlPartition] = []

    def rec(prefix: list[int], remaining: int, slots: int, cap: int):
        if slots == 1:
            if remaining <= cap:
                out.append(GlPartition(tuple(prefix + [remaining])))
            return
        # largest first; the remaining slots must be able to absorb the rest
        hi = min(cap, remaining)
        lo = -(-remaining // slots)
        for x in range(hi, lo - 1, -1):
            rec(prefix + [x], remaining - x, slots - 1, x)

    rec([], r, n, r)
    return out


def to_sl_weight(p: GlPartition) -> SlWeight:
    parts = p.parts
    return SlWeight(tuple(parts[i] - parts[i + 1] for i in range(len(parts) - 1)))


def partition_dominance_leq(mu: GlPartition, lam: GlPartition) -> bool:
    """Dominance order on partitions of the same size (prefix sums)."""
    if mu.n != lam.n or mu.r != lam.r:
        raise ValueError("partitions must have the same n and r")
    s_mu = s_lam = 0
    for x, y in zip(mu.parts, lam.parts):
        s_mu += x
        s_lam += y
        if s_mu > s_lam:
            return False
    return True


def root_coefficients(d: SlWeight | Sequence[int]) -> tuple:
    """Coefficients of d in the simple-root basis, as exact values.

    Returns a tuple of ints when d lies in the root lattice, otherwise
    ``None``.
    """
    d = tuple(d)
    if len(d) == 1:
        if d[0] % 2:
            return None
        return (d[0] // 2,)
    d1, d2 = d
    x3, y3 = 2 * d1 + d2, d1 + 2 * d2
    if x3 % 3 or y3 % 3:
        return None
    return (x3 // 3, y3 // 3)


def dominance_leq(mu: SlWeight, lam: SlWeight) -> bool:
    """True iff lam - mu is a nonnegative integer combination of simple roots."""
    if len(mu) != len(lam):
        raise ValueError("weights of different rank")
    coeffs = root_coefficients(lam.minus(mu))
    return coeffs is not None and all(c >= 0 for c in coeffs)


def dominance_lt(mu: SlWeight, lam: SlWeight) -> bool:
    return mu != lam and dominance_leq(mu, lam)


@dataclass(frozen=True)
class PDecomposition:
    base: int
    lambda0: SlWeight
    lambda1: SlWeight

    def reconstruct(self) -> SlWeight:
        return self.lambda1.scaled(self.base).plus(self.lambda0)


def p_decompose(lam: SlWeight, m: int) -> PDecomposition:
    """Split a dominant weight as ``m * lambda1 + lambda0`` with lambda0 restricted."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    lam = as_weight(lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    q = tuple(c // m for c in lam)
    rem = tuple(c % m for c in lam)
    return PDecomposition(m, SlWeight(rem), SlWeight(q))


class RestrictedClass(enum.Enum):
    LOWER_INTERIOR = "LowerInterior"
    AFFINE_WALL = "AffineWall"
    WALL_A = "WallA"
    WALL_B = "WallB"
    UPPER_INTERIOR = "UpperInterior"
    STEINBERG = "Steinberg"
    # SL_2 tags
    INTERIOR = "Interior"
    WALL = "Wall"

    @property
    def is_wall(self) -> bool:
        return self in (RestrictedClass.AFFINE_WALL, RestrictedClass.WALL_A,
                        RestrictedClass.WALL_B, RestrictedClass.WALL)


def restricted_class(nu: SlWeight, p: int) -> RestrictedClass:
    nu = as_weight(nu)
    if not nu.is_restricted(p):
        raise ValueError(f"{nu} is not {p}-restricted")
    if len(nu) == 1:
        return RestrictedClass.WALL if nu[0] == p - 1 else RestrictedClass.INTERIOR
    r, s = nu
    if r == p - 1 and s == p - 1:
        return RestrictedClass.STEINBERG
    if r == p - 1:
        return RestrictedClass.WALL_A
    if s == p - 1:
        return RestrictedClass.WALL_B
    if r + s <= p - 3:
        return RestrictedClass.LOWER_INTERIOR
    if r + s == p - 2:
        return RestrictedClass.AFFINE_WALL
    return RestrictedClass.UPPER_INTERIOR


def upper_reflection(nu: SlWeight, p: int) -> SlWeight:
    """The involution (r, s) <-> (p-s-2, p-r-2) between lower and upper alcove."""
    r, s = nu
    return SlWeight((p - s - 2, p - r - 2))


def p_valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def steinberg_depth(lam: SlWeight, p: int) -> tuple[int, SlWeight]:
    """Strip Steinberg layers: lam = p^d * lam1 + (p^d - 1) * rho with lam1 primitive."""
    lam = as_weight(lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    d = min(p_valuation(c + 1, p) for c in lam)
    pd = p**d
    lam1 = SlWeight(tuple((c + 1) // pd - 1 for c in lam))
    return d, lam1


def is_primitive(lam: SlWeight, p: int) -> bool:
    lam = as_weight(lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    return any(c % p != p - 1 for c in lam)


def sl2_canonical_decomposition(m: int, p: int) -> tuple[int, int, int]:
    """Write m = p^(d+1) c1 + p^d c0 + p^d - 1 with 0 <= c0 <= p-2.

    Returns ``(d, c1, c0)``.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    d = p_valuation(m + 1, p)
    u = (m + 1) // p**d
    c0 = u % p - 1
    c1 = (u - c0 - 1) // p
    return d, c1, c0
