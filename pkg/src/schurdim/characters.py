"""Exact formal characters for SL_2 and SL_3.

A character is stored as a dense int64 grid together with the lattice
coordinate of its ``[0, ..., 0]`` corner.  The grid is always trimmed to the
bounding box of the nonzero entries, so two equal characters have equal
``(offset, data)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .weights import (
    RestrictedClass,
    SlWeight,
    as_weight,
    dominance_leq,
    p_decompose,
    restricted_class,
    upper_reflection,
)

_MASS_LIMIT = 2**62


class NegativeMultiplicity(ValueError):
    """Greedy decomposition met a negative coefficient."""


class NonDominantResidue(ValueError):
    """The top weight of a residue was not dominant (input not W-symmetric)."""


def order_key(w) -> tuple:
    """Sort key for the fixed total order refining dominance.

    Ascending sort with this key lists weights from highest to lowest:
    descending coordinate sum, ties broken by descending lexicographic order.
    """
    w = tuple(w)
    return (-sum(w), tuple(-c for c in w))


class FormalCharacter:
    __slots__ = ("n", "offset", "data")

    def __init__(self, n: int, offset, data: np.ndarray):
        if n not in (2, 3):
            raise ValueError("n must be 2 or 3")
        data = np.asarray(data, dtype=np.int64)
        if data.ndim != n - 1:
            raise ValueError("grid dimension does not match n")
        self.n = n
        self.offset, self.data = _trim(tuple(int(o) for o in offset), data)

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "FormalCharacter":
        return cls(n, (0,) * (n - 1), np.zeros((0,) * (n - 1), dtype=np.int64))

    @classmethod
    def from_dict(cls, n: int, mult: Mapping) -> "FormalCharacter":
        pts = [(tuple(as_weight(k)), int(v)) for k, v in mult.items() if v]
        if not pts:
            return cls.zero(n)
        k = n - 1
        lo = [min(p[0][i] for p in pts) for i in range(k)]
        hi = [max(p[0][i] for p in pts) for i in range(k)]
        data = np.zeros([h - l + 1 for l, h in zip(lo, hi)], dtype=np.int64)
        for w, v in pts:
            data[tuple(c - l for c, l in zip(w, lo))] += v
        return cls(n, lo, data)

    # basic access ---------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.n - 1

    def is_zero(self) -> bool:
        return self.data.size == 0

    def __getitem__(self, w) -> int:
        w = tuple(as_weight(w))
        idx = tuple(c - o for c, o in zip(w, self.offset))
        if any(i < 0 or i >= s for i, s in zip(idx, self.data.shape)):
            return 0
        return int(self.data[idx])

    def items(self) -> list[tuple[SlWeight, int]]:
        """Nonzero (weight, multiplicity) pairs in the canonical total order."""
        idx = np.nonzero(self.data)
        vals = self.data[idx]
        pts = [
            (SlWeight(tuple(int(i) + o for i, o in zip(coords, self.offset))), int(v))
            for *coords, v in zip(*idx, vals)
        ]
        pts.sort(key=lambda t: order_key(t[0]))
        return pts

    def as_dict(self) -> dict[SlWeight, int]:
        return dict(self.items())

    def support(self) -> list[SlWeight]:
        return [w for w, _ in self.items()]

    def mass(self) -> int:
        return int(self.data.sum())

    def nnz(self) -> int:
        return int(np.count_nonzero(self.data))

    # arithmetic -----------------------------------------------------------

    def _check_n(self, other: "FormalCharacter"):
        if not isinstance(other, FormalCharacter):
            raise TypeError(f"expected FormalCharacter, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError("characters for different n")

    def _combine(self, other: "FormalCharacter", sign: int) -> "FormalCharacter":
        self._check_n(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other if sign > 0 else -other
        lo = [min(a, b) for a, b in zip(self.offset, other.offset)]
        hi = [
            max(a + s, b + t)
            for a, s, b, t in zip(self.offset, self.data.shape, other.offset, other.data.shape)
        ]
        out = np.zeros([h - l for l, h in zip(lo, hi)], dtype=np.int64)
        out[_window(self.offset, self.data.shape, lo)] += self.data
        out[_window(other.offset, other.data.shape, lo)] += sign * other.data
        return FormalCharacter(self.n, lo, out)

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self._combine(other, 1)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self._combine(other, -1)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter(self.n, self.offset, -self.data)

    def scale(self, k: int) -> "FormalCharacter":
        if k and self.data.size and int(np.abs(self.data).max()) * abs(k) > _MASS_LIMIT:
            raise OverflowError("multiplicity overflow in scaling")
        return FormalCharacter(self.n, self.offset, self.data * int(k))

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return tensor(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return (
            self.n == other.n
            and self.offset == other.offset
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    __hash__ = None

    def pointwise_leq(self, other: "FormalCharacter") -> bool:
        diff = other - self
        return diff.is_zero() or int(diff.data.min()) >= 0

    # Weyl group -----------------------------------------------------------

    def apply(self, fn) -> "FormalCharacter":
        """Push the character forward along a map on weights."""
        out: dict = {}
        for w, v in self.items():
            key = fn(w)
            out[key] = out.get(key, 0) + v
        return FormalCharacter.from_dict(self.n, out)

    def is_weyl_invariant(self) -> bool:
        return all(self.apply(g) == self for g in weyl_generators(self.n))

    # top weight -----------------------------------------------------------

    def top_weight(self) -> SlWeight:
        """Largest support point under the total order of ``order_key``."""
        if self.is_zero():
            raise ValueError("zero character has no top weight")
        idx = np.nonzero(self.data)
        coords = [np.asarray(i, dtype=np.int64) + o for i, o in zip(idx, self.offset)]
        total = sum(coords)
        # lexsort: last key is primary
        keys = [-c for c in reversed(coords)] + [-total]
        j = int(np.lexsort(keys)[0])
        return SlWeight(tuple(int(c[j]) for c in coords))

    def to_json(self) -> list[list[int]]:
        return [list(w.coords) + [v] for w, v in self.items()]

    def __repr__(self) -> str:
        body = ", ".join(f"{w}:{v}" for w, v in self.items()[:8])
        more = "" if self.nnz() <= 8 else ", ..."
        return f"FormalCharacter(n={self.n}, {{{body}{more}}})"


def _trim(offset: tuple, data: np.ndarray):
    if data.size == 0 or not data.any():
        return (0,) * data.ndim, np.zeros((0,) * data.ndim, dtype=np.int64)
    sl = []
    new_off = []
    for axis in range(data.ndim):
        other = tuple(a for a in range(data.ndim) if a != axis)
        nz = np.flatnonzero(data.any(axis=other) if other else data)
        sl.append(slice(int(nz[0]), int(nz[-1]) + 1))
        new_off.append(offset[axis] + int(nz[0]))
    return tuple(new_off), np.ascontiguousarray(data[tuple(sl)])


def _window(offset, shape, lo):
    return tuple(slice(o - l, o - l + s) for o, s, l in zip(offset, shape, lo))


def weyl_generators(n: int):
    if n == 2:
        return (lambda w: SlWeight((-w[0],)),)
    return (
        lambda w: SlWeight((-w[0], w[0] + w[1])),
        lambda w: SlWeight((w[0] + w[1], -w[1])),
    )


# ---------------------------------------------------------------------------
# constructors


def _require_dominant(lam) -> SlWeight:
    lam = as_weight(lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    return lam


def weyl_dimension(lam, n: int | None = None) -> int:
    lam = _require_dominant(lam)
    if len(lam) == 1:
        return lam[0] + 1
    a, b = lam
    return (a + 1) * (b + 1) * (a + b + 2) // 2


@lru_cache(maxsize=1024)
def _weyl_character_cached(coords: tuple[int, ...]) -> FormalCharacter:
    if len(coords) == 1:
        r = coords[0]
        data = np.zeros(2 * r + 1, dtype=np.int64)
        data[::2] = 1
        return FormalCharacter(2, (-r,), data)
    a, b = coords
    # Gelfand-Tsetlin patterns for shape (a+b, b, 0):
    #   a+b >= x >= b >= y >= 0,  x >= z >= y
    # GL_3 weight (z, x+y-z, a+2b-x-y) -> SL_3 weight (2z-x-y, 2(x+y)-z-(a+2b))
    xs, ys = np.meshgrid(np.arange(b, a + b + 1), np.arange(0, b + 1), indexing="ij")
    xs = xs.ravel()
    ys = ys.ravel()
    lengths = xs - ys + 1
    total = int(lengths.sum())
    starts = np.repeat(np.cumsum(lengths) - lengths, lengths)
    X = np.repeat(xs, lengths)
    Y = np.repeat(ys, lengths)
    Z = Y + (np.arange(total) - starts)
    u = 2 * Z - X - Y
    v = 2 * (X + Y) - Z - (a + 2 * b)
    m = a + b
    side = 2 * m + 1
    flat = np.bincount((u + m) * side + (v + m), minlength=side * side)
    return FormalCharacter(3, (-m, -m), flat.reshape(side, side))


def weyl_character(lam, n: int | None = None) -> FormalCharacter:
    """Character of the costandard module (Weyl's character formula)."""
    lam = _require_dominant(lam)
    if n is not None and lam.n != n:
        raise ValueError(f"weight {lam} is not an SL_{n} weight")
    return _weyl_character_cached(lam.coords)


def frobenius_twist(c: FormalCharacter, m: int) -> FormalCharacter:
    """Scale every weight in the support by m."""
    if m < 2:
        raise ValueError(f"twist factor must be >= 2, got {m}")
    if c.is_zero():
        return c
    shape = tuple((s - 1) * m + 1 for s in c.data.shape)
    out = np.zeros(shape, dtype=np.int64)
    out[tuple(slice(None, None, m) for _ in shape)] = c.data
    return FormalCharacter(c.n, tuple(o * m for o in c.offset), out)


def tensor(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    """Character of a tensor product: convolution of multiplicity maps."""
    a._check_n(b)
    if a.is_zero() or b.is_zero():
        return FormalCharacter.zero(a.n)
    bound = int(np.abs(a.data).sum()) * int(np.abs(b.data).sum())
    if bound > _MASS_LIMIT:
        raise OverflowError("multiplicity overflow in tensor product")
    # loop over the sparser factor, slice-add the denser one
    if a.nnz() > b.nnz():
        a, b = b, a
    shape = tuple(s + t - 1 for s, t in zip(a.data.shape, b.data.shape))
    out = np.zeros(shape, dtype=np.int64)
    idx = np.nonzero(a.data)
    for *pos, v in zip(*idx, a.data[idx]):
        out[tuple(slice(int(i), int(i) + t) for i, t in zip(pos, b.data.shape))] += int(v) * b.data
    offset = tuple(x + y for x, y in zip(a.offset, b.offset))
    return FormalCharacter(a.n, offset, out)


def _restricted_simple(lam0: SlWeight, p: int) -> FormalCharacter:
    if len(lam0) == 2 and restricted_class(lam0, p) is RestrictedClass.UPPER_INTERIOR:
        # upper alcove: nabla has composition factors L(nu), L(reflected nu)
        return weyl_character(lam0) - weyl_character(upper_reflection(lam0, p))
    return weyl_character(lam0)


@lru_cache(maxsize=4096)
def _simple_cached(coords: tuple[int, ...], p: int) -> FormalCharacter:
    dec = p_decompose(SlWeight(coords), p)
    base = _restricted_simple(dec.lambda0, p)
    if not any(dec.lambda1):
        return base
    return tensor(base, frobenius_twist(_simple_cached(dec.lambda1.coords, p), p))


def simple_character(lam, p: int, n: int | None = None) -> FormalCharacter:
    """Character of the simple module L(lam) in characteristic p."""
    lam = _require_dominant(lam)
    return _simple_cached(lam.coords, p)


def nabla_p_character(lam, p: int, n: int | None = None) -> FormalCharacter:
    """Character of nabla(lam1)^F (x) L(lam0) for lam = p*lam1 + lam0."""
    lam = _require_dominant(lam)
    dec = p_decompose(lam, p)
    return tensor(frobenius_twist(weyl_character(dec.lambda1), p), simple_character(dec.lambda0, p))


# ---------------------------------------------------------------------------
# decomposition oracles


def _greedy(c: FormalCharacter, basis, allow_negative: bool) -> dict[SlWeight, int]:
    out: dict[SlWeight, int] = {}
    while not c.is_zero():
        top = c.top_weight()
        if not top.is_dominant:
            raise NonDominantResidue(f"top weight {top} of residue is not dominant")
        m = c[top]
        if m < 0 and not allow_negative:
            raise NegativeMultiplicity(f"coefficient {m} at {top}")
        out[top] = m
        c = c - basis(top).scale(m)
    return dict(sorted(out.items(), key=lambda t: order_key(t[0])))


def decompose_good(c: FormalCharacter, n: int | None = None, *,
                   allow_negative: bool = False) -> dict[SlWeight, int]:
    """Multiplicities of costandard characters in c."""
    return _greedy(c, weyl_character, allow_negative)


def decompose_simples(c: FormalCharacter, p: int, n: int | None = None, *,
                      allow_negative: bool = False) -> dict[SlWeight, int]:
    """Composition multiplicities of c against the simple characters."""
    return _greedy(c, lambda w: simple_character(w, p), allow_negative)


def recompose(mults: Mapping[SlWeight, int], basis, n: int) -> FormalCharacter:
    total = FormalCharacter.zero(n)
    for w, m in mults.items():
        total = total + basis(w).scale(m)
    return total


def hw_of(factors: Iterable) -> set[SlWeight]:
    """Maximal elements of a collection of weights under the dominance order."""
    ws = {as_weight(w) for w in factors}
    return {w for w in ws if not any(v != w and dominance_leq(w, v) for v in ws)}
