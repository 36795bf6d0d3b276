"""Linkage classes under the dot action, and highest weights of quotients.

Two dominant weights lie in the same block when one is carried to the other
by the affine Weyl group acting through ``w . lam = w(lam + rho) - rho``.
``dot_orbit`` computes this by closing under affine reflections inside a
finite box; ``linked`` is the direct lattice test used to cross-check it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .characters import (
    decompose_simples,
    hw_of,
    nabla_p_character,
    order_key,
    simple_character,
    weyl_character,
)
from .weights import (
    RestrictedClass,
    SlWeight,
    as_weight,
    is_primitive,
    p_decompose,
    restricted_class,
    root_coefficients,
    upper_reflection,
)

# coroot pairings <x, alpha^vee> in fundamental-weight coordinates, with alpha
_SL3_ROOTS = (
    (lambda x: x[0], (2, -1)),
    (lambda x: x[1], (-1, 2)),
    (lambda x: x[0] + x[1], (1, 1)),
)


def default_box(lam: SlWeight, p: int) -> int:
    return 3 * max(lam) + 3 * p


def _reflections(x: tuple, p: int, lo: int, hi: int):
    """All images of x under affine reflections that stay in [lo, hi]^k."""
    if len(x) == 1:
        (c,) = x
        # c -> 2kp - c
        for k in range(-(-(lo + c) // (2 * p)), (hi + c) // (2 * p) + 1):
            yield (2 * k * p - c,)
        return
    for pair, alpha in _SL3_ROOTS:
        h = pair(x)
        # the image has pairing 2kp - h, which must lie in the pairing range of the box
        span = 2 if alpha == (1, 1) else 1
        for k in range(-(-(h + span * lo) // (2 * p)), (h + span * hi) // (2 * p) + 1):
            m = h - k * p
            y = (x[0] - m * alpha[0], x[1] - m * alpha[1])
            if lo <= y[0] <= hi and lo <= y[1] <= hi:
                yield y


def dot_orbit(lam, p: int, n: int | None = None, box: int | None = None) -> frozenset[SlWeight]:
    """Dominant weights with coordinates <= box linked to lam."""
    lam = as_weight(lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    if box is None:
        box = default_box(lam, p)
    if box < max(lam):
        raise ValueError(f"box {box} does not contain {lam}")
    margin = 2 * p + 2
    lo, hi = -margin, box + 1 + margin
    start = tuple(c + 1 for c in lam)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in _reflections(x, p, lo, hi):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(
        SlWeight(tuple(c - 1 for c in x)) for x in seen if all(1 <= c <= box + 1 for c in x)
    )


def _weyl_images(x: tuple):
    if len(x) == 1:
        return [x, (-x[0],)]
    a, b = x
    return [(a, b), (-a, a + b), (a + b, -b), (-a - b, a), (b, -a - b), (-b, -a)]


def linked(lam, mu, p: int) -> bool:
    """mu + rho lies in W(lam + rho) + p * (root lattice)."""
    lam, mu = as_weight(lam), as_weight(mu)
    y = tuple(c + 1 for c in mu)
    for wx in _weyl_images(tuple(c + 1 for c in lam)):
        d = tuple(u - v for u, v in zip(y, wx))
        if all(c % p == 0 for c in d) and root_coefficients(tuple(c // p for c in d)) is not None:
            return True
    return False


def same_block(lam, mu, p: int, n: int | None = None) -> bool:
    lam, mu = as_weight(lam), as_weight(mu)
    for w in (lam, mu):
        if not w.is_dominant:
            raise ValueError(f"{w} is not dominant")
    return mu in dot_orbit(lam, p, box=max(max(lam), max(mu)))


@dataclass(frozen=True)
class LinkageClass:
    p: int
    n: int
    representative: SlWeight
    members: frozenset
    box: int

    @property
    def is_primitive(self) -> bool:
        return all(is_primitive(m, self.p) for m in self.members)

    def sorted_members(self) -> list[SlWeight]:
        return sorted(self.members, key=order_key)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "box": self.box,
            "representative": list(self.representative),
            "primitive": self.is_primitive,
            "members": [list(m) for m in self.sorted_members()],
        }


def linkage_class(lam, p: int, box: int | None = None) -> LinkageClass:
    lam = as_weight(lam)
    if box is None:
        box = default_box(lam, p)
    members = dot_orbit(lam, p, box=box)
    return LinkageClass(p, lam.n, lam, members, box)


def linkage_classes(p: int, n: int, box: int) -> list[LinkageClass]:
    """Partition the dominant weights with coordinates <= box into classes."""
    if n == 2:
        pending = [SlWeight((i,)) for i in range(box + 1)]
    else:
        pending = [SlWeight((i, j)) for i in range(box + 1) for j in range(box + 1)]
    pending.sort(key=order_key, reverse=True)
    done: set = set()
    out = []
    for w in pending:
        if w in done:
            continue
        cls = LinkageClass(p, n, w, dot_orbit(w, p, box=box), box)
        done |= cls.members
        out.append(cls)
    return out


# ---------------------------------------------------------------------------
# highest weights of nabla_p(lam)/L(lam) and nabla(lam)/L(lam)


def _require_primitive(lam: SlWeight, p: int):
    if not is_primitive(lam, p):
        raise ValueError(f"{lam} is not primitive for p={p}")


def hw_simple_quotient(lam, p: int, n: int | None = None) -> set[SlWeight]:
    """hw of nabla_p(lam)/L(lam), computed from composition factors."""
    lam = as_weight(lam)
    _require_primitive(lam, p)
    rest = nabla_p_character(lam, p) - simple_character(lam, p)
    return hw_of(decompose_simples(rest, p))


def hw_nabla_quotient(lam, p: int, n: int | None = None) -> set[SlWeight]:
    """hw of nabla(lam)/L(lam), computed from composition factors."""
    lam = as_weight(lam)
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    rest = weyl_character(lam) - simple_character(lam, p)
    return hw_of(decompose_simples(rest, p))


def predicted_hw_simple_quotient_sl2(r: int, p: int) -> set[SlWeight] | None:
    """Closed-form hw of nabla_p(r)/L(r); None when the formula does not apply."""
    r1, r0 = divmod(r, p)
    r1p, r0p = divmod(r1, p)
    top = p * r1p - r0p - 2
    if top < 0:
        return None
    return {SlWeight((p * top + r0,))}


def _dominant(ws) -> set[SlWeight]:
    return {w for w in ws if w.is_dominant}


def predicted_hw_nabla_quotient_sl3(lam, p: int) -> set[SlWeight]:
    """Closed-form hw of nabla(a,b)/L(a,b), non-dominant entries dropped."""
    lam = as_weight(lam)
    dec = p_decompose(lam, p)
    a, b = dec.lambda1
    nu = dec.lambda0
    x, y = nu

    def at(twist, rest):
        return SlWeight((p * twist[0] + rest[0], p * twist[1] + rest[1]))

    if not any(dec.lambda1):
        # restricted: nabla = L except in the upper alcove
        if restricted_class(nu, p) is RestrictedClass.UPPER_INTERIOR:
            return {upper_reflection(nu, p)}
        return set()
    cls = restricted_class(nu, p)
    if cls is RestrictedClass.STEINBERG:
        inner = predicted_hw_nabla_quotient_sl3(dec.lambda1, p)
        return {SlWeight((p * w[0] + x, p * w[1] + y)) for w in inner}
    if cls is RestrictedClass.WALL_A:
        r = y
        ws = [at((a + 1, b - 1), (r, p - r - 2))]
    elif cls is RestrictedClass.WALL_B:
        s = x
        ws = [at((a - 1, b + 1), (p - s - 2, s))]
    elif cls is RestrictedClass.AFFINE_WALL:
        r, s = x, y
        ws = [at((a, b - 1), (p - 1, r)), at((a - 1, b), (s, p - 1))]
    elif cls is RestrictedClass.LOWER_INTERIOR:
        r, s = x, y
        ws = [at((a, b - 1), (r + s + 1, p - s - 2)), at((a - 1, b), (p - r - 2, r + s + 1))]
    else:
        r, s = upper_reflection(nu, p)
        ws = [
            at((a, b), (r, s)),
            at((a - 1, b + 1), (s, p - r - s - 3)),
            at((a + 1, b - 1), (p - r - s - 3, r)),
        ]
    return _dominant(ws)


def predicted_hw_simple_quotient_sl3(lam, p: int) -> set[SlWeight]:
    """hw of nabla_p(lam)/L(lam) as p * hw(nabla(lam1)/L(lam1)) + lam0."""
    dec = p_decompose(as_weight(lam), p)
    inner = predicted_hw_nabla_quotient_sl3(dec.lambda1, p)
    x, y = dec.lambda0
    return {SlWeight((p * w[0] + x, p * w[1] + y)) for w in inner}
