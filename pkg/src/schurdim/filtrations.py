"""p-filtrations of costandard modules, Ext^1 tables and good resolutions.

A section ``NablaPSection(p, twist, restricted)`` stands for the module
``nabla(twist)^F (x) L(restricted)``.  A twist with a coordinate equal to -1
denotes the zero module; such sections are kept so that diagrams keep their
shape, but they contribute nothing to characters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .characters import FormalCharacter, nabla_p_character, weyl_character
from .weights import (
    RestrictedClass,
    SlWeight,
    as_weight,
    p_decompose,
    restricted_class,
    upper_reflection,
)


@dataclass(frozen=True)
class NablaPSection:
    p: int
    twist: SlWeight
    restricted: SlWeight
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "twist", as_weight(self.twist))
        object.__setattr__(self, "restricted", as_weight(self.restricted))
        if len(self.twist) != len(self.restricted):
            raise ValueError("twist and restricted part have different rank")
        if any(c < -1 for c in self.twist):
            raise ValueError(f"twist {self.twist} has a coordinate below -1")
        if not self.restricted.is_restricted(self.p):
            raise ValueError(f"{self.restricted} is not {self.p}-restricted")
        if not self.is_zero:
            dec = p_decompose(self.weight, self.p)
            if (dec.lambda1, dec.lambda0) != (self.twist, self.restricted):
                raise AssertionError(f"section {self} does not match its p-adic split")

    @property
    def n(self) -> int:
        return self.twist.n

    @property
    def is_zero(self) -> bool:
        return any(c == -1 for c in self.twist)

    @property
    def weight(self) -> SlWeight:
        """The weight p*twist + restricted (meaningful for non-zero sections)."""
        return self.twist.scaled(self.p).plus(self.restricted)

    def character(self) -> FormalCharacter:
        if self.is_zero:
            return FormalCharacter.zero(self.n)
        return nabla_p_character(self.weight, self.p)

    def describe(self) -> str:
        return f"Nabla{self.twist}^F (x) L{self.restricted}"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "twist": list(self.twist),
            "restricted": list(self.restricted),
            "zero": self.is_zero,
        }

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class PFiltration:
    lam: SlWeight
    p: int
    case_tag: str
    sections: tuple[NablaPSection, ...]
    layers: dict = field(hash=False)
    edges: frozenset = frozenset()

    @property
    def n(self) -> int:
        return self.lam.n

    def section(self, label: str) -> NablaPSection:
        for s in self.sections:
            if s.label == label:
                return s
        raise KeyError(label)

    def nonzero_sections(self) -> list[NablaPSection]:
        return [s for s in self.sections if not s.is_zero]

    def bottom(self) -> NablaPSection:
        (s,) = [s for s in self.sections if self.layers[s.label] == 0]
        return s

    def character_sum(self) -> FormalCharacter:
        total = FormalCharacter.zero(self.n)
        for s in self.nonzero_sections():
            total = total + s.character()
        return total

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e, key=_label_key)) for e in self.edges)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "p": self.p,
            "n": self.n,
            "case": self.case_tag,
            "sections": [dict(s.to_json(), layer=self.layers[s.label]) for s in self.sections],
            "edges": [list(e) for e in self.sorted_edges()],
        }

    def to_dot(self) -> str:
        lines = ["graph pfiltration {", "  rankdir=BT;", "  node [shape=box];"]
        for s in self.sections:
            style = ", style=dashed" if s.is_zero else ""
            lines.append(f'  "{s.label}" [label="{s.describe()}"{style}];')
        for layer in sorted(set(self.layers.values())):
            members = " ".join(f'"{s.label}";' for s in self.sections if self.layers[s.label] == layer)
            lines.append(f"  {{ rank=same; {members} }}")
        for u, v in self.sorted_edges():
            zero = self.section(u).is_zero or self.section(v).is_zero
            style = " [style=dashed]" if zero else ""
            lines.append(f'  "{u}" -- "{v}"{style};')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        out = [f"p-filtration of Nabla{self.lam}, p={self.p}, case {self.case_tag}"]
        for layer in sorted(set(self.layers.values()), reverse=True):
            row = [
                f"{s.label}: {s.describe()}" + (" [zero]" if s.is_zero else "")
                for s in self.sections
                if self.layers[s.label] == layer
            ]
            out.append(f"  layer {layer}: " + " | ".join(row))
        if self.edges:
            out.append("  edges: " + ", ".join(f"{u}-{v}" for u, v in self.sorted_edges()))
        return "\n".join(out) + "\n"


def _label_key(label: str):
    head = label.rstrip("0123456789")
    tail = label[len(head):]
    return (head, int(tail) if tail else -1)


def _build(lam, p, tag, rows, edges) -> PFiltration:
    """rows: (label, twist, restricted, layer); edges: iterable of label pairs."""
    sections = tuple(NablaPSection(p, SlWeight(t), SlWeight(r), lab) for lab, t, r, _ in rows)
    layers = {lab: layer for lab, _, _, layer in rows}
    edge_set = frozenset(frozenset(e) for e in edges)
    labels = set(layers)
    for e in edge_set:
        if not e <= labels or len(e) != 2:
            raise AssertionError(f"bad edge {set(e)} in case {tag}")
    return PFiltration(lam, p, tag, sections, layers, edge_set)


# ---------------------------------------------------------------------------
# SL_2


def xanth_sections(r: int, a: int, m: int) -> tuple[NablaPSection, NablaPSection | None]:
    """The one- or two-step filtration of nabla(m*r + a) for SL_2."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1")
    if not 0 <= a <= m - 1:
        raise ValueError(f"a must lie in [0, {m - 1}]")
    sub = NablaPSection(m, SlWeight((r,)), SlWeight((a,)), "s0")
    if a == m - 1:
        return sub, None
    return sub, NablaPSection(m, SlWeight((r - 1,)), SlWeight((m - a - 2,)), "s1")


def _sl2_filtration(lam: SlWeight, p: int) -> PFiltration:
    dec = p_decompose(lam, p)
    r, a = dec.lambda1[0], dec.lambda0[0]
    if r == 0 or a == p - 1:
        return _build(lam, p, "sl2-single", [("s0", (r,), (a,), 0)], [])
    sub, quot = xanth_sections(r, a, p)
    rows = [("s0", sub.twist, sub.restricted, 0), ("s1", quot.twist, quot.restricted, 1)]
    return _build(lam, p, "sl2-double", rows, [("s0", "s1")])


# ---------------------------------------------------------------------------
# SL_3


def _case_wall_a(lam, p, a, b, r):
    s = p - r - 2
    rows = [
        ("s0", (a, b), (p - 1, r), 0),
        ("s1", (a - 1, b), (r, s), 1),
        ("s2", (a + 1, b - 1), (r, s), 1),
        ("s3", (a, b - 1), (s, p - 1), 2),
    ]
    if a % p == p - 1:
        rows = [row[:3] + (i,) for i, row in enumerate(rows)]
        edges = [("s0", "s1"), ("s1", "s2"), ("s2", "s3")]
    else:
        edges = [("s0", "s1"), ("s0", "s2"), ("s1", "s3"), ("s2", "s3")]
    return _build(lam, p, "ii", rows, edges)


def _case_wall_b(lam, p, a, b, s):
    r = p - s - 2
    rows = [
        ("s0", (a, b), (s, p - 1), 0),
        ("s1", (a, b - 1), (r, s), 1),
        ("s2", (a - 1, b + 1), (r, s), 1),
        ("s3", (a - 1, b), (p - 1, r), 2),
    ]
    if b % p == p - 1:
        rows = [row[:3] + (i,) for i, row in enumerate(rows)]
        edges = [("s0", "s1"), ("s1", "s2"), ("s2", "s3")]
    else:
        edges = [("s0", "s1"), ("s0", "s2"), ("s1", "s3"), ("s2", "s3")]
    return _build(lam, p, "iii", rows, edges)


def _case_affine_wall(lam, p, a, b, r, s):
    rows = [
        ("s0", (a, b), (r, s), 0),
        ("s1", (a, b - 1), (p - 1, r), 1),
        ("s2", (a - 1, b), (s, p - 1), 1),
        ("s3", (a - 1, b - 1), (r, s), 2),
    ]
    edges = [("s0", "s1"), ("s0", "s2"), ("s1", "s3"), ("s2", "s3")]
    return _build(lam, p, "iv", rows, edges)


def _lower_mu(p, a, b, r, s):
    return {
        "mu1": ((a, b), (r, s)),
        "mu2": ((a, b - 1), (r + s + 1, p - s - 2)),
        "mu3": ((a, b - 2), (p - r - s - 3, r)),
        "mu4": ((a - 1, b), (p - r - 2, r + s + 1)),
        "mu5": ((a - 2, b), (s, p - r - s - 3)),
        "mu6": ((a, b - 1), (s, p - r - s - 3)),
        "mu7": ((a - 1, b - 1), (r, s)),
        "mu8": ((a - 1, b), (p - r - s - 3, r)),
        "mu9": ((a - 1, b - 1), (p - s - 2, p - r - 2)),
    }


def _upper_mu(p, a, b, r, s):
    """Sections for lambda = p(a,b) + (p-s-2, p-r-2), (r,s) in the lower alcove."""
    return {
        "mu1": ((a - 1, b + 1), (s, p - r - s - 3)),
        "mu2": ((a - 1, b), (p - r - 2, r + s + 1)),
        "mu3": ((a - 1, b - 1), (r, s)),
        "mu4": ((a, b), (p - s - 2, p - r - 2)),
        "mu5": ((a - 1, b), (p - r - s - 3, r)),
        "mu6": ((a + 1, b - 1), (p - r - s - 3, r)),
        "mu7": ((a, b - 1), (s, p - r - s - 3)),
        "mu8": ((a, b), (r, s)),
        "mu9": ((a, b - 1), (r + s + 1, p - s - 2)),
    }


def _pairs(text: str):
    return [tuple(f"mu{c}" for c in e.split("-")) for e in text.split()]


_LOWER_COMMON = _pairs("9-6 9-8 9-7 6-2 7-2 7-4 8-4 5-4 3-2 4-1 2-1")
_UPPER_COMMON = _pairs("3-2 3-9 2-8 2-5 2-1 9-6 9-8 9-7 7-4 8-4 5-4")


def _case_lower_generic(lam, p, a, b, r, s):
    mu = _lower_mu(p, a, b, r, s)
    a_cong, b_cong = a % p == 0, b % p == 0
    edges = list(_LOWER_COMMON)
    edges += _pairs("6-5") if a_cong else _pairs("9-5 6-4")
    edges += _pairs("8-3") if b_cong else _pairs("9-3 8-2")
    if a_cong or b_cong:
        layer = {1: 0, 2: 1, 4: 1, 3: 2, 5: 2, 6: 3, 7: 3, 8: 3, 9: 4}
    else:
        layer = {1: 0, 2: 1, 4: 1, 3: 2, 5: 2, 6: 2, 7: 2, 8: 2, 9: 3}
    rows = [(lab, *mu[lab], layer[int(lab[2:])]) for lab in sorted(mu, key=_label_key)]
    return _build(lam, p, "vii", rows, edges)


def _case_upper(lam, p, a, b, r, s):
    mu = _upper_mu(p, a, b, r, s)
    a_cong, b_cong = a % p == p - 1, b % p == p - 1
    edges = list(_UPPER_COMMON)
    edges += _pairs("6-5") if a_cong else _pairs("9-5 6-4")
    edges += _pairs("1-7") if b_cong else _pairs("2-7 1-4")
    if a_cong or b_cong:
        layer = {4: 0, 7: 1, 8: 1, 5: 1, 1: 2, 6: 2, 2: 3, 9: 3, 3: 4}
    else:
        layer = {4: 0, 1: 1, 7: 1, 8: 1, 5: 1, 6: 1, 2: 2, 9: 2, 3: 3}
    rows = [(lab, *mu[lab], layer[int(lab[2:])]) for lab in sorted(mu, key=_label_key)]
    return _build(lam, p, "viii", rows, edges)


def _sl3_filtration(lam: SlWeight, p: int) -> PFiltration:
    dec = p_decompose(lam, p)
    a, b = dec.lambda1
    nu = dec.lambda0
    cls = restricted_class(nu, p)
    x, y = nu
    if cls is RestrictedClass.STEINBERG:
        return _build(lam, p, "i", [("s0", (a, b), (p - 1, p - 1), 0)], [])
    if cls is RestrictedClass.WALL_A:
        return _case_wall_a(lam, p, a, b, y)
    if cls is RestrictedClass.WALL_B:
        return _case_wall_b(lam, p, a, b, x)
    if cls is RestrictedClass.AFFINE_WALL:
        return _case_affine_wall(lam, p, a, b, x, y)
    if cls is RestrictedClass.UPPER_INTERIOR:
        r, s = upper_reflection(nu, p)
        return _case_upper(lam, p, a, b, r, s)
    r, s = x, y
    if a >= 1 and b >= 1:
        return _case_lower_generic(lam, p, a, b, r, s)
    if a >= 1:
        rows = [
            ("s0", (a, 0), (r, s), 0),
            ("s1", (a - 1, 0), (p - r - 2, r + s + 1), 1),
            ("s2", (a - 2, 0), (s, p - r - s - 3), 2),
        ]
        return _build(lam, p, "v", rows, [("s0", "s1"), ("s1", "s2")])
    if b >= 1:
        rows = [
            ("s0", (0, b), (r, s), 0),
            ("s1", (0, b - 1), (r + s + 1, p - s - 2), 1),
            ("s2", (0, b - 2), (p - r - s - 3, r), 2),
        ]
        return _build(lam, p, "vi", rows, [("s0", "s1"), ("s1", "s2")])
    return _build(lam, p, "lower-0", [("s0", (0, 0), (r, s), 0)], [])


def p_filtration(lam, p: int, n: int | None = None) -> PFiltration:
    """The p-filtration of nabla(lam) together with its extension diagram."""
    lam = as_weight(lam)
    if n is not None and lam.n != n:
        raise ValueError(f"{lam} is not an SL_{n} weight")
    if not lam.is_dominant:
        raise ValueError(f"{lam} is not dominant")
    if len(lam) == 1:
        return _sl2_filtration(lam, p)
    return _sl3_filtration(lam, p)


def _alcove_side(nu: SlWeight, p: int) -> str | None:
    cls = restricted_class(nu, p)
    if cls is RestrictedClass.LOWER_INTERIOR:
        return "lower"
    if cls is RestrictedClass.UPPER_INTERIOR:
        return "upper"
    return None


def edge_allowed(sA: NablaPSection, sB: NablaPSection, p: int) -> bool | None:
    """Whether an extension between two sections can occur.

    Decides only two situations: equal restricted parts with twists one
    root apart in the two special directions (non-zero exactly under the
    congruence condition), and distinct restricted parts in the same alcove
    (always zero).  Returns None when neither applies.
    """
    if sA.n != 3 or sB.n != 3:
        raise ValueError("edge_allowed is defined for SL_3 sections")
    if sA.is_zero or sB.is_zero:
        raise ValueError("edge_allowed needs non-zero sections")
    if sA.restricted == sB.restricted:
        d = tuple(x - y for x, y in zip(sA.twist, sB.twist))
        if d in ((1, -2), (-1, 2)):
            low = sA.twist if d == (1, -2) else sB.twist
            # twists (A-1, B+1) and (A, B-1): non-split iff B = -1 mod p
            return (low[1] + 1) % p == p - 1
        if d in ((2, -1), (-2, 1)):
            low = sB.twist if d == (2, -1) else sA.twist
            # twists (A+1, B-1) and (A-1, B): non-split iff A = -1 mod p
            return (low[0] + 1) % p == p - 1
        return None
    side_a = _alcove_side(sA.restricted, p)
    if side_a is not None and side_a == _alcove_side(sB.restricted, p):
        return False
    return None


# ---------------------------------------------------------------------------
# Ext^1 over the Frobenius kernel between restricted simples


class ExtTableEntry(enum.Enum):
    ZERO = "Zero"
    K = "K"
    TWIST_E1 = "TwistE1"
    TWIST_E2 = "TwistE2"
    SUM_ALL = "SumAll"

    def dual(self) -> "ExtTableEntry":
        swap = {ExtTableEntry.TWIST_E1: ExtTableEntry.TWIST_E2,
                ExtTableEntry.TWIST_E2: ExtTableEntry.TWIST_E1}
        return swap.get(self, self)


@lru_cache(maxsize=32)
def _ext_table(p: int) -> dict:
    E = ExtTableEntry
    table: dict = {}

    def put(alpha, beta, entry):
        key = (SlWeight(alpha), SlWeight(beta))
        if table.setdefault(key, entry) is not entry:
            raise AssertionError(f"conflicting table entries at {key}")

    for r in range(p - 1):
        s = p - 2 - r
        put((r, s), (p - 1, r), E.TWIST_E2)
        put((r, s), (s, p - 1), E.TWIST_E1)
        put((p - 1, r), (r, s), E.TWIST_E1)
        put((s, p - 1), (r, s), E.TWIST_E2)
    for r in range(p - 2):
        for s in range(p - 2 - r):
            up = (p - s - 2, p - r - 2)
            rows = [
                ((r, s), up, E.K),
                ((r, s), (r + s + 1, p - s - 2), E.TWIST_E2),
                ((r, s), (p - r - 2, r + s + 1), E.TWIST_E1),
                (up, (r, s), E.K),
                (up, (s, p - r - s - 3), E.TWIST_E2),
                (up, (p - r - s - 3, r), E.TWIST_E1),
            ]
            for alpha, beta, entry in rows:
                put(alpha, beta, E.SUM_ALL if p == 3 else entry)
    return table


def g1_ext_table(alpha, beta, p: int) -> ExtTableEntry:
    alpha, beta = as_weight(alpha), as_weight(beta)
    for w in (alpha, beta):
        if len(w) != 2 or not w.is_restricted(p):
            raise ValueError(f"{w} is not a {p}-restricted SL_3 weight")
    return _ext_table(p).get((alpha, beta), ExtTableEntry.ZERO)


# ---------------------------------------------------------------------------
# good resolutions


RESOLUTION_KINDS = ("lower", "upper", "wall-A", "wall-B")


@dataclass(frozen=True)
class GoodResolution:
    kind: str
    a: int
    b: int
    r: int
    s: int
    p: int
    sources: tuple[NablaPSection, ...]
    terms: tuple[SlWeight, ...]

    @property
    def top(self) -> SlWeight:
        return self.terms[0]

    def source_character(self) -> FormalCharacter:
        total = FormalCharacter.zero(3)
        for sec in self.sources:
            total = total + sec.character()
        return total

    def alternating_character(self) -> FormalCharacter:
        total = FormalCharacter.zero(3)
        for i, t in enumerate(self.terms):
            c = weyl_character(t)
            total = total - c if i % 2 else total + c
        return total

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "a": self.a, "b": self.b, "r": self.r, "s": self.s, "p": self.p,
            "sources": [sec.to_json() for sec in self.sources],
            "terms": [list(t) for t in self.terms],
        }


def _check_params(kind, a, b, r, s, p):
    if kind not in RESOLUTION_KINDS:
        raise ValueError(f"unknown resolution kind {kind!r}")
    if a < 0 or b < 0 or r < 0 or s < 0:
        raise ValueError("parameters must be nonnegative")
    if kind in ("lower", "upper"):
        if r + s > p - 3:
            raise ValueError(f"(r,s)=({r},{s}) is not in the lower alcove for p={p}")
        if kind == "lower" and b < 1:
            raise ValueError("the lower resolution needs b >= 1")
    elif r + s != p - 2:
        raise ValueError(f"wall resolutions need r+s = p-2, got {r}+{s}")


def _source_rows(kind, a, b, r, s, p):
    if kind == "lower":
        mu = _lower_mu(p, a, b, r, s)
        return [(lab, *mu[lab]) for lab in ("mu1", "mu2", "mu3")]
    if kind == "upper":
        # the upper weight (p-r-2, r+s+1) is the reflection of (p-r-s-3, r)
        mu = _upper_mu(p, a, b, p - r - s - 3, r)
        return [(lab, *mu[lab]) for lab in ("mu4", "mu5", "mu6", "mu7", "mu8", "mu9")]
    if kind == "wall-B":
        return [("s0", (a, b), (s, p - 1)), ("s1", (a, b - 1), (r, s))]
    return [("s0", (a, b), (r, s)), ("s1", (a, b - 1), (p - 1, r))]


def m_module_sections(kind: str, a: int, b: int, r: int, s: int, p: int) -> list[NablaPSection]:
    """Non-zero p-filtration sections making up the module M being resolved."""
    _check_params(kind, a, b, r, s, p)
    secs = [NablaPSection(p, SlWeight(t), SlWeight(nu), lab)
            for lab, t, nu in _source_rows(kind, a, b, r, s, p)]
    return [sec for sec in secs if not sec.is_zero]


def _term_parts(kind, j, r, s, p):
    """(twist shift in b, restricted part) of term j."""
    i, odd = divmod(j, 2)
    if kind == "lower":
        return (i, (p - r - 2, r + s + 1)) if odd else (i, (r, s))
    if kind == "upper":
        return (i + 1, (r, s)) if odd else (i, (p - r - 2, r + s + 1))
    if kind == "wall-B":
        return (i + 1, (r, s)) if odd else (i, (s, p - 1))
    return (i, (s, p - 1)) if odd else (i, (r, s))


def good_resolution(kind: str, a: int, b: int, r: int, s: int, p: int) -> GoodResolution:
    _check_params(kind, a, b, r, s, p)
    terms = []
    for j in range(a + 1):
        shift, nu = _term_parts(kind, j, r, s, p)
        terms.append(SlWeight((p * (a - j) + nu[0], p * (b + shift) + nu[1])))
    for t in terms:
        if not t.is_dominant:
            raise AssertionError(f"non-dominant term {t}")
    sources = tuple(m_module_sections(kind, a, b, r, s, p))
    return GoodResolution(kind, a, b, r, s, p, sources, tuple(terms))


def euler_check(res: GoodResolution) -> bool:
    """Exactness at the level of characters."""
    try:
        return res.source_character() == res.alternating_character()
    except ValueError:
        return False
