"""
Signed permutations, their triple encoding, and the sequence-side operators.

Simple roots of type D are plain integers: ``1`` stands for the root
``alpha_1' = e_1 + e_2`` and ``i >= 2`` for ``alpha_i = e_i - e_{i-1}``.
Sides are the strings ``"L"`` and ``"R"``.  Left operators act on first
coordinates (values), right operators on second coordinates (positions).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

ALPHA1P = 1
SIDES = ("L", "R")


class DomainError(ValueError):
    """An operator was applied outside its domain."""


class Triple(NamedTuple):
    e: int
    g: int
    eps: int


def root_name(r: int) -> str:
    return "a1p" if r == ALPHA1P else f"a{r}"


def parse_root(text: str) -> int:
    t = text.strip().lower().replace("'", "p").replace("alpha", "a")
    if t in ("a1p", "a1'"):
        return ALPHA1P
    if t.startswith("a") and t[1:].isdigit() and int(t[1:]) >= 2:
        return int(t[1:])
    raise ValueError(f"not a simple root of type D: {text!r}")


def roots(n: int) -> list[int]:
    return list(range(1, n + 1)) if n >= 2 else []


def root_labels(r: int) -> tuple[int, int]:
    return (1, 2) if r == ALPHA1P else (r - 1, r)


def adjacent(a: int, b: int) -> bool:
    """Whether two simple roots are joined in the type-D diagram."""
    if {a, b} == {1, 3}:
        return True
    return a >= 2 and b >= 2 and abs(a - b) == 1


def adjacent_pairs(n: int) -> list[tuple[int, int]]:
    rs = roots(n)
    return [(a, b) for a in rs for b in rs if adjacent(a, b)]


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")


# ---------------------------------------------------------------- permutations

@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", w)
        if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a signed permutation window: {list(w)}")

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        try:
            return cls(tuple(int(x) for x in text.replace(",", " ").split()))
        except ValueError as exc:
            raise ValueError(f"malformed window {text!r}: {exc}") from None

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def parity(self) -> int:
        return sum(1 for x in self.window if x < 0) % 2

    def __call__(self, i: int) -> int:
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(tuple(self(other(g)) for g in range(1, other.n + 1)))

    def inverse(self) -> "SignedPermutation":
        out = [0] * self.n
        for g, v in enumerate(self.window, 1):
            out[abs(v) - 1] = g if v > 0 else -g
        return SignedPermutation(tuple(out))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.window)


def simple_reflection(r: int, n: int) -> SignedPermutation:
    w = list(range(1, n + 1))
    a, b = root_labels(r)
    if r == ALPHA1P:
        w[0], w[1] = -2, -1
    else:
        w[a - 1], w[b - 1] = b, a
    return SignedPermutation(tuple(w))


def all_signed_perms(n: int, even_only: bool = False) -> list[SignedPermutation]:
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if even_only and signs.count(-1) % 2:
                continue
            out.append(SignedPermutation(tuple(s * p for s, p in zip(signs, perm))))
    return out


def type_b_length(w: SignedPermutation) -> int:
    """Coxeter length in W(C_n): inversions, negative-sum pairs and negatives."""
    x = w.window
    inv = sum(1 for i, j in itertools.combinations(range(len(x)), 2) if x[i] > x[j])
    nsp = sum(1 for i, j in itertools.combinations(range(len(x)), 2) if x[i] + x[j] < 0)
    return inv + nsp + sum(1 for v in x if v < 0)


def type_d_length(w: SignedPermutation) -> int:
    x = w.window
    inv = sum(1 for i, j in itertools.combinations(range(len(x)), 2) if x[i] > x[j])
    nsp = sum(1 for i, j in itertools.combinations(range(len(x)), 2) if x[i] + x[j] < 0)
    return inv + nsp


def length_descents(side: str, w: SignedPermutation) -> set[int]:
    """Descents ``{a : l(s_a w) < l(w)}`` (left) or ``l(w s_a) < l(w)`` (right)
    computed from the type-D length, used as an independent oracle."""
    _check_side(side)
    base = type_d_length(w)
    out = set()
    for r in roots(w.n):
        s = simple_reflection(r, w.n)
        other = s * w if side == "L" else w * s
        if type_d_length(other) < base:
            out.add(r)
    return out


# ------------------------------------------------------------ triple sequences

class TripleSequence:
    """A set of triples ``(e, g, eps)`` whose coordinates biject onto two label
    sets.  Instances are immutable and hashable."""

    __slots__ = ("triples", "_by_e", "_by_g", "_hash")

    def __init__(self, triples: Iterable):
        ts = frozenset(Triple(int(e), int(g), int(s)) for e, g, s in triples)
        by_e = {t.e: t for t in ts}
        by_g = {t.g: t for t in ts}
        if len(by_e) != len(ts) or len(by_g) != len(ts):
            raise ValueError("coordinates of a triple sequence must be distinct")
        if any(t.eps not in (1, -1) for t in ts):
            raise ValueError("signs must be +1 or -1")
        self.triples = ts
        self._by_e = by_e
        self._by_g = by_g
        self._hash = hash(ts)

    @property
    def m1(self) -> frozenset[int]:
        return frozenset(self._by_e)

    @property
    def m2(self) -> frozenset[int]:
        return frozenset(self._by_g)

    def by_first(self, e: int) -> Triple:
        return self._by_e[e]

    def by_second(self, g: int) -> Triple:
        return self._by_g[g]

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(sorted(self.triples, key=lambda t: t.g))

    def __eq__(self, other) -> bool:
        return isinstance(other, TripleSequence) and self.triples == other.triples

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "TripleSequence") -> bool:
        return sorted(self.triples) < sorted(other.triples)

    def __repr__(self) -> str:
        body = ", ".join(f"({t.e},{t.g},{'+' if t.eps > 0 else '-'})" for t in self)
        return "{" + body + "}"

    @property
    def minus_count(self) -> int:
        return sum(1 for t in self.triples if t.eps < 0)

    @property
    def is_even(self) -> bool:
        """Membership in the class with an even number of negative signs."""
        return self.minus_count % 2 == 0

    def swap(self) -> "TripleSequence":
        """Exchange the two coordinates; this is the encoding of ``w^{-1}``."""
        return TripleSequence((t.g, t.e, t.eps) for t in self.triples)

    def to_permutation(self) -> SignedPermutation:
        n = len(self.triples)
        if self.m1 != frozenset(range(1, n + 1)) or self.m2 != self.m1:
            raise ValueError("only sequences on {1..n} x {1..n} are permutations")
        return SignedPermutation(tuple(self._by_g[g].eps * self._by_g[g].e
                                       for g in range(1, n + 1)))

    def format(self) -> str:
        return "\n".join(f"{t.e} {t.g} {t.eps:+d}" for t in self)

    @classmethod
    def parse(cls, text: str) -> "TripleSequence":
        triples = []
        for line in text.splitlines():
            line = line.split("#")[0].strip()
            if line:
                e, g, s = line.split()
                triples.append((int(e), int(g), int(s)))
        return cls(triples)


def delta(w: SignedPermutation) -> TripleSequence:
    return TripleSequence((abs(v), g, 1 if v > 0 else -1)
                          for g, v in enumerate(w.window, 1))


def _on_side(side: str, gamma: TripleSequence, fn) -> TripleSequence:
    _check_side(side)
    if side == "L":
        return fn(gamma)
    return fn(gamma.swap()).swap()


def _sign_change_left(k, gamma):
    if k is None:
        return TripleSequence((t.e, t.g, -t.eps) for t in gamma.triples)
    if k not in gamma.m1:
        raise DomainError(f"label {k} is not a first coordinate")
    return TripleSequence((t.e, t.g, -t.eps if t.e == k else t.eps)
                          for t in gamma.triples)


def sign_change(side: str, k: int | None, gamma: TripleSequence) -> TripleSequence:
    """Flip the sign of the triple labelled ``k``; ``k=None`` flips every sign."""
    return _on_side(side, gamma, lambda x: _sign_change_left(k, x))


def _interchange_left(i, j, gamma):
    for k in (i, j):
        if k not in gamma.m1:
            raise DomainError(f"label {k} is not a first coordinate")
    swap = {i: j, j: i}
    return TripleSequence((swap.get(t.e, t.e), t.g, t.eps) for t in gamma.triples)


def interchange(side: str, i: int, j: int, gamma: TripleSequence) -> TripleSequence:
    return _on_side(side, gamma, lambda x: _interchange_left(i, j, x))


def mult_simple(side: str, r: int, gamma: TripleSequence) -> TripleSequence:
    a, b = root_labels(r)
    if r == ALPHA1P:
        return sign_change(side, 1, sign_change(side, 2, interchange(side, 1, 2, gamma)))
    return interchange(side, a, b, gamma)


def _tau_left(gamma: TripleSequence) -> set[int]:
    out = set()
    m = gamma.m1
    if 1 in m and 2 in m:
        _, k, e1 = gamma.by_first(1)
        _, l, e2 = gamma.by_first(2)
        if (k > l and e1 < 0) or (k < l and e2 < 0):
            out.add(ALPHA1P)
    for i in sorted(m):
        if i >= 2 and i - 1 in m:
            _, k, ep = gamma.by_first(i - 1)
            _, l, e = gamma.by_first(i)
            if (e > 0 and ep > 0 and l < k) or (e < 0 < ep) or (e < 0 and ep < 0 and k < l):
                out.add(i)
    return out


def tau(side: str, gamma: TripleSequence) -> set[int]:
    _check_side(side)
    return _tau_left(gamma if side == "L" else gamma.swap())


def in_domain(side: str, a: int, b: int, gamma: TripleSequence) -> bool:
    """Membership in ``D_ab``: ``a`` is not a descent and ``b`` is."""
    t = tau(side, gamma)
    return a not in t and b in t


def t_wall(side: str, a: int, b: int, gamma: TripleSequence) -> TripleSequence:
    """The wall-crossing bijection ``T_ab : D_ab -> D_ba``."""
    if not adjacent(a, b):
        raise DomainError(f"{root_name(a)} and {root_name(b)} are not adjacent")
    if not in_domain(side, a, b, gamma):
        raise DomainError(f"sequence is not in D_{root_name(a)}{root_name(b)}")
    hits = [c for c in (mult_simple(side, a, gamma), mult_simple(side, b, gamma))
            if in_domain(side, b, a, c)]
    if len(hits) != 1:
        raise AssertionError(f"wall operator found {len(hits)} candidates")
    return hits[0]


# ------------------------------------------------------- D4 quadruple types

QUAD_BETAS = (ALPHA1P, 2, 4)
TYPE_C, TYPE_D = "C", "D"


def quad_others(beta: int) -> tuple[int, int]:
    """The two outer roots of the D4 diagram other than ``beta``."""
    if beta not in QUAD_BETAS:
        raise ValueError(f"{root_name(beta)} is not an outer root of D4")
    g, d = (r for r in QUAD_BETAS if r != beta)
    return g, d


@dataclass(frozen=True)
class LeftType:
    kind: str                  # "A", "B", "C" or "D"
    beta: int | None = None    # set for "A" and "B"

    def __str__(self) -> str:
        return self.kind if self.beta is None else f"{self.kind}_{root_name(self.beta)}"


def _require_quad(side: str, gamma: TripleSequence) -> None:
    labels = gamma.m1 if side == "L" else gamma.m2
    if not {1, 2, 3, 4} <= labels:
        raise DomainError("quadruple types need labels 1..4")


def classify_type(side: str, gamma: TripleSequence) -> LeftType | None:
    _check_side(side)
    _require_quad(side, gamma)
    t = tau(side, gamma) & {1, 2, 3, 4}
    T = lambda a, b: t_wall(side, a, b, gamma)  # noqa: E731
    outer = t & set(QUAD_BETAS)
    if 3 in t:
        if len(outer) == 1:
            (beta,) = outer
            g, d = quad_others(beta)
            if T(g, 3) != T(d, 3):
                return LeftType("A", beta)
        elif not outer:
            if T(1, 3) == T(2, 3) == T(4, 3):
                return LeftType(TYPE_D)
    else:
        if len(outer) == 2:
            (beta,) = set(QUAD_BETAS) - outer
            g, d = quad_others(beta)
            if T(3, g) != T(3, d):
                return LeftType("B", beta)
        elif len(outer) == 3:
            if T(3, 1) == T(3, 2) == T(3, 4):
                return LeftType(TYPE_C)
    return None


QUAD_KINDS = {"Dβ": ("A", TYPE_D), "Cβ": ("B", TYPE_C),
              "βC": (TYPE_C, "B"), "βD": (TYPE_D, "A")}
_KIND_ALIASES = {"Db": "Dβ", "Cb": "Cβ", "bC": "βC", "bD": "βD",
                 "D": "βD", "C": "βC"}


def normalize_kind(kind: str) -> str:
    kind = _KIND_ALIASES.get(kind, kind)
    if kind not in QUAD_KINDS:
        raise ValueError(f"unknown quadruple operator kind {kind!r}")
    return kind


def quad_types(kind: str, beta: int) -> tuple[LeftType, LeftType]:
    """Source and target types of a quadruple operator."""
    src, dst = QUAD_KINDS[normalize_kind(kind)]
    mk = lambda k: LeftType(k, beta) if k in ("A", "B") else LeftType(k)  # noqa: E731
    return mk(src), mk(dst)


def quad_candidates(side: str, beta: int, gamma: TripleSequence,
                    from_cd: bool = False) -> list[TripleSequence]:
    """The four elements a quadruple operator chooses from.

    Leaving type C or D the three-letter word is read backwards, ``s_g s_d s_3``,
    so that the operators out of C and D undo the ones into C and D.
    """
    g, d = quad_others(beta)
    s = lambda r, x: mult_simple(side, r, x)  # noqa: E731
    three = s(g, s(d, s(3, gamma))) if from_cd else s(3, s(g, s(d, gamma)))
    return [
        s(beta, gamma),
        three,
        s(3, s(d, s(3, gamma))),
        s(3, s(g, s(3, gamma))),
    ]


def t_quad(side: str, kind: str, beta: int, gamma: TripleSequence) -> set[TripleSequence]:
    src, dst = quad_types(kind, beta)
    if classify_type(side, gamma) != src:
        raise DomainError(f"sequence is not of type {src}")
    from_cd = src.kind in (TYPE_C, TYPE_D)
    out = {c for c in quad_candidates(side, beta, gamma, from_cd)
           if classify_type(side, c) == dst}
    if not 1 <= len(out) <= 2:
        raise AssertionError(f"quadruple operator produced {len(out)} values")
    return out
