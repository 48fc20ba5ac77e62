"""
Tableau-side tau-invariants, wall-crossing operators and the D4 quadruple
operators on pairs of domino tableaux.

Left operators act on the first tableau of a pair and may drag the second
one along through extended cycles; right operators are the mirror image,
obtained by swapping the pair, acting on the left and swapping back.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cycles import (
    ExtendedCycle,
    cycle_of,
    extended_cycle,
    move_through,
    is_special_shape,
    move_through_extended,
)
from .insertion import TableauPair
from .signed_perms import (
    ALPHA1P,
    QUAD_BETAS,
    TYPE_C,
    TYPE_D,
    DomainError,
    LeftType,
    adjacent,
    normalize_kind,
    quad_others,
    quad_types,
    root_name,
)
from .tableaux import (
    DominoTableau,
    Position,
    Square,
    horizontal,
    is_standard,
    position,
    shape_of,
    vertical,
)

# ------------------------------------------------------------------ tau

_ALPHA1P_CONFIGS = (
    (vertical(1, 1), vertical(1, 2)),
    (horizontal(1, 1), vertical(2, 1)),
    (vertical(1, 1), vertical(3, 1)),
)


def tau_tableau(t: DominoTableau) -> set[int]:
    out = set()
    if 1 in t and 2 in t and (t[1], t[2]) in _ALPHA1P_CONFIGS:
        out.add(ALPHA1P)
    for i in t.labels:
        if i >= 2 and i - 1 in t:
            if min(r for r, _ in t[i]) > max(r for r, _ in t[i - 1]):
                out.add(i)
    return out


def _side_tableau(side: str, pair: TableauPair) -> DominoTableau:
    if side == "L":
        return pair.left
    if side == "R":
        return pair.right
    raise ValueError(f"side must be 'L' or 'R', got {side!r}")


def tau_pair(side: str, pair: TableauPair) -> set[int]:
    return tau_tableau(_side_tableau(side, pair))


def in_domain_tableau(t: DominoTableau, a: int, b: int) -> bool:
    """Membership in ``D_ab``: ``a`` is not a descent and ``b`` is."""
    tt = tau_tableau(t)
    return a not in tt and b in tt


def _on_right(fn, pair: TableauPair, *args):
    res = fn(pair.swap(), *args)
    if isinstance(res, TableauPair):
        return res.swap()
    return {p.swap() for p in res}


# ---------------------------------------------------- wall operators, i >= 2

def _region_tilings(cells: frozenset[Square]):
    if not cells:
        yield ()
        return
    m = min(cells)
    for dr, dc in ((0, 1), (1, 0)):
        o = (m[0] + dr, m[1] + dc)
        if o in cells:
            for rest in _region_tilings(cells - {m, o}):
                yield (position(m, o),) + rest


def _t_wall_type_a(a: int, b: int, t: DominoTableau) -> DominoTableau:
    """Labels ``i-1, i, i+1`` with ``{a, b} = {i, i+1}``.

    A label interchange is used when one lands in ``D_ba``; otherwise the
    three dominoes are re-tiled inside the squares they cover, keeping the
    number of vertical dominoes.
    """
    i = min(a, b)
    for x, y in ((i, i + 1), (i - 1, i)):
        u = t.interchange(x, y)
        if is_standard(u) and in_domain_tableau(u, b, a):
            return u
    labels = (i - 1, i, i + 1)
    region = frozenset(s for k in labels for s in t[k])
    hits = set()
    for tiling in _region_tilings(region):
        for perm in itertools.permutations(tiling):
            u = t.replace(dict(zip(labels, perm)), check=False)
            if u.n_v == t.n_v and is_standard(u) and in_domain_tableau(u, b, a):
                hits.add(u)
    if len(hits) != 1:
        raise AssertionError(f"wall operator found {len(hits)} candidates")
    return hits.pop()


# ----------------------------------------------- wall operators, {a1', a3}

_S22, _S13 = (2, 2), (1, 3)

H1 = DominoTableau({1: vertical(1, 1), 2: vertical(1, 2), 3: horizontal(1, 3)})
H2 = DominoTableau({1: horizontal(1, 1), 2: horizontal(1, 3), 3: horizontal(2, 1)})


def _swap_s22_s13(t: DominoTableau) -> DominoTableau:
    """Exchange the squares ``S_{2,2}`` and ``S_{1,3}`` between labels 2 and 3."""
    p2 = [s for s in t[2] if s != _S22] + [_S13]
    p3 = [s for s in t[3] if s != _S13] + [_S22]
    return t.replace({2: position(*p2), 3: position(*p3)}, check=False)


def _ec3(pair: TableauPair) -> TableauPair:
    return move_through_extended(pair, extended_cycle(3, "L", pair))


def _case_one(t: DominoTableau) -> bool:
    return _S22 not in set(t[2]) | set(t[3])


def _direct_31(pair: TableauPair) -> TableauPair | None:
    """Cases computed outright for ``T_{a3 a1'}``; ``None`` elsewhere."""
    t = pair.left
    if _case_one(t):
        return TableauPair(t.interchange(2, 3), pair.right)
    if t[1] == vertical(1, 1) and t[2] == vertical(1, 2):
        if t[3] == horizontal(1, 3):
            moved = _ec3(pair)
            return TableauPair(_swap_s22_s13(moved.left), moved.right)
        if t[3] == vertical(1, 3):
            return _ec3(TableauPair(_swap_s22_s13(t), pair.right))
    return None


def _undo_direct_31(pair: TableauPair) -> TableauPair | None:
    """The preimage under the outright cases of ``T_{a3 a1'}``, if any."""
    t = pair.left
    if _case_one(t):
        return TableauPair(t.interchange(2, 3), pair.right)
    guesses = []
    moved = _ec3(pair)
    if all(moved.left[k] == p for k, p in H2.items()):
        guesses.append(TableauPair(moved.left.replace(dict(H1.items()), check=False),
                                   moved.right))
    if all(t[k] == p for k, p in H2.items()):
        back = TableauPair(t.replace(dict(H1.items()), check=False), pair.right)
        guesses.append(_ec3(back))
    for g in guesses:
        if is_standard(g.left) and in_domain_tableau(g.left, 3, ALPHA1P):
            if _direct_31(g) == pair:
                return g
    return None


def _t_wall_13(a: int, b: int, pair: TableauPair) -> TableauPair:
    t = pair.left
    if (a, b) == (3, ALPHA1P):
        out = _direct_31(pair)
        if out is None:
            back = _undo_direct_31(pair.transpose())
            out = back.transpose() if back is not None else None
    else:
        out = None
        if _case_one(t):
            out = TableauPair(t.interchange(2, 3), pair.right)
        if out is None:
            out = _undo_direct_31(pair)
        if out is None:
            fwd = _direct_31(pair.transpose())
            out = fwd.transpose() if fwd is not None else None
    if out is None or not in_domain_tableau(out.left, b, a):
        raise AssertionError(f"T_{root_name(a)}{root_name(b)} left its codomain")
    return out


def _t_wall_left(pair: TableauPair, a: int, b: int) -> TableauPair:
    if not adjacent(a, b):
        raise DomainError(f"{root_name(a)} and {root_name(b)} are not adjacent")
    if not in_domain_tableau(pair.left, a, b):
        raise DomainError(f"pair is not in D_{root_name(a)}{root_name(b)}")
    if ALPHA1P in (a, b):
        return _t_wall_13(a, b, pair)
    return TableauPair(_t_wall_type_a(a, b, pair.left), pair.right)


def t_wall_pair(side: str, a: int, b: int, pair: TableauPair) -> TableauPair:
    if side == "L":
        return _t_wall_left(pair, a, b)
    if side == "R":
        return _on_right(_t_wall_left, pair, a, b)
    raise ValueError(f"side must be 'L' or 'R', got {side!r}")


# ------------------------------------------------------ rank-4 templates

def _t(placement: dict[int, Position]) -> DominoTableau:
    return DominoTableau(placement)


V, H = vertical, horizontal

TEMPLATES: dict[tuple[str, int | None, int], DominoTableau] = {
    ("A", 1, 1): _t({1: V(1, 1), 2: V(1, 2), 3: V(3, 1), 4: V(1, 3)}),
    ("A", 1, 2): _t({1: V(1, 1), 2: V(1, 2), 3: H(3, 1), 4: H(1, 3)}),
    ("A", 1, 3): _t({1: V(1, 1), 2: V(1, 2), 3: V(3, 1), 4: H(1, 3)}),
    ("A", 1, 4): _t({1: V(1, 1), 2: V(1, 2), 3: H(3, 1), 4: V(1, 3)}),
    ("A", 2, 1): _t({1: H(1, 1), 2: H(2, 1), 3: V(3, 1), 4: V(1, 3)}),
    ("A", 2, 2): _t({1: H(1, 1), 2: H(2, 1), 3: H(3, 1), 4: H(1, 3)}),
    ("A", 2, 3): _t({1: H(1, 1), 2: H(2, 1), 3: V(3, 1), 4: H(1, 3)}),
    ("A", 2, 4): _t({1: H(1, 1), 2: H(2, 1), 3: H(3, 1), 4: V(1, 3)}),
    ("A", 4, 1): _t({1: V(1, 1), 2: H(1, 2), 3: H(2, 2), 4: V(3, 1)}),
    ("A", 4, 2): _t({1: H(1, 1), 2: H(1, 3), 3: H(2, 1), 4: H(3, 1)}),
    ("A", 4, 3): _t({1: H(1, 1), 2: H(1, 3), 3: H(2, 1), 4: V(3, 1)}),
    ("A", 4, 4): _t({1: V(1, 1), 2: H(1, 2), 3: H(2, 2), 4: H(3, 1)}),
    ("B", 1, 1): _t({1: H(1, 1), 2: H(2, 1), 3: V(1, 3), 4: V(3, 1)}),
    ("B", 1, 2): _t({1: H(1, 1), 2: H(2, 1), 3: H(1, 3), 4: H(3, 1)}),
    ("B", 1, 3): _t({1: H(1, 1), 2: H(2, 1), 3: H(1, 3), 4: V(3, 1)}),
    ("B", 1, 4): _t({1: H(1, 1), 2: H(2, 1), 3: V(1, 3), 4: H(3, 1)}),
    ("B", 2, 1): _t({1: V(1, 1), 2: V(1, 2), 3: V(1, 3), 4: V(3, 1)}),
    ("B", 2, 2): _t({1: V(1, 1), 2: V(1, 2), 3: H(1, 3), 4: H(3, 1)}),
    ("B", 2, 3): _t({1: V(1, 1), 2: V(1, 2), 3: H(1, 3), 4: V(3, 1)}),
    ("B", 2, 4): _t({1: V(1, 1), 2: V(1, 2), 3: V(1, 3), 4: H(3, 1)}),
    ("B", 4, 1): _t({1: V(1, 1), 2: V(3, 1), 3: V(1, 2), 4: V(1, 3)}),
    ("B", 4, 2): _t({1: H(1, 1), 2: V(2, 1), 3: V(2, 2), 4: H(1, 3)}),
    ("B", 4, 3): _t({1: V(1, 1), 2: V(3, 1), 3: V(1, 2), 4: H(1, 3)}),
    ("B", 4, 4): _t({1: H(1, 1), 2: V(2, 1), 3: V(2, 2), 4: V(1, 3)}),
    ("C", None, 1): _t({1: V(1, 1), 2: V(3, 1), 3: H(1, 2), 4: H(2, 2)}),
    ("C", None, 2): _t({1: H(1, 1), 2: V(2, 1), 3: H(1, 3), 4: V(2, 2)}),
    ("C", None, 3): _t({1: V(1, 1), 2: V(3, 1), 3: H(1, 2), 4: V(2, 2)}),
    ("C", None, 4): _t({1: H(1, 1), 2: V(2, 1), 3: H(1, 3), 4: H(2, 2)}),
    ("D", None, 1): _t({1: V(1, 1), 2: H(1, 2), 3: V(3, 1), 4: H(2, 2)}),
    ("D", None, 2): _t({1: H(1, 1), 2: H(1, 3), 3: V(2, 1), 4: V(2, 2)}),
    ("D", None, 3): _t({1: V(1, 1), 2: H(1, 2), 3: V(3, 1), 4: V(2, 2)}),
    ("D", None, 4): _t({1: H(1, 1), 2: H(1, 3), 3: V(2, 1), 4: H(2, 2)}),
}

F_SHAPES = {
    ("A", 1): (3, 3, 1, 1), ("A", 2): (4, 2, 2), ("A", 3): (4, 2, 1, 1), ("A", 4): (3, 3, 2),
    ("C", 1): (3, 3, 1, 1), ("C", 2): (4, 2, 2), ("C", 3): (3, 2, 2, 1), ("C", 4): (4, 3, 1),
}
_SHAPE_FAMILY = {"A": "A", "B": "A", "C": "C", "D": "C"}


def template(kind: str, beta: int | None, j: int) -> DominoTableau:
    return TEMPLATES[(kind, beta if kind in ("A", "B") else None, j)]


def template_name(kind: str, beta: int | None, j: int) -> str:
    if kind in ("A", "B"):
        return f"{kind}_{'1' if beta == ALPHA1P else beta}^{j}"
    return f"{kind}^{j}"


def _expected_tau(lt: LeftType) -> set[int]:
    if lt.kind == "A":
        return {lt.beta, 3}
    if lt.kind == "B":
        return set(quad_others(lt.beta))
    return set(QUAD_BETAS) if lt.kind == TYPE_C else {3}


def _type_by_shape(t: DominoTableau) -> LeftType | None:
    tt = tau_tableau(t) & {1, 2, 3, 4}
    shape = shape_of(s for k in (1, 2, 3, 4) for s in t[k])
    for kind in ("A", "B", "C", "D"):
        betas = QUAD_BETAS if kind in ("A", "B") else (None,)
        for beta in betas:
            lt = LeftType(kind, beta)
            fam = _SHAPE_FAMILY[kind]
            if tt == _expected_tau(lt) and shape in {F_SHAPES[(fam, j)] for j in range(1, 5)}:
                return lt
    return None


def _validate_templates() -> None:
    for (kind, beta, j), t in TEMPLATES.items():
        if t.shape != F_SHAPES[(_SHAPE_FAMILY[kind], j)]:
            raise AssertionError(f"template {template_name(kind, beta, j)} has the wrong shape")
        if _type_by_shape(t) != LeftType(kind, beta):
            raise AssertionError(f"template {template_name(kind, beta, j)} has the wrong type")


_validate_templates()


def classify_type_tableau(t: DominoTableau | TableauPair, side: str = "L") -> LeftType | None:
    if isinstance(t, TableauPair):
        t = _side_tableau(side, t)
    if not {1, 2, 3, 4} <= set(t.labels):
        raise DomainError("quadruple types need labels 1..4")
    return _type_by_shape(t)


def template_index(t: DominoTableau, lt: LeftType) -> int:
    """The ``j`` with the rank-4 template of type ``lt`` inside ``t``."""
    head = t.restrict(4)
    for j in range(1, 5):
        if template(lt.kind, lt.beta, j) == head:
            return j
    raise DomainError(f"no template of type {lt} inside the tableau")


REPLACEABLE = {("C", "B"), ("B", "C"), ("D", "A"), ("A", "D")}


def replace(x: DominoTableau, y: DominoTableau, t: DominoTableau) -> DominoTableau:
    """``Re(X, Y; T)``: swap the rank-4 sub-tableau ``X`` of ``t`` for ``Y``."""
    if t.restrict(4) != x:
        raise DomainError("the template is not contained in the tableau")
    out = t.replace(dict(y.items()), check=False)
    if not is_standard(out):
        raise AssertionError("replacement produced a non-standard tableau")
    return out


def replace_named(src: tuple[str, int | None, int], dst: tuple[str, int | None, int],
                  t: DominoTableau) -> DominoTableau:
    (k1, b1, j1), (k2, b2, j2) = src, dst
    if (k1, k2) not in REPLACEABLE or j1 != j2 or j1 not in (1, 2):
        raise DomainError("templates do not form a replaceable pair")
    return replace(template(k1, b1, j1), template(k2, b2, j2), t)


# ------------------------------------------------- quadruple operators

@dataclass(frozen=True)
class _QuadPlan:
    """How a quadruple operator treats each template index ``j``."""

    src: LeftType
    dst: LeftType
    equal_nh: frozenset[int]   # indices j in {1, 2} with matching n_h
    pivot: int                 # the k in {1, 2} with differing n_h
    route: dict                # j in {3, 4} -> label l whose cycle leads to index k


@lru_cache(maxsize=None)
def _plan(kind: str, beta: int) -> _QuadPlan:
    src, dst = quad_types(kind, beta)
    same = frozenset(j for j in (1, 2)
                     if template(src.kind, src.beta, j).n_h == template(dst.kind, dst.beta, j).n_h)
    (pivot,) = {1, 2} - same
    route = {}
    for j in (3, 4):
        x = template(src.kind, src.beta, j)
        for l in (3, 4):
            if move_through(x, cycle_of(l, x)) == template(src.kind, src.beta, pivot):
                route[j] = l
        if j not in route:
            raise AssertionError(f"no cycle leads from index {j} to index {pivot}")
    return _QuadPlan(src, dst, same, pivot, route)


def _quad_left(pair: TableauPair, kind: str, beta: int) -> set[TableauPair]:
    plan = _plan(normalize_kind(kind), beta)
    t1, t2 = pair.left, pair.right
    if classify_type_tableau(t1) != plan.src:
        raise DomainError(f"pair is not of left type {plan.src}")
    j = template_index(t1, plan.src)
    src = lambda i: template(plan.src.kind, plan.src.beta, i)  # noqa: E731
    dst = lambda i: template(plan.dst.kind, plan.dst.beta, i)  # noqa: E731
    if j in (1, 2):
        base = TableauPair(replace(src(j), dst(j), t1), t2)
        c3: ExtendedCycle = extended_cycle(3, "L", base)
        c4: ExtendedCycle = extended_cycle(4, "L", base)
        linked = 4 in extended_cycle(3, "L", pair).labels
        if linked:
            if j in plan.equal_nh:
                out = {base, move_through_extended(base, [c3, c4])}
            else:
                out = {move_through_extended(base, c3), move_through_extended(base, c4)}
        else:
            out = {base} if j in plan.equal_nh else {move_through_extended(base, c3)}
    else:
        moved = move_through_extended(pair, extended_cycle(plan.route[j], "L", pair))
        k = plan.pivot
        out = {TableauPair(replace(src(k), dst(k), moved.left), moved.right)}
    for p in out:
        if classify_type_tableau(p.left) != plan.dst:
            raise AssertionError(f"quadruple operator left type {plan.dst}")
    return out


def t_quad_pair(side: str, kind: str, beta: int, pair: TableauPair) -> set[TableauPair]:
    if side == "L":
        return _quad_left(pair, kind, beta)
    if side == "R":
        return _on_right(_quad_left, pair, kind, beta)
    raise ValueError(f"side must be 'L' or 'R', got {side!r}")


def _move_if_closed(t: DominoTableau, c) -> DominoTableau:
    return t if c.is_open else move_through(t, c)


def t_special(side: str, kind: str, beta: int, t: DominoTableau) -> set[DominoTableau]:
    """A quadruple operator on a single tableau of special shape.

    Open cycles are invisible after projecting to special shape, so only the
    closed cycles through 3 and 4 are ever moved through.  The side only says
    which tableau of a pair ``t`` was taken from.
    """
    if side not in ("L", "R"):
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    if not is_special_shape(t.shape):
        raise DomainError("tableau shape is not special")
    plan = _plan(normalize_kind(kind), beta)
    if classify_type_tableau(t) != plan.src:
        raise DomainError(f"tableau is not of type {plan.src}")
    x = lambda i: template(plan.src.kind, plan.src.beta, i)  # noqa: E731
    y = lambda i: template(plan.dst.kind, plan.dst.beta, i)  # noqa: E731
    j = template_index(t, plan.src)
    if j in (3, 4):
        landings = {}
        for label in (3, 4):
            c = cycle_of(label, t)
            if not c.is_open:
                moved = move_through(t, c)
                landings[template_index(moved, plan.src)] = moved
        if len(landings) > 1:
            landings = {plan.pivot: landings[plan.pivot]}
        ((k, moved),) = landings.items()
        return {replace(x(k), y(k), moved)}
    base = replace(x(j), y(j), t)
    c3, c4 = cycle_of(3, base), cycle_of(4, base)
    if j in plan.equal_nh:
        if c3 == c4:
            return {base}
        return {base, _move_if_closed(_move_if_closed(base, c3), c4)}
    return {_move_if_closed(base, c3), _move_if_closed(base, c4)}


__all__ = [
    "H1", "H2", "TEMPLATES", "F_SHAPES", "REPLACEABLE", "tau_tableau", "tau_pair",
    "in_domain_tableau", "t_wall_pair", "template", "template_name",
    "classify_type_tableau", "template_index", "replace", "replace_named", "t_quad_pair",
    "t_special",
]
