"""
Cycles, moving through, extended cycles and special shapes.

Every domino shares its fixed square with exactly one other candidate
position, its *alternate position* ``P'(k, T)``.  A cycle is a minimal label
set that can be moved to alternate positions simultaneously.  Moving through
an open cycle trades one square of the shape (the back square ``S_b``) for
another (the forward square ``S_f``); a closed cycle leaves the shape alone.

For a pair ``(T1, T2)`` of equal shape, open cycles on the two sides are
chained together through shared back and forward squares.  The resulting
*extended cycles* can be moved on both sides at once without breaking the
equal-shape condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .insertion import TableauPair
from .tableaux import (
    DominoTableau,
    Position,
    Shape,
    Square,
    TableauError,
    domino_shapes,
    fixed_square,
    grid_label,
    position,
    shape_squares,
    tableaux_of_shape,
    validate,
)

UP, DOWN = "up", "down"
_NEG_INF = float("-inf")
_POS_INF = float("inf")


class CycleError(ValueError):
    pass


def _label_or_bound(t: DominoTableau, s: Square) -> float:
    if s[0] < 1 or s[1] < 1:
        return _NEG_INF
    k = t.label_at(s)
    return _POS_INF if k is None else k


def alternate_position(k: int, t: DominoTableau) -> Position:
    """The alternate position ``P'(k, T)``.

    The four neighbours of the fixed square ``F = (i, j)`` of ``P(k)`` split
    into the pair above/right, watched over by the diagonal square
    ``(i-1, j+1)``, and the pair left/below, watched over by ``(i+1, j-1)``.
    The alternate position uses the pair that does not hold the current
    variable square.  Inside that pair it takes the member above or to the
    left of the diagonal square when that square carries a larger label
    (or lies outside the tableau), and the other member otherwise.
    """
    p = t[k]
    i, j = fixed_square(p)
    (var,) = set(p) - {(i, j)}
    if var in ((i - 1, j), (i, j + 1)):
        diag = (i + 1, j - 1)
        first, second = (i, j - 1), (i + 1, j)
    else:
        diag = (i - 1, j + 1)
        first, second = (i - 1, j), (i, j + 1)
    pick = first if _label_or_bound(t, diag) > k else second
    return position((i, j), pick)


@dataclass(frozen=True)
class Cycle:
    labels: frozenset[int]
    is_open: bool
    back: Square | None = None
    forward: Square | None = None

    @property
    def sense(self) -> str | None:
        if not self.is_open:
            return None
        return UP if self.forward[0] < self.back[0] else DOWN

    @property
    def squares(self) -> frozenset[Square]:
        return frozenset((self.back, self.forward)) if self.is_open else frozenset()

    def __lt__(self, other: "Cycle") -> bool:
        return min(self.labels) < min(other.labels)


def _alternates(t: DominoTableau) -> dict[int, Position]:
    return {k: alternate_position(k, t) for k in t.labels}


def _cycle_labels(k: int, t: DominoTableau, alt: dict[int, Position]) -> frozenset[int]:
    seen = {k}
    pending = [k]
    while pending:
        l = pending.pop()
        touched = {t.label_at(s) for s in alt[l]}
        touched |= {m for m in t.labels if set(alt[m]) & set(t[l])}
        for m in touched:
            if m is not None and m not in seen:
                seen.add(m)
                pending.append(m)
    return frozenset(seen)


def _make_cycle(labels: frozenset[int], t: DominoTableau,
                alt: dict[int, Position]) -> Cycle:
    old = {s for k in labels for s in t[k]}
    new = {s for k in labels for s in alt[k]}
    gone, came = old - new, new - old
    if not gone:
        return Cycle(labels, False)
    if len(gone) != 1 or len(came) != 1:
        raise AssertionError(f"cycle {sorted(labels)} moves {len(gone)} squares")
    (b,), (f,) = gone, came
    if b[0] == f[0]:
        raise AssertionError("open cycle with back and forward square in one row")
    return Cycle(labels, True, b, f)


def cycle(k: int, t: DominoTableau) -> Cycle:
    if k not in t:
        raise CycleError(f"label {k} is not in the tableau")
    alt = _alternates(t)
    return _make_cycle(_cycle_labels(k, t, alt), t, alt)


@lru_cache(maxsize=200_000)
def cycles(t: DominoTableau) -> tuple[Cycle, ...]:
    """All cycles of ``t``, ordered by smallest label."""
    alt = _alternates(t)
    out, seen = [], set()
    for k in t.labels:
        if k not in seen:
            c = _make_cycle(_cycle_labels(k, t, alt), t, alt)
            seen |= c.labels
            out.append(c)
    return tuple(out)


def cycle_of(k: int, t: DominoTableau) -> Cycle:
    for c in cycles(t):
        if k in c.labels:
            return c
    raise CycleError(f"label {k} is not in the tableau")


def open_cycles(t: DominoTableau) -> tuple[Cycle, ...]:
    return tuple(c for c in cycles(t) if c.is_open)


def move_through(t: DominoTableau, c: Cycle | Iterable[int]) -> DominoTableau:
    """Place every label of ``c`` at its alternate position."""
    labels = c.labels if isinstance(c, Cycle) else frozenset(c)
    if not any(labels == x.labels for x in cycles(t)):
        raise CycleError(f"{sorted(labels)} is not a cycle of the tableau")
    alt = _alternates(t)
    out = t.replace({k: alt[k] for k in labels}, check=False)
    validate(out)
    return out


def move_through_many(t: DominoTableau, cs: Iterable[Cycle]) -> DominoTableau:
    """Move through several disjoint cycles of ``t`` simultaneously."""
    cs = list(cs)
    own = cycles(t)
    for c in cs:
        if c not in own:
            raise CycleError(f"{sorted(c.labels)} is not a cycle of the tableau")
    alt = _alternates(t)
    out = t.replace({k: alt[k] for c in cs for k in c.labels}, check=False)
    validate(out)
    return out


def in_oc_star(c: Cycle) -> bool:
    """Open cycles that never vacate ``S_{1,1}``.  On the D grid ``S_{1,1}``
    is a fixed square, so this holds for every open cycle."""
    return c.is_open and c.back != (1, 1)


# ------------------------------------------------------------ extended cycles

@dataclass(frozen=True)
class ExtendedCycle:
    """A union of cycles on one side of a pair together with its mirror."""

    side: str
    constituents: tuple[Cycle, ...]
    mirror: tuple[Cycle, ...]

    @property
    def labels(self) -> frozenset[int]:
        return frozenset().union(*(c.labels for c in self.constituents))

    @property
    def mirror_labels(self) -> frozenset[int]:
        return frozenset().union(*(c.labels for c in self.mirror))

    @property
    def is_closed(self) -> bool:
        return len(self.constituents) == 1 and not self.constituents[0].is_open

    @property
    def squares(self) -> frozenset[Square]:
        return frozenset().union(*(c.squares for c in self.constituents))

    @property
    def n_u(self) -> int:
        return sum(1 for c in self.constituents if c.sense == UP)

    @property
    def n_d(self) -> int:
        return sum(1 for c in self.constituents if c.sense == DOWN)

    @property
    def mirror_n_u(self) -> int:
        return sum(1 for c in self.mirror if c.sense == UP)

    @property
    def mirror_n_d(self) -> int:
        return sum(1 for c in self.mirror if c.sense == DOWN)

    def flipped(self) -> "ExtendedCycle":
        other = "R" if self.side == "L" else "L"
        return ExtendedCycle(other, self.mirror, self.constituents)


def _sides(pair: TableauPair, side: str) -> tuple[DominoTableau, DominoTableau]:
    if side == "L":
        return pair.left, pair.right
    if side == "R":
        return pair.right, pair.left
    raise ValueError(f"side must be 'L' or 'R', got {side!r}")


def extended_cycle(k: int, side: str, pair: TableauPair) -> ExtendedCycle:
    """``ec(k, T1; T2)`` for ``side="L"`` or ``ec(k, T2; T1)`` for ``"R"``."""
    mine, theirs = _sides(pair, side)
    start = cycle_of(k, mine)
    if not start.is_open:
        return ExtendedCycle(side, (start,), ())
    own = [c for c in open_cycles(mine)]
    other = [c for c in open_cycles(theirs)]
    got_own, got_other = {start}, set()
    squares = set(start.squares)
    grew = True
    while grew:
        grew = False
        for c in other:
            if c not in got_other and c.squares & squares:
                got_other.add(c)
                squares |= c.squares
                grew = True
        for c in own:
            if c not in got_own and c.squares & squares:
                got_own.add(c)
                squares |= c.squares
                grew = True
    return ExtendedCycle(side, tuple(sorted(got_own)), tuple(sorted(got_other)))


def extended_cycles(side: str, pair: TableauPair) -> list[ExtendedCycle]:
    mine, _ = _sides(pair, side)
    out, seen = [], set()
    for k in mine.labels:
        if k not in seen:
            ec = extended_cycle(k, side, pair)
            seen |= ec.labels
            out.append(ec)
    return out


def move_through_extended(pair: TableauPair, ecs: ExtendedCycle | Iterable[ExtendedCycle],
                          side: str | None = None) -> TableauPair:
    """``E(pair; U, side)``: move through one or several extended cycles."""
    if isinstance(ecs, ExtendedCycle):
        ecs = [ecs]
    ecs = list(ecs)
    if not ecs:
        return pair
    side = side or ecs[0].side
    if any(e.side != side for e in ecs):
        raise CycleError("extended cycles taken on different sides")
    mine, theirs = _sides(pair, side)
    new_mine = move_through_many(mine, [c for e in ecs for c in e.constituents])
    new_theirs = move_through_many(theirs, [c for e in ecs for c in e.mirror])
    if new_mine.squares != new_theirs.squares:
        raise CycleError("moving through did not preserve equal shapes")
    return TableauPair(new_mine, new_theirs) if side == "L" else TableauPair(new_theirs, new_mine)


def classify_extended(ec: ExtendedCycle, pair: TableauPair | None = None) -> str:
    """``"up"`` or ``"down"``.

    A closed cycle counts as up when moving through it makes more squares
    horizontal; this needs the tableau, supplied through ``pair``.
    """
    if ec.is_closed:
        if pair is None:
            raise CycleError("closed cycles need the pair to classify")
        mine, _ = _sides(pair, ec.side)
        moved = move_through(mine, ec.constituents[0])
        return UP if moved.n_h > mine.n_h else DOWN
    up = ec.n_u + ec.mirror_n_u
    down = ec.n_d + ec.mirror_n_d
    if up == down + 2:
        return UP
    if up == down - 2:
        return DOWN
    raise AssertionError(f"extended cycle breaks the +-2 dichotomy: {up} up, {down} down")


# ------------------------------------------------------------ special shapes

def shape_after(shape_cells: frozenset[Square], c: Cycle) -> frozenset[Square]:
    return (shape_cells - {c.back}) | {c.forward}


def open_orbit(t: DominoTableau) -> set[DominoTableau]:
    """Every tableau reachable from ``t`` by moving through open cycles."""
    seen = {t}
    pending = [t]
    while pending:
        x = pending.pop()
        for c in open_cycles(x):
            y = move_through(x, c)
            if y not in seen:
                seen.add(y)
                pending.append(y)
    return seen


def shape_corners(shape: Shape) -> list[Square]:
    """Squares of the shape with nothing to their right or below."""
    cells = shape_squares(shape)
    return sorted((r, c) for r, c in cells if (r + 1, c) not in cells and (r, c + 1) not in cells)


def is_special_shape(shape: Shape) -> bool:
    """A shape is special when none of its corners is a ``W`` square (odd
    row, even column)."""
    return all(grid_label(s) != "W" for s in shape_corners(tuple(shape)))


def has_special_cycles(t: DominoTableau) -> bool:
    """Every open cycle of ``t`` gives up an ``X`` square.  This agrees with
    :func:`is_special_shape` and serves as a tableau-level cross-check."""
    return all(grid_label(c.back) == "X" for c in open_cycles(t))


def special_table(rank: int) -> dict[Shape, bool]:
    """Specialness of every shape of the given rank, checked against the
    cycle criterion on every tableau of each shape."""
    out = {}
    for shape in domino_shapes(rank):
        verdict = is_special_shape(shape)
        for t in tableaux_of_shape(shape):
            if has_special_cycles(t) != verdict:
                raise AssertionError(f"special criteria disagree on {shape}")
        out[shape] = verdict
    return out


def special_census(rank: int) -> dict[Shape, int]:
    """Number of tableaux of each special shape of the given rank."""
    return {s: len(tableaux_of_shape(s)) for s in domino_shapes(rank) if is_special_shape(s)}


def _toward_special(cs: Iterable[Cycle]) -> list[Cycle]:
    return [c for c in cs if grid_label(c.back) != "X"]


def make_special(t: DominoTableau) -> DominoTableau:
    """``Ss(T)``: the member of the open-cycle orbit of ``t`` with special
    shape, reached by moving through cycles that give up ``W`` squares."""
    x = t
    for _ in range(len(t) + 2):
        pending = _toward_special(open_cycles(x))
        if not pending:
            return x
        x = move_through_many(x, pending)
    raise AssertionError("special normalization did not terminate")


def special_members(t: DominoTableau) -> list[DominoTableau]:
    return sorted(x for x in open_orbit(t) if is_special_shape(x.shape))


def make_special_pair(pair: TableauPair, side: str = "L") -> TableauPair:
    """Move through open extended cycles until the chosen side has special
    shape."""
    x = pair
    for _ in range(4 * len(pair.left) + 4):
        mine, _ = _sides(x, side)
        if is_special_shape(mine.shape):
            return x
        pending = [e for e in extended_cycles(side, x)
                if not e.is_closed and _toward_special(e.constituents)]
        if not pending:
            raise AssertionError("shape is not special but no cycle leads there")
        x = move_through_extended(x, pending[0])
    raise AssertionError("pair normalization did not terminate")


def same_special(t: DominoTableau, u: DominoTableau) -> bool:
    return make_special(t) == make_special(u)


__all__ = [
    "UP", "DOWN", "Cycle", "CycleError", "ExtendedCycle", "alternate_position",
    "cycle", "cycles", "cycle_of", "open_cycles", "move_through", "move_through_many",
    "in_oc_star", "extended_cycle", "extended_cycles", "move_through_extended",
    "classify_extended", "open_orbit", "shape_corners", "is_special_shape",
    "has_special_cycles", "special_table",
    "special_census", "make_special", "special_members", "make_special_pair",
    "same_special", "shape_after",
]
