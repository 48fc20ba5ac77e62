"""
Domino tableaux on the type D grid.

Squares are ``(row, col)`` pairs, 1-indexed, with row 1 at the top.  A domino
position is a sorted pair of edge-adjacent squares.  A tableau maps labels to
positions; it is standard when, for every label ``k``, the squares carrying
labels ``<= k`` form a Young diagram.

The D grid marks a square *fixed* when ``row + col`` is even.  Every domino
covers exactly one fixed square.  Fixed squares come in two flavours, ``Y``
(both coordinates odd) and ``Z`` (both even); the variable squares are ``X``
(even row, odd column) and ``W`` (odd row, even column).  The plane is cut
into 2x2 blocks with rows ``{2a-1, 2a}`` and columns ``{2b, 2b+1}``; each
block holds one ``Y`` in its top-right corner and one ``Z`` in its
bottom-left corner.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

Square = tuple[int, int]
Position = tuple[Square, Square]
Shape = tuple[int, ...]

HORIZONTAL = "h"
VERTICAL = "v"


class TableauError(ValueError):
    """Raised for malformed tableaux, shapes and positions."""


# ---------------------------------------------------------------------------
# squares and positions


def position(a: Square, b: Square) -> Position:
    """Return the normalized domino position covering ``a`` and ``b``."""
    a, b = (a, b) if a <= b else (b, a)
    dr, dc = b[0] - a[0], b[1] - a[1]
    if (dr, dc) not in ((0, 1), (1, 0)):
        raise TableauError(f"squares {a} and {b} are not edge-adjacent")
    return (a, b)


def orientation(p: Position) -> str:
    return HORIZONTAL if p[0][0] == p[1][0] else VERTICAL


def horizontal(row: int, col: int) -> Position:
    """The horizontal position whose left square is ``(row, col)``."""
    return ((row, col), (row, col + 1))


def vertical(row: int, col: int) -> Position:
    """The vertical position whose top square is ``(row, col)``."""
    return ((row, col), (row + 1, col))


def grid_label(s: Square) -> str:
    r, c = s
    if r % 2 and c % 2:
        return "Y"
    if r % 2 == 0 and c % 2 == 0:
        return "Z"
    return "X" if r % 2 == 0 else "W"


def is_fixed(s: Square) -> bool:
    return (s[0] + s[1]) % 2 == 0


def fixed_square(p: Position) -> Square:
    return p[0] if is_fixed(p[0]) else p[1]


def box(s: Square) -> frozenset[Square]:
    """The 2x2 block attached to the fixed square ``s``."""
    r, c = s
    if grid_label(s) == "Y":
        rows, cols = (r, r + 1), (c - 1, c)
    elif grid_label(s) == "Z":
        rows, cols = (r - 1, r), (c, c + 1)
    else:
        raise TableauError(f"{s} is not a fixed square")
    return frozenset((i, j) for i in rows for j in cols)


def is_boxed(p: Position) -> bool:
    return set(p) <= box(fixed_square(p))


def transpose_square(s: Square) -> Square:
    return (s[1], s[0])


# ---------------------------------------------------------------------------
# shapes


def shape_of(squares: Iterable[Square]) -> Shape:
    """Row lengths of a set of squares; raises if it is not a Young diagram."""
    cells = set(squares)
    rows: dict[int, int] = {}
    for r, c in cells:
        rows[r] = max(rows.get(r, 0), c)
    lengths = [rows.get(i, 0) for i in range(1, max(rows, default=0) + 1)]
    if sum(lengths) != len(cells) or any(
        lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)
    ):
        raise TableauError("squares do not form a Young diagram")
    return tuple(lengths)


def is_young(squares: Iterable[Square]) -> bool:
    try:
        shape_of(squares)
    except TableauError:
        return False
    return True


def shape_squares(shape: Shape) -> frozenset[Square]:
    return frozenset((i + 1, j + 1) for i, n in enumerate(shape) for j in range(n))


def conjugate(shape: Shape) -> Shape:
    if not shape:
        return ()
    return tuple(sum(1 for r in shape if r > j) for j in range(shape[0]))


def parse_shape(text: str) -> Shape:
    """Parse ``"5,2,2,1"`` (or the compact ``"5221"`` for one-digit parts)."""
    text = text.strip()
    if "," in text:
        parts = tuple(int(t) for t in text.split(",") if t.strip())
    else:
        parts = tuple(int(ch) for ch in text)
    if any(p <= 0 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise TableauError(f"not a partition: {text!r}")
    return parts


def format_shape(shape: Shape) -> str:
    return ",".join(str(r) for r in shape)


def outer_corners(shape: Shape) -> list[Square]:
    """Squares that can be added to ``shape`` keeping it a Young diagram."""
    out = []
    rows = list(shape) + [0]
    for i, n in enumerate(rows):
        if i == 0 or rows[i - 1] > n:
            out.append((i + 1, n + 1))
    return out


def removable_positions(shape: Shape) -> list[Position]:
    """Domino positions whose removal leaves a Young diagram."""
    cells = shape_squares(shape)
    cands = [horizontal(i + 1, n - 1) for i, n in enumerate(shape) if n >= 2]
    cands += [vertical(m - 1, j + 1) for j, m in enumerate(conjugate(shape)) if m >= 2]
    return sorted(p for p in cands if is_young(cells - set(p)))


@lru_cache(maxsize=None)
def domino_shapes(rank: int) -> tuple[Shape, ...]:
    """All shapes of size ``2 * rank`` that carry a standard domino tableau."""
    shapes = {()}
    for _ in range(rank):
        nxt = set()
        for sh in shapes:
            cells = shape_squares(sh)
            for p in addable_positions(sh):
                nxt.add(shape_of(cells | set(p)))
        shapes = nxt
    return tuple(sorted(shapes, reverse=True))


def addable_positions(shape: Shape) -> list[Position]:
    """Domino positions that can be added to ``shape``."""
    cells = shape_squares(shape)
    out = []
    rows = list(shape) + [0, 0]
    for i in range(len(shape) + 1):
        r, n = i + 1, rows[i]
        p = horizontal(r, n + 1)
        if is_young(cells | set(p)):
            out.append(p)
        p = vertical(r, n + 1)
        if is_young(cells | set(p)):
            out.append(p)
    return sorted(set(out))


def count_tilings(shape: Shape) -> int:
    """Number of domino tilings of a Young diagram."""

    @lru_cache(maxsize=None)
    def go(rest: frozenset[Square]) -> int:
        if not rest:
            return 1
        r, c = min(rest)
        total = 0
        for other in ((r, c + 1), (r + 1, c)):
            if other in rest:
                total += go(rest - {(r, c), other})
        return total

    return go(shape_squares(shape))


def diagonal_hooks(shape: Shape) -> list[tuple[int, int, int]]:
    """Frobenius hooks as ``(k, arm_end_col, leg_end_row)`` for k = 1, 2, ..."""
    conj = conjugate(shape)
    hooks = []
    k = 1
    while k <= len(shape) and shape[k - 1] >= k:
        hooks.append((k, shape[k - 1], conj[k - 1]))
        k += 1
    return hooks


def is_nested_type(shape: Shape) -> bool:
    """Union of strictly nested even hooks, each set back an odd distance."""
    hooks = diagonal_hooks(shape)
    for k, arm, leg in hooks:
        if (arm - k + leg - k + 1) % 2:
            return False
    for (_, arm0, leg0), (_, arm1, leg1) in zip(hooks, hooks[1:]):
        if (arm0 - arm1) % 2 == 0 or (leg0 - leg1) % 2 == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# tableaux


class DominoTableau:
    """An immutable standard domino tableau: a map label -> position."""

    __slots__ = ("_pos", "_cell", "_key", "_hash")

    def __init__(self, placement: Mapping[int, Iterable[Square]] | None = None,
                 *, check: bool = True):
        pos: dict[int, Position] = {}
        for k, sq in (placement or {}).items():
            a, b = tuple(sq)
            pos[int(k)] = position(tuple(a), tuple(b))
        cell: dict[Square, int] = {}
        for k, p in pos.items():
            for s in p:
                if s in cell:
                    raise TableauError(f"square {s} covered by {cell[s]} and {k}")
                cell[s] = k
        self._pos = pos
        self._cell = cell
        self._key = tuple(sorted(pos.items()))
        self._hash = hash(self._key)
        if check:
            validate(self)

    # -- mapping-ish access
    def __getitem__(self, k: int) -> Position:
        return self._pos[k]

    def __contains__(self, k: object) -> bool:
        return k in self._pos

    def __len__(self) -> int:
        return len(self._pos)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._pos))

    def items(self) -> list[tuple[int, Position]]:
        return list(self._key)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(self._pos))

    def label_at(self, s: Square) -> int | None:
        return self._cell.get(s)

    @property
    def squares(self) -> frozenset[Square]:
        return frozenset(self._cell)

    @property
    def shape(self) -> Shape:
        return shape_of(self._cell)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DominoTableau) and self._key == other._key

    def __lt__(self, other: "DominoTableau") -> bool:
        return self._key < other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {p[0]}{p[1]}" for k, p in self._key)
        return f"DominoTableau({{{body}}})"

    # -- statistics
    @property
    def n_h(self) -> int:
        return sum(1 for p in self._pos.values() if orientation(p) == HORIZONTAL)

    @property
    def n_v(self) -> int:
        return len(self._pos) - self.n_h

    # -- derived tableaux
    def replace(self, changes: Mapping[int, Position], *, check: bool = True
                ) -> "DominoTableau":
        pos = dict(self._pos)
        pos.update(changes)
        return DominoTableau(pos, check=check)

    def without(self, labels: Iterable[int]) -> "DominoTableau":
        drop = set(labels)
        return DominoTableau({k: p for k, p in self._pos.items() if k not in drop},
                             check=False)

    def restrict(self, upto: int) -> "DominoTableau":
        return DominoTableau({k: p for k, p in self._pos.items() if k <= upto},
                             check=False)

    def transpose(self) -> "DominoTableau":
        return DominoTableau(
            {k: (transpose_square(a), transpose_square(b)) for k, (a, b) in self._key},
            check=False)

    def interchange(self, i: int, j: int) -> "DominoTableau":
        """Swap the labels ``i`` and ``j`` (unchecked)."""
        pos = dict(self._pos)
        pos[i], pos[j] = self._pos[j], self._pos[i]
        return DominoTableau(pos, check=False)


def validate(t: DominoTableau) -> None:
    """Raise ``TableauError`` unless ``t`` is a standard domino tableau."""
    covered: set[Square] = set()
    for k, p in t.items():
        for s in p:
            if s[0] < 1 or s[1] < 1:
                raise TableauError(f"label {k} lies outside the quadrant")
        covered |= set(p)
        if not is_young(covered):
            raise TableauError(f"labels <= {k} do not form a Young diagram")


def is_standard(t: DominoTableau) -> bool:
    try:
        validate(t)
    except TableauError:
        return False
    return True


def relabel(t: DominoTableau, mapping: Mapping[int, int]) -> DominoTableau:
    return DominoTableau({mapping.get(k, k): p for k, p in t.items()}, check=False)


@lru_cache(maxsize=None)
def tableaux_of_shape(shape: Shape) -> tuple[DominoTableau, ...]:
    """All standard domino tableaux of ``shape`` with labels ``1..|shape|/2``."""
    size = sum(shape)
    if size % 2:
        return ()
    n = size // 2
    if n == 0:
        return (DominoTableau({}),)
    cells = shape_squares(shape)
    out = []
    for p in removable_positions(shape):
        rest = shape_of(cells - set(p))
        for sub in tableaux_of_shape(rest):
            out.append(DominoTableau(dict(sub.items()) | {n: p}, check=False))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def all_tableaux(rank: int) -> tuple[DominoTableau, ...]:
    out: list[DominoTableau] = []
    for sh in domino_shapes(rank):
        out.extend(tableaux_of_shape(sh))
    return tuple(out)


def extremal_positions(t: DominoTableau) -> list[Position]:
    """Positions ``P`` with ``Shape(t) \\ P`` proper (a shape carrying a tableau)."""
    sh = t.shape
    rank = len(t) - 1
    proper = set(domino_shapes(rank)) if rank >= 0 else set()
    cells = shape_squares(sh)
    out = []
    for p in removable_positions(sh):
        rest = shape_of(cells - set(p))
        if rest in proper:
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# text forms


def format_tableau(t: DominoTableau) -> str:
    """One line per label: ``k r1 c1 r2 c2``."""
    return "\n".join(f"{k} {a[0]} {a[1]} {b[0]} {b[1]}" for k, (a, b) in t.items())


def parse_tableau(text: str) -> DominoTableau:
    placement = {}
    for lineno, line in enumerate(text.strip().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise TableauError(f"line {lineno}: expected 'k r1 c1 r2 c2'")
        k, r1, c1, r2, c2 = (int(x) for x in parts)
        if k in placement:
            raise TableauError(f"line {lineno}: duplicate label {k}")
        placement[k] = ((r1, c1), (r2, c2))
    return DominoTableau(placement)


def render(t: DominoTableau) -> str:
    """ASCII grid of labels; each label appears on both of its squares."""
    if not len(t):
        return "(empty)"
    sh = t.shape
    width = len(str(max(t.labels)))
    lines = []
    for i, n in enumerate(sh):
        lines.append(" ".join(str(t.label_at((i + 1, j + 1))).rjust(width)
                              for j in range(n)))
    return "\n".join(lines)
