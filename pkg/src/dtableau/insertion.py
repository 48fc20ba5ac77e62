"""
Domino insertion and the Robinson-Schensted map for signed sequences.

Inserting ``(v, +1)`` drops a horizontal domino labelled ``v`` at the end of
the first row of the sub-tableau of labels ``< v``; ``(v, -1)`` drops a
vertical one at the bottom of the first column.  Larger labels are then
revisited in increasing order.  With ``Q`` the two squares most recently
added to the running shape, each domino ``D(u)`` either

* misses ``Q`` and stays put,
* coincides with ``Q`` and is bumped: a horizontal domino to the end of the
  next row, a vertical one to the bottom of the next column, or
* meets ``Q`` in one square and twists into the remaining square of the 2x2
  block spanned by ``Q`` and ``D(u)``.

The squares by which the final shape grew form the returned position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .signed_perms import Triple, TripleSequence
from .tableaux import (
    HORIZONTAL,
    DominoTableau,
    Position,
    Square,
    TableauError,
    horizontal,
    orientation,
    position,
    vertical,
)


class InsertionError(ValueError):
    pass


@dataclass(frozen=True)
class TableauPair:
    left: DominoTableau
    right: DominoTableau

    def __post_init__(self):
        if self.left.squares != self.right.squares:
            raise TableauError("pair tableaux have different shapes")

    @property
    def shape(self):
        return self.left.shape

    @property
    def n_h(self) -> int:
        return self.left.n_h + self.right.n_h

    @property
    def n_v(self) -> int:
        return self.left.n_v + self.right.n_v

    @property
    def parity(self) -> int:
        """0 for the class with ``n_v = 0 mod 4``, 1 for ``n_v = 2 mod 4``."""
        return (self.n_v % 4) // 2

    def swap(self) -> "TableauPair":
        return TableauPair(self.right, self.left)

    def transpose(self) -> "TableauPair":
        return TableauPair(self.left.transpose(), self.right.transpose())

    def __lt__(self, other: "TableauPair") -> bool:
        return (self.left, self.right) < (other.left, other.right)


def _row_end(cells: set[Square], row: int) -> int:
    return max((c for r, c in cells if r == row), default=0)


def _col_end(cells: set[Square], col: int) -> int:
    return max((r for r, c in cells if c == col), default=0)


def _block_fourth(a: Position, b: Position) -> Square:
    """Fourth square of the 2x2 block spanned by two perpendicular dominoes."""
    sq = set(a) | set(b)
    rows = {s[0] for s in sq}
    cols = {s[1] for s in sq}
    (missing,) = {(r, c) for r in rows for c in cols} - sq
    return missing


def _check_bookkeeping(before: DominoTableau, after: DominoTableau,
                       p: Position, eps: int) -> None:
    dh, dv = after.n_h - before.n_h, after.n_v - before.n_v
    horiz = orientation(p) == HORIZONTAL
    allowed = {
        (1, True): (1, 0), (1, False): (2, -1),
        (-1, True): (-1, 2), (-1, False): (0, 1),
    }[(eps, horiz)]
    if (dh, dv) != allowed:
        raise AssertionError(
            f"insertion bookkeeping violated: eps={eps}, P={p}, dn_h={dh}, dn_v={dv}")


def insert_step(t: DominoTableau, v: int, eps: int) -> tuple[DominoTableau, Position]:
    """Insert label ``v`` with sign ``eps``; return the new tableau and the
    position by which the shape grew."""
    if v in t:
        raise InsertionError(f"label {v} already present")
    if eps not in (1, -1):
        raise InsertionError(f"sign must be +1 or -1, got {eps}")
    smaller = {k: p for k, p in t.items() if k < v}
    cells = {s for p in smaller.values() for s in p}
    if eps == 1:
        q = horizontal(1, _row_end(cells, 1) + 1)
    else:
        q = vertical(_col_end(cells, 1) + 1, 1)
    new = dict(smaller)
    new[v] = q
    cells |= set(q)
    for u in sorted(k for k in t.labels if k > v):
        d = t[u]
        common = set(d) & set(q)
        if not common:
            new[u] = d
        elif set(d) == set(q):
            if orientation(d) == HORIZONTAL:
                r = d[0][0] + 1
                nd = horizontal(r, _row_end(cells, r) + 1)
            else:
                c = d[0][1] + 1
                nd = vertical(_col_end(cells, c) + 1, c)
            new[u] = nd
            q = nd
        else:
            fourth = _block_fourth(d, q)
            (keep,) = set(d) - set(q)
            nd = position(keep, fourth)
            (left_over,) = set(q) - set(d)
            new[u] = nd
            q = position(left_over, fourth)
        cells |= set(new[u])
    out = DominoTableau(new, check=False)
    _check_bookkeeping(t, out, q, eps)
    return out, q


def remove_step(t: DominoTableau, p: Position) -> tuple[DominoTableau, int, int]:
    """Undo an insertion whose shape growth was ``p``.

    Returns the smaller tableau together with the inserted label and sign.
    """
    p = position(*p)
    cells = set(t.squares)
    if not set(p) <= cells:
        raise InsertionError(f"position {p} is not in the tableau")
    old: dict[int, Position] = {}
    q = p
    for u in sorted(t.labels, reverse=True):
        d = t[u]
        below = {s for k, pos in t.items() if k < u for s in pos}
        common = set(d) & set(q)
        if not common:
            old[u] = d
            continue
        if set(d) == set(q):
            if orientation(d) == HORIZONTAL and d[0][0] == 1:
                eps = 1
            elif orientation(d) != HORIZONTAL and d[0][1] == 1:
                eps = -1
            else:
                if orientation(d) == HORIZONTAL:
                    r = d[0][0] - 1
                    end = _row_end(below, r)
                    q = horizontal(r, end - 1)
                else:
                    c = d[0][1] - 1
                    end = _col_end(below, c)
                    q = vertical(end - 1, c)
                old[u] = q
                continue
            rest = {k: pos for k, pos in t.items() if k < u}
            rest.update(old)
            return DominoTableau(rest, check=False), u, eps
        # undo a twist: the square both used to share is the block's gap
        fourth = _block_fourth(d, q)
        (keep,) = set(d) - set(q)
        (left_over,) = set(q) - set(d)
        old[u] = position(keep, fourth)
        q = position(left_over, fourth)
    raise InsertionError(f"position {p} does not undo any insertion")


def rs_map(gamma: TripleSequence) -> TableauPair:
    """The domino Robinson-Schensted map ``A``.

    Triples are processed in increasing second coordinate; the left tableau
    inserts the first coordinate with its sign, the right tableau records the
    second coordinate on the squares the shape grew by.
    """
    left = DominoTableau({}, check=False)
    right: dict[int, Position] = {}
    for tr in sorted(gamma.triples, key=lambda x: x.g):
        left, p = insert_step(left, tr.e, tr.eps)
        right[tr.g] = p
    return TableauPair(left, DominoTableau(right, check=False))


def inverse_rs(pair: TableauPair) -> TripleSequence:
    left, right = pair.left, pair.right
    if left.squares != right.squares:
        raise InsertionError("pair tableaux have different shapes")
    triples = []
    for g in sorted(right.labels, reverse=True):
        left, e, eps = remove_step(left, right[g])
        right = right.without([g])
        triples.append(Triple(e, g, eps))
    return TripleSequence(triples)


__all__ = [
    "InsertionError", "TableauPair", "insert_step", "remove_step", "rs_map",
    "inverse_rs",
]
