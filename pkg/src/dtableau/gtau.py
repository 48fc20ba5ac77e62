"""
Operator sequences, the generalized tau-invariant and the classification map.

A length-one step is either a wall crossing ``(a, b)`` between adjacent roots
or a quadruple operator written ``(C, b)``, ``(D, b)``, ``(b, C)`` or
``(b, D)`` for an outer root ``b`` of the D4 diagram formed by roots 1..4.
Steps that do not apply to a pair yield no values rather than an error, so a
sequence applied to a pair outside its domain simply produces the empty set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Union

from .cycles import make_special
from .insertion import TableauPair, rs_map
from .operators import (
    classify_type_tableau,
    in_domain_tableau,
    t_quad_pair,
    t_wall_pair,
    tau_pair,
)
from .signed_perms import (
    QUAD_BETAS,
    SignedPermutation,
    adjacent,
    adjacent_pairs,
    all_signed_perms,
    delta,
    parse_root,
    quad_types,
    root_name,
)
from .tableaux import DominoTableau

Slot = Union[int, str]


@dataclass(frozen=True)
class Step:
    first: Slot
    second: Slot

    def __post_init__(self):
        a, b = self.first, self.second
        if isinstance(a, int) and isinstance(b, int):
            if not adjacent(a, b):
                raise ValueError(f"{root_name(a)} and {root_name(b)} are not adjacent")
            return
        letter, root = (a, b) if isinstance(a, str) else (b, a)
        if letter not in ("C", "D") or not isinstance(root, int) or root not in QUAD_BETAS:
            raise ValueError(f"malformed step {self}")

    @property
    def is_wall(self) -> bool:
        return isinstance(self.first, int) and isinstance(self.second, int)

    @property
    def quad_kind(self) -> str:
        """``Cβ``/``Dβ`` for steps out of B/A, ``βC``/``βD`` for steps out of C/D."""
        if isinstance(self.first, str):
            return f"{self.first}β"
        return f"β{self.second}"

    @property
    def beta(self) -> int:
        return self.second if isinstance(self.first, str) else self.first

    def __str__(self) -> str:
        show = lambda x: x if isinstance(x, str) else root_name(x)  # noqa: E731
        return f"{show(self.first)},{show(self.second)}"

    @classmethod
    def parse(cls, text: str) -> "Step":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"a step needs two comma-separated entries: {text!r}")
        read = lambda p: p.upper() if p.upper() in ("C", "D") else parse_root(p)  # noqa: E731
        return cls(read(parts[0]), read(parts[1]))


@dataclass(frozen=True)
class PiStarSequence:
    """Steps applied left to right."""

    steps: tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return ";".join(str(s) for s in self.steps)

    def then(self, step: Step) -> "PiStarSequence":
        return PiStarSequence(self.steps + (step,))

    @classmethod
    def parse(cls, text: str) -> "PiStarSequence":
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(Step.parse(chunk) for chunk in text.split(";")))


def steps_for_rank(n: int) -> list[Step]:
    """Every length-one step meaningful on pairs of rank ``n``."""
    out = []
    for a, b in adjacent_pairs(n):
        out += [Step(a, b), Step(b, a)]
    if n >= 4:
        for beta in QUAD_BETAS:
            for letter in ("C", "D"):
                out += [Step(letter, beta), Step(beta, letter)]
    return sorted(set(out), key=str)


def _side_tableau(side: str, pair: TableauPair) -> DominoTableau:
    return pair.left if side == "L" else pair.right


def apply_step(side: str, step: Step, pair: TableauPair) -> set[TableauPair]:
    t = _side_tableau(side, pair)
    if step.is_wall:
        a, b = step.first, step.second
        if not {a, b} <= _labels_needed(t) or not in_domain_tableau(t, a, b):
            return set()
        return {t_wall_pair(side, a, b, pair)}
    if not {1, 2, 3, 4} <= set(t.labels):
        return set()
    src, _ = quad_types(step.quad_kind, step.beta)
    if classify_type_tableau(t) != src:
        return set()
    return t_quad_pair(side, step.quad_kind, step.beta, pair)


def _labels_needed(t: DominoTableau) -> set[int]:
    """Roots whose labels are all present in ``t``."""
    have = set(t.labels)
    out = {1} if {1, 2} <= have else set()
    return out | {i for i in have if i >= 2 and i - 1 in have}


def apply_sequence(side: str, seq: PiStarSequence | Iterable[Step],
                   pair: TableauPair) -> set[TableauPair]:
    steps = seq.steps if isinstance(seq, PiStarSequence) else tuple(seq)
    current = {pair}
    for step in steps:
        current = {q for p in current for q in apply_step(side, step, p)}
    return current


# ------------------------------------------------------------ partitions

@dataclass(frozen=True)
class GtdPartition:
    blocks: tuple[frozenset, ...]
    generation: int

    def block_index(self) -> dict:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def same_block(self, x, y) -> bool:
        idx = self.block_index()
        return idx[x] == idx[y]

    def __len__(self) -> int:
        return len(self.blocks)


def _canonical(groups: Iterable[Iterable]) -> tuple[frozenset, ...]:
    blocks = [frozenset(g) for g in groups]
    return tuple(sorted(blocks, key=lambda b: min(b)))


def refine(universe: Iterable, initial: Callable[[object], Hashable],
           successors: Callable[[object], list[set]]) -> GtdPartition:
    """Coarsest partition finer than ``initial`` that is stable under
    ``successors``.

    ``successors(x)`` lists, per operator, the set of images of ``x``.  Two
    elements stay together when, operator by operator, their images meet
    exactly the same blocks.
    """
    items = sorted(universe)
    images = {x: successors(x) for x in items}
    key = {x: ("init", initial(x)) for x in items}
    ids = _number(key)
    generation = 0
    while True:
        sig = {x: (ids[x],) + tuple(frozenset(ids[y] for y in imgs) for imgs in images[x])
               for x in items}
        new_ids = _number(sig)
        if len(set(new_ids.values())) == len(set(ids.values())):
            break
        ids = new_ids
        generation += 1
    groups: dict[int, list] = {}
    for x in items:
        groups.setdefault(ids[x], []).append(x)
    return GtdPartition(_canonical(groups.values()), generation)


def _number(key: dict) -> dict:
    seen: dict = {}
    out = {}
    for x, k in key.items():
        out[x] = seen.setdefault(k, len(seen))
    return out


def all_pairs(n: int) -> list[TableauPair]:
    return sorted(rs_map(delta(w)) for w in all_signed_perms(n))


def gtd_partition(n: int, side: str = "L",
                  universe: Iterable[TableauPair] | None = None) -> GtdPartition:
    """The generalized tau-invariant classes on pairs of rank ``n``.

    ``side="R"`` gives the right-handed version built from right descents and
    right operators.
    """
    pairs = list(universe) if universe is not None else all_pairs(n)
    steps = steps_for_rank(n)
    return refine(
        pairs,
        lambda p: frozenset(tau_pair(side, p)),
        lambda p: [apply_step(side, s, p) for s in steps],
    )


def components(universe: Iterable, neighbours: Callable[[object], Iterable]) -> GtdPartition:
    """Connected components of the undirected graph spanned by ``neighbours``."""
    items = sorted(universe)
    members = set(items)
    adj: dict = {x: set() for x in items}
    for x in items:
        for y in neighbours(x):
            if y in members:
                adj[x].add(y)
                adj[y].add(x)
    seen, groups = set(), []
    for x in items:
        if x in seen:
            continue
        comp, queue = [], deque([x])
        seen.add(x)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        groups.append(comp)
    return GtdPartition(_canonical(groups), 0)


def jrd_partition(n: int, parity: int) -> GtdPartition:
    """Classes joined by right operators among pairs of one parity class."""
    pairs = [p for p in all_pairs(n) if p.parity == parity]
    steps = steps_for_rank(n)
    return components(pairs, lambda p: {q for s in steps for q in apply_step("R", s, p)})


def cl(w: SignedPermutation) -> DominoTableau:
    """The special tableau classifying the primitive ideal attached to ``w``."""
    return make_special(rs_map(delta(w)).left)


def coset(w: SignedPermutation) -> str:
    """``"W'"`` for an even number of sign changes, ``"W''"`` otherwise."""
    return "W'" if w.parity == 0 else "W''"


def reachability_check(start: TableauPair, goal: TableauPair,
                       side: str = "L") -> PiStarSequence | None:
    """A shortest step sequence carrying ``start`` to ``goal``, if there is one."""
    if len(start.left) != len(goal.left):
        return None
    steps = steps_for_rank(len(start.left))
    back: dict[TableauPair, tuple] = {start: ()}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if p == goal:
            return PiStarSequence(back[p])
        for s in steps:
            for q in apply_step(side, s, p):
                if q not in back:
                    back[q] = back[p] + (s,)
                    queue.append(q)
    return None


def steps_below(n: int, l: int) -> list[Step]:
    """Steps whose roots all lie in ``{a1p, a2, ..., a_l}``."""
    def fits(s: Step) -> bool:
        if s.is_wall:
            return max(s.first, s.second) <= l
        return l >= 4
    return [s for s in steps_for_rank(n) if fits(s)]


def extremal_move(pair: TableauPair, l: int, target) -> PiStarSequence | None:
    """A left sequence over roots up to ``l`` that puts domino ``l`` at
    ``target`` while fixing the right tableau and every domino above ``l``."""
    n = len(pair.left)
    steps = steps_below(n, l)
    keep = {r: pair.left[r] for r in pair.left.labels if r > l}

    def done(p: TableauPair) -> bool:
        return (p.right == pair.right and p.left[l] == tuple(target)
                and all(p.left[r] == pos for r, pos in keep.items()))

    back: dict[TableauPair, tuple] = {pair: ()}
    queue = deque([pair])
    while queue:
        p = queue.popleft()
        if done(p):
            return PiStarSequence(back[p])
        for s in steps:
            for q in apply_step("L", s, p):
                if q not in back:
                    back[q] = back[p] + (s,)
                    queue.append(q)
    return None


def reachability_classes(n: int, side: str = "L") -> GtdPartition:
    steps = steps_for_rank(n)
    return components(all_pairs(n), lambda p: {q for s in steps for q in apply_step(side, s, p)})


__all__ = [
    "Step", "PiStarSequence", "steps_for_rank", "apply_step", "apply_sequence",
    "GtdPartition", "refine", "components", "all_pairs", "gtd_partition", "jrd_partition",
    "cl", "coset", "reachability_check", "reachability_classes", "steps_below",
    "extremal_move",
]
