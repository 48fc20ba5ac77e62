"""
Exhaustive checks of the combinatorial statements this package rests on.

Each check returns a :class:`CheckResult`; a suite is a named list of checks.
Results print as ``CHECK <id> rank=<n> status=PASS|FAIL detail=<counts>``.
"""

from __future__ import annotations

import json
import math
import random
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable

from .cycles import (
    classify_extended,
    extended_cycles,
    is_special_shape,
    make_special,
    move_through_extended,
    open_orbit,
    special_census,
)
from .gtau import all_pairs, cl, gtd_partition, jrd_partition, reachability_classes
from .insertion import inverse_rs, rs_map
from .operators import classify_type_tableau, t_quad_pair, t_wall_pair, tau_pair
from .signed_perms import (
    QUAD_BETAS,
    SIDES,
    adjacent_pairs,
    all_signed_perms,
    classify_type,
    delta,
    in_domain,
    length_descents,
    quad_others,
    quad_types,
    t_quad,
    t_wall,
    tau,
)
from .tableaux import (
    all_tableaux,
    count_tilings,
    domino_shapes,
    format_shape,
    is_nested_type,
    tableaux_of_shape,
)

DEFAULT_MAX_RANK = 5


@dataclass
class CheckResult:
    id: str
    rank: int
    passed: bool
    detail: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        detail = ",".join(f"{k}={v}" for k, v in self.detail.items())
        return f"CHECK {self.id} rank={self.rank} status={self.status} detail={detail}"

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("passed")
        d["status"] = self.status
        return d


def dump_json(results: list[CheckResult]) -> str:
    return json.dumps([r.as_dict() for r in results], indent=2, sort_keys=True)


@lru_cache(maxsize=None)
def _sequences(n: int):
    return tuple((w, delta(w)) for w in all_signed_perms(n))


# -------------------------------------------------------------- insertion

def check_bijection(n: int) -> CheckResult:
    images = Counter()
    by_coset = Counter()
    for w, g in _sequences(n):
        p = rs_map(g)
        images[p] += 1
        by_coset[(w.parity, p.parity)] += 1
    expected = 2 ** n * math.factorial(n)
    half = expected // 2 if n else 1
    split = (by_coset[(0, 0)] == by_coset[(1, 1)] == half
             and by_coset[(0, 1)] == by_coset[(1, 0)] == 0)
    ok = len(images) == expected and max(images.values()) == 1 and split
    return CheckResult("bijection", n, ok, {
        "pairs": len(images), "expected": expected,
        "even_to_class0": by_coset[(0, 0)], "odd_to_class1": by_coset[(1, 1)]})


def check_round_trip(n: int) -> CheckResult:
    bad = sum(1 for _, g in _sequences(n) if inverse_rs(rs_map(g)) != g)
    return CheckResult("round-trip", n, bad == 0, {"sequences": len(_sequences(n)), "failures": bad})


def check_parity(n: int) -> CheckResult:
    """Even sequences land on pairs with ``n_v = 0 mod 4``.  Insertion checks
    its own bookkeeping on every step, so completing the loop covers that too."""
    bad = sum(1 for _, g in _sequences(n) if (rs_map(g).n_v % 4 == 0) != g.is_even)
    return CheckResult("parity", n, bad == 0, {"sequences": len(_sequences(n)), "failures": bad})


# -------------------------------------------------------------- descents

def check_tau(n: int) -> CheckResult:
    bad = 0
    for w, g in _sequences(n):
        p = rs_map(g)
        for side in SIDES:
            if not tau(side, g) == length_descents(side, w) == tau_pair(side, p):
                bad += 1
    return CheckResult("tau", n, bad == 0, {"elements": len(_sequences(n)), "sides": 2,
                                           "failures": bad})


# -------------------------------------------------------------- operators

def check_wall_equivariance(n: int) -> CheckResult:
    walls = [(a, b) for a, b in adjacent_pairs(n)]
    tried = bad = 0
    for _, g in _sequences(n):
        p = rs_map(g)
        for side in SIDES:
            for a, b in walls:
                if in_domain(side, a, b, g):
                    tried += 1
                    if t_wall_pair(side, a, b, p) != rs_map(t_wall(side, a, b, g)):
                        bad += 1
    return CheckResult("wall-equivariance", n, bad == 0, {"applications": tried, "failures": bad})


def check_quad_equivariance(n: int, sample: int | None = None, seed: int = 0) -> CheckResult:
    seqs = list(_sequences(n))
    if sample is not None and sample < len(seqs):
        seqs = random.Random(seed).sample(seqs, sample)
    tried = bad = mistyped = 0
    for _, g in seqs:
        p = rs_map(g)
        for side in SIDES:
            lt = classify_type(side, g)
            if lt != classify_type_tableau(p, side):
                mistyped += 1
            if lt is None:
                continue
            for kind in ("Dβ", "Cβ", "βC", "βD"):
                for beta in QUAD_BETAS:
                    if quad_types(kind, beta)[0] != lt:
                        continue
                    tried += 1
                    want = {rs_map(x) for x in t_quad(side, kind, beta, g)}
                    if t_quad_pair(side, kind, beta, p) != want:
                        bad += 1
    return CheckResult("quad-equivariance", n, bad == mistyped == 0, {
        "sequences": len(seqs), "applications": tried, "failures": bad,
        "type_mismatches": mistyped})


def _compose_walls(ops, g):
    for a, b in reversed(ops):
        g = t_wall("L", a, b, g)
    return g


def check_quad_structure(n: int) -> CheckResult:
    """Sizes, the back-and-forth pattern, the six-step linkage and the
    independence of the number of values from the outer root, over the
    even signed permutations of rank ``n``."""
    counts = Counter()
    for w, g in _sequences(n):
        if w.parity:
            continue
        counts["elements"] += 1
        lt = classify_type("L", g)
        if lt is None or lt.kind not in ("C", "D"):
            continue
        there, back = ("βC", "Cβ") if lt.kind == "C" else ("βD", "Dβ")
        sizes = set()
        for beta in QUAD_BETAS:
            vals = t_quad("L", there, beta, g)
            sizes.add(len(vals))
            counts["size_ok" if len(vals) in (1, 2) else "size_bad"] += 1
            if len(vals) == 1:
                (w1,) = vals
                ret = t_quad("L", back, beta, w1)
                others = ret - {g}
                ok = len(ret) == 2 and g in ret and all(
                    t_quad("L", there, beta, x) == {w1} for x in others)
            else:
                ok = all(t_quad("L", back, beta, x) == {g} for x in vals)
                gm, dl = quad_others(beta)
                if lt.kind == "C":
                    ops = [(dl, 3), (3, beta), (gm, 3), (3, dl), (beta, 3), (3, gm)]
                else:
                    ops = [(3, dl), (beta, 3), (3, gm), (dl, 3), (3, beta), (gm, 3)]
                w1, w2 = sorted(vals)
                linked = _compose_walls(ops, w1) == w2
                counts["linkage_ok" if linked else "linkage_bad"] += 1
            counts["back_forth_ok" if ok else "back_forth_bad"] += 1
        counts["beta_free" if len(sizes) == 1 else "beta_dependent"] += 1
    ok = not any(k.endswith(("_bad", "dependent")) for k in counts)
    return CheckResult("quad-structure", n, ok, dict(sorted(counts.items())))


# -------------------------------------------------------------- cycles

def check_extended_cycles(n: int) -> CheckResult:
    seen = bad = 0
    for _, g in _sequences(n):
        p = rs_map(g)
        for side in SIDES:
            for ec in extended_cycles(side, p):
                seen += 1
                try:
                    sense = classify_extended(ec, p)
                except AssertionError:
                    bad += 1
                    continue
                shift = move_through_extended(p, ec).n_h - p.n_h
                if shift != (2 if sense == "up" else -2):
                    bad += 1
    return CheckResult("extended-cycles", n, bad == 0, {"extended_cycles": seen, "failures": bad})


def check_special(n: int) -> CheckResult:
    orbits, bad, seen = 0, 0, set()
    for t in all_tableaux(n):
        if t in seen:
            continue
        orbit = open_orbit(t)
        seen |= orbit
        orbits += 1
        specials = [x for x in orbit if is_special_shape(x.shape)]
        if len(specials) != 1 or any(make_special(x) != specials[0] for x in orbit):
            bad += 1
    detail = {"orbits": orbits, "failures": bad}
    ok = bad == 0
    if n == 2:
        census = {format_shape(s): c for s, c in special_census(2).items()}
        detail["census"] = "/".join(f"({k}):{v}" for k, v in sorted(census.items()))
        detail["census"] = detail["census"].replace(",", ".")
        ok = ok and census == {"3,1": 1, "2,2": 2, "1,1,1,1": 1}
    return CheckResult("special", n, ok, detail)


# -------------------------------------------------------------- classes

def _fibers(items, key) -> list[frozenset]:
    groups = defaultdict(set)
    for x in items:
        groups[key(x)].add(x)
    return sorted((frozenset(v) for v in groups.values()), key=min)


def check_gtd_fibers(n: int) -> CheckResult:
    part = gtd_partition(n)
    fib = _fibers(all_pairs(n), lambda p: make_special(p.left))
    return CheckResult("gtd-fibers", n, list(part.blocks) == fib, {
        "pairs": sum(len(b) for b in part.blocks), "classes": len(part),
        "special_fibers": len(fib), "rounds": part.generation})


def check_jrd_fibers(n: int) -> CheckResult:
    detail, ok = {}, True
    n_special = sum(special_census(n).values())
    for parity in (0, 1):
        part = jrd_partition(n, parity)
        pairs = [p for p in all_pairs(n) if p.parity == parity]
        fib = _fibers(pairs, lambda p: make_special(p.left))
        ws = [w for w, _ in _sequences(n) if w.parity == parity]
        image = {cl(w) for w in ws}
        class_images = [{make_special(p.left) for p in b} for b in part.blocks]
        bijective = (all(len(c) == 1 for c in class_images)
                     and len({next(iter(c)) for c in class_images}) == len(part) == n_special
                     and len(image) == n_special)
        ok = ok and list(part.blocks) == fib and bijective
        detail[f"classes_{parity}"] = len(part)
    detail["special_tableaux"] = n_special
    return CheckResult("jrd-fibers", n, ok, detail)


def check_connectivity(n: int) -> CheckResult:
    comps = reachability_classes(n)
    fib = _fibers(all_pairs(n), lambda p: (make_special(p.right), p.n_v % 4))
    return CheckResult("connectivity", n, list(comps.blocks) == fib, {
        "components": len(comps), "expected": len(fib)})


# -------------------------------------------------------------- shapes

def check_nested(max_size: int) -> CheckResult:
    shapes = bad = 0
    for rank in range(max_size // 2 + 1):
        for shape in domino_shapes(rank):
            shapes += 1
            nested = is_nested_type(shape)
            unique = count_tilings(shape) == 1
            residues = {t.n_v % 4 for t in tableaux_of_shape(shape)}
            if nested != unique or (len(residues) == 2) == nested:
                bad += 1
    return CheckResult("nested-shapes", max_size, bad == 0, {"shapes": shapes, "failures": bad})


# -------------------------------------------------------------- suites

SUITES: dict[str, Callable[[int], list[CheckResult]]] = {
    "bijection": lambda n: [check_bijection(k) for k in range(1, n + 1)],
    "round-trip": lambda n: [check_round_trip(k) for k in range(1, n + 1)],
    "parity": lambda n: [check_parity(k) for k in range(1, n + 1)],
    "tau": lambda n: [check_tau(k) for k in range(1, n + 1)],
    "walls": lambda n: [check_wall_equivariance(k) for k in range(3, n + 1)],
    "quads": lambda n: [check_quad_equivariance(k) for k in range(4, n + 1)],
    "quad-structure": lambda n: [check_quad_structure(k) for k in range(4, n + 1)],
    "extended-cycles": lambda n: [check_extended_cycles(k) for k in range(1, n + 1)],
    "special": lambda n: [check_special(k) for k in range(1, n + 1)],
    "gtd-fibers": lambda n: [check_gtd_fibers(k) for k in range(1, n + 1)],
    "jrd-fibers": lambda n: [check_jrd_fibers(k) for k in range(1, n + 1)],
    "connectivity": lambda n: [check_connectivity(k) for k in range(1, n + 1)],
    "nested": lambda n: [check_nested(2 * n)],
}


def run_suite(name: str, rank: int) -> list[CheckResult]:
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](rank)]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](rank)


__all__ = [
    "CheckResult", "DEFAULT_MAX_RANK", "SUITES", "run_suite", "dump_json",
    "check_bijection", "check_round_trip", "check_parity", "check_tau",
    "check_wall_equivariance", "check_quad_equivariance", "check_quad_structure",
    "check_extended_cycles", "check_special", "check_gtd_fibers", "check_jrd_fibers",
    "check_connectivity", "check_nested",
]
