import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dtableau.cycles import cycle_of, make_special
from dtableau.gtau import (
    PiStarSequence,
    Step,
    all_pairs,
    apply_sequence,
    apply_step,
    cl,
    coset,
    extremal_move,
    gtd_partition,
    jrd_partition,
    reachability_check,
    steps_for_rank,
)
from dtableau.insertion import rs_map
from dtableau.signed_perms import SignedPermutation, all_signed_perms, delta
from dtableau.tableaux import DominoTableau, extremal_positions, tableaux_of_shape, vertical
from strategies import signed_perms


def test_step_text():
    for text in ("a1p,a3", "a3,a2", "a2,C", "D,a4"):
        assert str(Step.parse(text)) == text
    seq = PiStarSequence.parse("a1p,a3;a4,D")
    assert len(seq) == 2 and str(seq) == "a1p,a3;a4,D"


@pytest.mark.parametrize("text", ["a2,a4", "a1p,a2", "C,a3", "C,D", "a2"])
def test_malformed_steps(text):
    with pytest.raises(ValueError):
        Step.parse(text)


def test_step_inventory():
    assert len(steps_for_rank(3)) == 4
    assert len(steps_for_rank(4)) == 6 + 12


def test_empty_sequence_is_the_identity():
    pair = rs_map(delta(SignedPermutation.parse("3 -1 2")))
    assert apply_sequence("L", PiStarSequence(), pair) == {pair}


def test_single_wall_step():
    pair = rs_map(delta(SignedPermutation.parse("1 3 2")))
    assert len(apply_sequence("L", PiStarSequence.parse("a2,a3"), pair)) in (0, 1)
    hits = [p for p in all_pairs(3) if apply_step("L", Step(2, 3), p)]
    assert hits and all(len(apply_step("L", Step(2, 3), p)) == 1 for p in hits)


@settings(max_examples=60)
@given(signed_perms(min_n=3, max_n=5), st.data())
def test_sequences_keep_the_parity_class(w, data):
    pair = rs_map(delta(w))
    steps = steps_for_rank(w.n)
    chosen = data.draw(st.lists(st.sampled_from(steps), max_size=6))
    side = data.draw(st.sampled_from("LR"))
    for q in apply_sequence(side, chosen, pair):
        assert q.n_v % 4 == pair.n_v % 4


def test_small_rank_classes():
    assert len(gtd_partition(1)) == 1
    assert sorted(len(b) for b in gtd_partition(2).blocks) == [2, 2, 2, 2]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_left_and_right_classes_mirror_each_other(n):
    left = gtd_partition(n, "L")
    right = gtd_partition(n, "R")
    mirrored = sorted((frozenset(p.swap() for p in b) for b in left.blocks), key=min)
    assert mirrored == list(right.blocks)


def test_two_values_with_open_cycles_are_equivalent():
    idx = gtd_partition(4).block_index()
    seen = 0
    for pair in all_pairs(4):
        if not (cycle_of(3, pair.left).is_open and cycle_of(4, pair.left).is_open):
            continue
        for step in steps_for_rank(4):
            vals = apply_step("L", step, pair)
            if len(vals) == 2:
                seen += 1
                a, b = vals
                assert idx[a] == idx[b]
    assert seen > 0


def test_right_classes_in_rank_two():
    for parity in (0, 1):
        assert len(jrd_partition(2, parity)) == 4


def test_classifier_in_small_rank():
    assert cl(SignedPermutation.identity(1)) == DominoTableau({1: vertical(1, 1)})
    assert coset(SignedPermutation.identity(1)) == "W'"
    assert len({cl(w) for w in all_signed_perms(2, even_only=True)}) == 4


@pytest.mark.parametrize("n", [3, 4])
def test_classifier_is_constant_on_right_classes(n):
    for parity in (0, 1):
        for block in jrd_partition(n, parity).blocks:
            assert len({make_special(p.left) for p in block}) == 1


def test_reachability_witnesses():
    pairs = all_pairs(3)
    start = pairs[5]
    assert reachability_check(start, start) == PiStarSequence()
    rng = random.Random(3)
    for goal in rng.sample(pairs, 12):
        seq = reachability_check(start, goal)
        same = (make_special(start.right), start.n_v % 4) == (make_special(goal.right), goal.n_v % 4)
        assert (seq is not None) == same
        if seq is not None:
            assert goal in apply_sequence("L", seq, start)


def test_cross_parity_is_never_reachable():
    pairs = all_pairs(3)
    odd = [p for p in pairs if p.parity]
    even = [p for p in pairs if not p.parity]
    assert reachability_check(even[0], odd[0]) is None


@pytest.mark.parametrize("n", [3, 4])
def test_domino_l_can_be_sent_to_an_extremal_position(n):
    outcomes = Counter()
    for pair in all_pairs(n):
        for l in range(2, n):
            bar = pair.left.restrict(l)
            for target in extremal_positions(bar):
                if not any(t[l] == target and t.n_v % 4 == bar.n_v % 4
                           for t in tableaux_of_shape(bar.shape)):
                    continue
                seq = extremal_move(pair, l, target)
                outcomes[seq is not None] += 1
                assert seq is not None
                assert all(max(s.first, s.second) <= l for s in seq.steps if s.is_wall)
    assert outcomes[True] > 0
