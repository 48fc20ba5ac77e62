import pytest
from hypothesis import given, settings

from dtableau.cycles import extended_cycles, is_special_shape, make_special, move_through_extended
from dtableau.insertion import TableauPair, rs_map
from dtableau.operators import (
    H1,
    H2,
    TEMPLATES,
    classify_type_tableau,
    in_domain_tableau,
    replace,
    replace_named,
    t_quad_pair,
    t_special,
    t_wall_pair,
    tau_pair,
    tau_tableau,
    template,
)
from dtableau.signed_perms import (
    ALPHA1P,
    QUAD_BETAS,
    DomainError,
    SignedPermutation,
    adjacent_pairs,
    all_signed_perms,
    classify_type,
    delta,
    in_domain,
    quad_types,
    simple_reflection,
    t_quad,
    t_wall,
    tau,
)
from dtableau.tableaux import DominoTableau, all_tableaux, horizontal, is_standard, tableaux_of_shape, vertical
from strategies import sequences

KINDS = ("Dβ", "Cβ", "βC", "βD")


def _pairs(n):
    return sorted({rs_map(delta(w)) for w in all_signed_perms(n)})


def _quad_calls(pair, side="L"):
    lt = classify_type_tableau(pair, side)
    for kind in KINDS:
        for beta in QUAD_BETAS:
            if lt is not None and quad_types(kind, beta)[0] == lt:
                yield kind, beta


# ------------------------------------------------------------------ tau

def test_descents_of_small_tableaux():
    w = simple_reflection(ALPHA1P, 2)
    assert ALPHA1P in tau_tableau(rs_map(delta(w)).left)
    assert tau_tableau(DominoTableau({1: horizontal(1, 1), 2: horizontal(2, 1)})) == {2}


@pytest.mark.parametrize("rank", range(2, 6))
def test_transpose_toggles_alpha1p(rank):
    for t in all_tableaux(rank):
        assert (ALPHA1P in tau_tableau(t)) != (ALPHA1P in tau_tableau(t.transpose()))


@settings(max_examples=150)
@given(sequences(max_n=7))
def test_descents_commute_with_insertion(g):
    pair = rs_map(g)
    for side in "LR":
        assert tau_pair(side, pair) == tau(side, g)


# ------------------------------------------------------------------ walls

def test_alpha1p_alpha3_case_one():
    t1 = DominoTableau({1: vertical(1, 1), 2: vertical(3, 1), 3: horizontal(1, 2)})
    pair = TableauPair(t1, t1)
    assert in_domain_tableau(t1, 3, ALPHA1P)
    out = t_wall_pair("L", 3, ALPHA1P, pair)
    assert out == TableauPair(t1.interchange(2, 3), t1)


def test_wall_outside_domain_raises():
    pair = rs_map(delta(SignedPermutation.identity(3)))
    with pytest.raises(DomainError):
        t_wall_pair("L", 2, 3, pair)


@pytest.mark.parametrize("n", [3, 4])
def test_walls_are_inverse_pairs(n):
    for pair in _pairs(n):
        for side in "LR":
            for a, b in adjacent_pairs(n):
                t = pair.left if side == "L" else pair.right
                if in_domain_tableau(t, a, b):
                    out = t_wall_pair(side, a, b, pair)
                    assert t_wall_pair(side, b, a, out) == pair
                    assert out.parity == pair.parity


@settings(max_examples=150)
@given(sequences(min_n=3, max_n=6))
def test_walls_commute_with_insertion(g):
    pair = rs_map(g)
    n = len(g.triples)
    for side in "LR":
        for a, b in adjacent_pairs(n):
            if in_domain(side, a, b, g):
                assert t_wall_pair(side, a, b, pair) == rs_map(t_wall(side, a, b, g))


@pytest.mark.parametrize("a, b", [(ALPHA1P, 3), (3, ALPHA1P), (2, 3), (3, 2)])
def test_walls_commute_with_extended_cycles(a, b):
    for pair in _pairs(4):
        if not in_domain_tableau(pair.left, a, b):
            continue
        image = t_wall_pair("L", a, b, pair)
        for ec in extended_cycles("L", pair):
            moved = move_through_extended(pair, ec)
            if in_domain_tableau(moved.left, a, b):
                target = t_wall_pair("L", a, b, moved)
                assert any(move_through_extended(image, e) == target
                           for e in extended_cycles("L", image))


def test_h1_to_h2_surgery_is_valid():
    for t in all_tableaux(4):
        if all(t[k] == p for k, p in H1.items()):
            assert is_standard(t.replace(dict(H2.items()), check=False))


# ------------------------------------------------------------------ templates

def test_template_table():
    assert len(TEMPLATES) == 32
    assert classify_type_tableau(template("C", None, 1)).kind == "C"
    lt = classify_type_tableau(template("A", 2, 1))
    assert (lt.kind, lt.beta) == ("A", 2)


def test_type_needs_four_labels():
    with pytest.raises(DomainError):
        classify_type_tableau(DominoTableau({1: horizontal(1, 1)}))


@settings(max_examples=150)
@given(sequences(min_n=4, max_n=7))
def test_tableau_types_match_sequence_types(g):
    pair = rs_map(g)
    for side in "LR":
        assert classify_type_tableau(pair, side) == classify_type(side, g)


def test_replacement_round_trip():
    checked = 0
    for t in all_tableaux(5):
        for kind, other in (("C", "B"), ("D", "A")):
            for beta in QUAD_BETAS:
                for j in (1, 2):
                    x = template(kind, None, j)
                    y = template(other, beta, j)
                    if t.restrict(4) == x:
                        out = replace(x, y, t)
                        assert replace(y, x, out) == t
                        checked += 1
    assert checked > 0


def test_replacement_rejects_bad_input():
    t = template("C", None, 1)
    with pytest.raises(DomainError):
        replace(template("D", None, 1), template("A", 1, 1), t)
    with pytest.raises(DomainError):
        replace_named(("C", None, 3), ("B", 1, 3), t)


# ------------------------------------------------------------------ quadruples

@settings(max_examples=100)
@given(sequences(min_n=4, max_n=6))
def test_quads_commute_with_insertion(g):
    pair = rs_map(g)
    for side in "LR":
        for kind, beta in _quad_calls(pair, side):
            want = {rs_map(x) for x in t_quad(side, kind, beta, g)}
            assert t_quad_pair(side, kind, beta, pair) == want


def test_quads_transpose_c_into_d():
    for pair in _pairs(4):
        lt = classify_type_tableau(pair)
        if lt is None or lt.kind != "C":
            continue
        for beta in QUAD_BETAS:
            lhs = {q.transpose() for q in t_quad_pair("L", "βC", beta, pair)}
            assert lhs == t_quad_pair("L", "βD", beta, pair.transpose())


def test_quads_keep_the_parity_class_and_come_back():
    for pair in _pairs(4):
        for kind, beta in _quad_calls(pair):
            back = {"Dβ": "βD", "Cβ": "βC", "βC": "Cβ", "βD": "Dβ"}[kind]
            for q in t_quad_pair("L", kind, beta, pair):
                assert q.parity == pair.parity
                assert pair in t_quad_pair("L", back, beta, q)


def test_quads_commute_with_extended_cycles():
    for pair in _pairs(4):
        lt = classify_type_tableau(pair)
        for kind, beta in _quad_calls(pair):
            images = t_quad_pair("L", kind, beta, pair)
            reach = {move_through_extended(y, e) for y in images for e in extended_cycles("L", y)}
            for ec in extended_cycles("L", pair):
                moved = move_through_extended(pair, ec)
                if classify_type_tableau(moved) == lt:
                    target = t_quad_pair("L", kind, beta, moved)
                    assert len(target) == len(images)
                    assert target <= reach


def test_quad_wrong_type_raises():
    pair = rs_map(delta(SignedPermutation.identity(4)))
    with pytest.raises(DomainError):
        t_quad_pair("L", "βC", 1, pair)


# ------------------------------------------------------------------ special shapes

@pytest.mark.parametrize("rank", [4, 5])
def test_special_operator_matches_projected_pairs(rank):
    sizes = set()
    for t in all_tableaux(rank):
        if not is_special_shape(t.shape) or classify_type_tableau(t) is None:
            continue
        partners = tableaux_of_shape(t.shape)
        for kind, beta in _quad_calls(TableauPair(t, t)):
            got = t_special("L", kind, beta, t)
            sizes.add(len(got))
            for t2 in partners:
                images = t_quad_pair("L", kind, beta, TableauPair(t, t2))
                assert got == {make_special(q.left) for q in images}
    assert sizes == ({1} if rank == 4 else {1, 2})


def test_special_operator_needs_special_shape():
    t = template("C", None, 3)
    assert not is_special_shape(t.shape)
    with pytest.raises(DomainError):
        t_special("L", "βC", 1, t)
