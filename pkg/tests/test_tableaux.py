import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dtableau.tableaux import (
    DominoTableau,
    TableauError,
    all_tableaux,
    box,
    conjugate,
    count_tilings,
    domino_shapes,
    fixed_square,
    format_shape,
    format_tableau,
    grid_label,
    horizontal,
    is_boxed,
    is_nested_type,
    is_standard,
    parse_shape,
    parse_tableau,
    render,
    tableaux_of_shape,
    vertical,
)

partitions = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def test_grid_has_one_fixed_square_per_domino():
    for r in range(1, 5):
        for c in range(1, 5):
            for p in (horizontal(r, c), vertical(r, c)):
                assert sum(1 for s in p if grid_label(s) in "YZ") == 1
                assert fixed_square(p) in p


def test_boxes():
    assert box((1, 1)) == {(1, 0), (1, 1), (2, 0), (2, 1)}
    assert is_boxed(vertical(1, 1))
    assert not is_boxed(horizontal(1, 1))


@given(partitions)
def test_conjugate_is_an_involution(shape):
    assert conjugate(conjugate(shape)) == shape
    assert sum(conjugate(shape)) == sum(shape)


@given(partitions)
def test_shape_text_round_trip(shape):
    assert parse_shape(format_shape(shape)) == shape


def test_bad_partitions_are_rejected():
    with pytest.raises(TableauError):
        parse_shape("1,2")


def test_rectangle_tilings_are_fibonacci():
    fib = [1, 1]
    for _ in range(10):
        fib.append(fib[-1] + fib[-2])
    for k in range(1, 10):
        assert count_tilings((k, k)) == fib[k]


@pytest.mark.parametrize("rank", range(0, 6))
def test_squared_tableau_counts_sum_to_group_order(rank):
    total = sum(len(tableaux_of_shape(s)) ** 2 for s in domino_shapes(rank))
    assert total == 2 ** rank * math.factorial(rank)


def test_every_enumerated_tableau_is_standard():
    for t in all_tableaux(4):
        assert is_standard(t)
        assert t.transpose().shape == conjugate(t.shape)


def test_non_standard_placements_are_rejected():
    with pytest.raises(TableauError):
        DominoTableau({1: horizontal(2, 1)})
    with pytest.raises(TableauError):
        DominoTableau({1: horizontal(1, 1), 2: horizontal(1, 2)})


def test_text_and_rendering():
    t = DominoTableau({1: vertical(1, 1), 2: vertical(1, 2)})
    assert parse_tableau(format_tableau(t)) == t
    assert render(t) == "1 2\n1 2"


def test_nested_shapes_have_one_tiling():
    assert is_nested_type((2,))
    assert is_nested_type((1, 1))
    assert not is_nested_type((2, 2))
    for rank in range(1, 6):
        for s in domino_shapes(rank):
            assert is_nested_type(s) == (count_tilings(s) == 1)


def test_interchange_and_statistics():
    t = DominoTableau({1: horizontal(1, 1), 2: horizontal(2, 1)})
    assert (t.n_h, t.n_v) == (2, 0)
    u = t.interchange(1, 2)
    assert not is_standard(u)
    assert u.interchange(1, 2) == t
