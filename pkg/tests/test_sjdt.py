import random

import pytest

import gen
from symkeys import sjdt
from symkeys.core import InvalidShape, SkewTableau, format_tableau, parse_tableau, weight
from symkeys.crystal import crystal, lower
from symkeys.sjdt import (
    NotAPermutation,
    forward_slide,
    inner_corners,
    outer_cells,
    place_columns,
    rectify,
    reshape,
    reverse_slide,
    swap_adjacent_column_lengths,
    swap_sequence,
)

T8 = "2,3,3,4;4,-4,-4,-4;-5,-3,-2;-4;-3"
HEX = "1,3,-1;3,-3;-3"


def test_rectification_example():
    lines = []
    out = rectify(parse_tableau(".,2;1,3;2,-1", 3), trace=lines.append)
    assert format_tableau(out) == "2,2;3,3;-3"
    assert lines == ["V 1 1", "V 2 1", "HB -1", "T 3 2"]


def test_forward_then_reverse_is_identity():
    for t, x in gen.minimal_skew_tableaux(60, seed=3):
        for col in inner_corners(x):
            y, steps = forward_slide(x, col)
            if any(s.cells_lost for s in steps):
                continue
            end = steps[-1].at
            back, _ = reverse_slide(y, end[1])
            assert back == x


def test_rectification_order_independent():
    rng = random.Random(11)
    for t, x in gen.minimal_skew_tableaux(200):
        assert rectify(x) == t
        for _ in range(3):
            assert rectify(x, choose=rng.choice) == t


def test_weight_is_checked_on_every_step():
    before = sjdt.STEPS_CHECKED
    rectify(parse_tableau(".,2;1,3;2,-1", 3))
    assert sjdt.STEPS_CHECKED == before + 4


def test_horizontal_slide_lemma_states():
    # barred letter slides: the new entry of the right split column is -2
    _, steps = reverse_slide(parse_tableau("2,3;3,4;5,-5;-5;-2", 5), 1)
    hb = next(s for s in steps if s.kind == "HB")
    assert hb.result.columns == ((2, 3, 4, None, -2), (3, 4, -5, -4))
    # unbarred letter 5 slides and the left split column of C1 loses 3
    _, steps = reverse_slide(parse_tableau("2,3;4,4;5,-2;-5;-2", 5), 1)
    hu = next(s for s in steps if s.kind == "HU")
    assert hu.result.columns == ((2, 4, None, -5, -2), (3, 4, 5, -2))


def test_corner_bookkeeping():
    t = parse_tableau(".,2;1,3;2,-1", 3)
    assert inner_corners(t) == [0]
    assert outer_cells(t) == [0, 2]
    with pytest.raises(InvalidShape):
        forward_slide(t, 1)


@pytest.mark.parametrize("lam,n", [((2, 1), 2), ((2, 2), 2), ((2, 1), 3), ((2, 2), 3)])
def test_slides_commute_with_crystal_operators(lam, n):
    g = crystal(lam, n)
    rng = random.Random(5)
    skews = {}
    for t in g.vertices:
        xs = []
        for col in outer_cells(t):
            try:
                xs.append(reverse_slide(t, col)[0])
            except sjdt.NonMinimalInput:
                pass
        xs.append(gen.grow(t, rng, 3))
        skews[t] = xs
    for a, i, b in g.edges():
        for x in skews[g.vertices[a]]:
            fx = lower(x, i)
            assert fx is not None and rectify(fx) == g.vertices[b]
    for t in g.vertices:
        for i in range(1, n + 1):
            if lower(t, i) is None:
                assert all(lower(x, i) is None for x in skews[t])


def test_final_example_swap_sequence():
    t = parse_tableau(T8, 5)
    stages = swap_sequence(t, [0, 2, 1, 0, 2])
    expect = [
        (((2, -5, -3), (3, 5, -5, -4, -3), (3, -4, -2), (4, -4)), (2, 0, 0, 0)),
        (((2, -5, -3), (3, 5, -5, -4, -3), (3, -4), (4, -4, -2)), (3, 1, 1, 0)),
        (((2, -5, -3), (2, -4), (3, 5, -5, -4, -2), (4, -4, -2)), (3, 3, 0, 0)),
        (((2, -5), (2, -4, -3), (3, 5, -5, -4, -2), (4, -4, -2)), (3, 2, 0, 0)),
        (((2, -5), (2, -4, -3), (3, -4, -2), (4, 5, -5, -4, -2)), (3, 2, 2, 0)),
    ]
    assert [(s.columns, s.tops) for s in stages] == expect
    # the reshape route reaches the same end although it swaps in another order
    assert reshape(t, (2, 3, 3, 5)) == stages[-1]
    for s in stages:
        assert weight(s) == weight(t)
        assert rectify(s) == t


def test_hexagon_swaps():
    t = parse_tableau(HEX, 3)
    c1, c2, c3 = t.columns
    assert swap_adjacent_column_lengths(c1, c2, 3) == ((1, 2), (3, -3, -2))
    assert swap_adjacent_column_lengths(c2, c3, 3) == ((-3,), (3, -1))
    assert format_tableau(reshape(t, (1, 2, 3))) == ".,.,3;.,1,-3;2,-2,-1"
    assert format_tableau(reshape(t, (3, 2, 1))) == HEX


def test_reshape_rejects_non_permutation():
    with pytest.raises(NotAPermutation):
        reshape(parse_tableau(HEX, 3), (3, 3))


def test_place_columns_conventions():
    # normal when lengths weakly decrease, antinormal when they weakly increase
    assert place_columns([(1, 2), (2,)], 2).tops == (0, 0)
    assert place_columns([(2,), (1, 2)], 2).tops == (1, 0)
    assert place_columns([(1,), (1, 2)], 2).tops == (1, 0)
    assert place_columns([(2,), (1, 2)], 2).lengths == (1, 2)
    assert place_columns([(1, 2), ()], 2).columns[1] == ()


def test_swap_is_an_involution_on_pairs():
    g = crystal((2, 1), 3)
    for t in g.vertices:
        a, b = t.columns
        x, y = swap_adjacent_column_lengths(a, b, 3)
        assert swap_adjacent_column_lengths(x, y, 3) == (a, b)
        assert rectify(SkewTableau(3, (x, y), place_columns([x, y], 3).tops)) == t
