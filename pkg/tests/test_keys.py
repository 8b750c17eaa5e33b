import pytest

import oracles
from symkeys.core import InvalidTableau, SkewTableau, entrywise_leq, format_tableau, is_key_tableau, key_of_weight, parse_tableau, weight
from symkeys.crystal import crystal
from symkeys.keys import (
    atom_of,
    left_key_column_direct,
    left_key_column_sjdt,
    left_key_direct,
    left_key_sjdt,
    match_split_columns,
    opposite_atom_of,
    right_key_column_direct,
    right_key_column_sjdt,
    right_key_direct,
    right_key_sjdt,
)

HEX = "1,3,-1;3,-3;-3"
T8 = "2,3,3,4;4,-4,-4,-4;-5,-3,-2;-4;-3"


def _both(fa, fb, t):
    a, b = fa(t), fb(t)
    assert a == b
    return format_tableau(a)


def test_small_example_keys():
    t = parse_tableau(HEX, 3)
    assert _both(right_key_sjdt, right_key_direct, t) == "3,3,-1;-2,-1;-1"
    assert _both(left_key_sjdt, left_key_direct, t) == "1,1,2;2,2;-3"


def test_final_example_keys():
    t = parse_tableau(T8, 5)
    assert _both(right_key_sjdt, right_key_direct, t) == "4,4,4,4;5,-3,-3,-3;-3,-2,-2;-2;-1"
    assert _both(left_key_sjdt, left_key_direct, t) == "1,2,2,2;2,-5,-5,-5;-5,-3,-3;-4;-3"


def test_right_direct_trace_small_example():
    lines = []
    col = right_key_column_direct(parse_tableau(HEX, 3), lines.append)
    assert col == (3, -2, -1)
    assert lines == ["rC2 gains [-1] -> [3,-2,-1]", "rC3 gains [3,-2] -> [3,-2,-1]"]


def test_left_direct_trace_small_example():
    lines = []
    t = parse_tableau("2,3,-3;3,-3;-3", 3)
    assert left_key_column_direct(t, lines.append) == (2,) == left_key_column_sjdt(t)
    assert lines == [
        "lC2 loses [-3] (rC2 unmatched [-2]) -> [2]",
        "lC1 loses [1,-3] (rC1 unmatched [3,-1]) -> [2]",
    ]


def test_final_example_direct_traces():
    t = parse_tableau(T8, 5)
    lines = []
    right_key_column_direct(t, lines.append)
    assert lines == [
        "rC2 gains [5,-1] -> [3,5,-4,-2,-1]",
        "rC3 gains [5,-1] -> [3,5,-4,-2,-1]",
        "rC4 gains [5,-2,-1] -> [4,5,-3,-2,-1]",
    ]
    lines = []
    assert left_key_column_direct(t, lines.append) == (2, -5)
    assert lines == [
        "lC3 loses [-2] (rC3 unmatched [-2]) -> [3,-4]",
        "lC2 loses [-3] (rC2 unmatched [-2]) -> [2,-4]",
        "lC1 loses [1,-4,-3] (rC1 unmatched [4,-3,-1]) -> [2,-5]",
    ]


def test_two_column_lemmas():
    t = parse_tableau("2,3;3,4;5,-5;-5;-2", 5)
    assert right_key_column_direct(t) == right_key_column_sjdt(t) == (3, 4, -5, -2, -1)
    t = parse_tableau("2,3;4,4;5,-2;-5;-2", 5)
    assert left_key_column_direct(t) == left_key_column_sjdt(t) == (1, 4, -5)


def test_matching_of_split_columns():
    m = match_split_columns((1, 3, -2), (2, -3), 3)
    # -3 takes 3, 2 takes 1, -2 is left over in rC
    assert m.pairs == ((0, 0), (1, 1)) and m.unmatched_left == (2,) and m.unmatched_right == ()


def test_keys_need_straight_input():
    with pytest.raises(InvalidTableau):
        right_key_direct(parse_tableau(".,1;1", 2))
    with pytest.raises(InvalidTableau):
        left_key_sjdt(SkewTableau(2, ()))


@pytest.mark.parametrize("lam,n", [((1,), 2), ((2, 1), 2), ((2, 2), 2), ((3, 1), 2), ((2, 1), 3), ((1, 1, 1), 3)])
def test_direct_equals_sjdt(lam, n):
    for t in crystal(lam, n).vertices:
        kp, km = right_key_direct(t), left_key_direct(t)
        assert kp == right_key_sjdt(t)
        assert km == left_key_sjdt(t)
        assert is_key_tableau(kp) and is_key_tableau(km)
        assert entrywise_leq(km, t) and entrywise_leq(t, kp)


@pytest.mark.parametrize("shape,n", [((2, 1), 3), ((3, 2), 3), ((2, 2, 1), 3), ((3, 1, 1), 3), ((3, 2, 1), 3), ((4, 2), 3)])
def test_unbarred_tableaux_have_type_a_keys(shape, n):
    for rows in oracles.ssyt(shape, n):
        cols = oracles.rows_to_cols(rows)
        t = SkewTableau(n, tuple(cols))
        assert list(right_key_direct(t).columns) == oracles.right_key_typeA(cols)
        assert list(left_key_direct(t).columns) == oracles.left_key_typeA(cols)


@pytest.mark.parametrize("lam,n", [((2, 1), 2), ((2, 2), 2), ((3, 1), 2), ((2, 1), 3)])
def test_keys_name_the_atoms(lam, n):
    g = crystal(lam, n)
    for v, key in g.keys().items():
        assert {g.vertices[k] for k in g.atom(v)} == {t for t in g.vertices if right_key_direct(t) == key}
        assert {g.vertices[k] for k in g.opposite_atom(v)} == {t for t in g.vertices if left_key_direct(t) == key}
    for t in g.vertices:
        assert key_of_weight(atom_of(t), lam, n) == right_key_direct(t)
        assert weight(left_key_direct(t)) == opposite_atom_of(t)
