import math
import warnings

import pytest

import oracles
from symkeys.core import format_tableau, parse_tableau
from symkeys.crystal import (
    InvalidGenerator,
    LaurentPolynomial,
    NonReducedWordWarning,
    apply_word,
    character_via_keys,
    coroot_pairing,
    crystal,
    demazure_atom,
    demazure_atom_character,
    demazure_character,
    demazure_crystal,
    epsilon,
    full_character,
    is_reduced,
    lower,
    opposite_atom_character,
    opposite_demazure_character,
    opposite_demazure_crystal,
    orbit,
    raise_,
    reduced_word_for,
    varphi,
)

# Vertices of the (2,1), n=2 crystal drawing: literal and plane position.
NODES = {
    "n0": ("1,1;2", (0, 14.5)),
    "n1l": ("1,2;2", (-3.5, 13.5)),
    "n1r": ("1,1;-2", (3.5, 13.5)),
    "n2l": ("1,-2;2", (-3.5, 11)),
    "n2r": ("1,2;-2", (3.5, 11)),
    "n3r": ("2,2;-2", (3.5, 8.5)),
    "n4rr": ("2,2;-1", (5, 6)),
    "n4r": ("2,-2;-2", (2, 6)),
    "n5r": ("2,-2;-1", (3.5, 3.5)),
    "n6r": ("-2,-2;-1", (3.5, 1)),
    "n3ll": ("1,-2;-2", (-5, 8.5)),
    "n4l": ("1,-1;-2", (-3.5, 6)),
    "n3l": ("1,-1;2", (-2, 8.5)),
    "n5l": ("2,-1;-2", (-3.5, 3.5)),
    "n6l": ("2,-1;-1", (-3.5, 1)),
    "n7": ("-2,-1;-1", (0, 0)),
}

# Arrows of the drawing, read off as (source, target, i); blue is 1, red is 2.
EDGES = [
    ("n6l", "n7", 2), ("n6r", "n7", 1), ("n5l", "n6l", 1), ("n5r", "n6r", 2),
    ("n4l", "n5l", 1), ("n4r", "n5r", 1), ("n4rr", "n5r", 2), ("n3l", "n4l", 2),
    ("n3ll", "n4l", 1), ("n3r", "n4rr", 1), ("n3r", "n4r", 2), ("n2l", "n3l", 1),
    ("n2l", "n3ll", 2), ("n2r", "n3r", 1), ("n1l", "n2l", 2), ("n1r", "n2r", 1),
    ("n0", "n1l", 1), ("n0", "n1r", 2),
]

# The atom drawings cut the plane with rays from one centre point.
ATOM_RAYS = ((0, 12.5), [(-3.5, 15.5), (3.5, 15.5), (5, 3.5), (-5, 7), (-2, -0.5), (2, -0.5), (-5, 12.5), (5, 12.5)])
OPPOSITE_RAYS = ((0, 2.5), [(-5, 2), (5, 2), (-2, 15.5), (2, 15.5), (6, 9), (-5.5, 12.5), (-2, -0.5), (2, -0.5)])


def _sectors(centre, ends):
    cx, cy = centre
    cuts = sorted(math.atan2(y - cy, x - cx) for x, y in ends)
    parts = {}
    for lit, (x, y) in NODES.values():
        a = math.atan2(y - cy, x - cx)
        k = sum(1 for c in cuts if c < a) % len(cuts)
        parts.setdefault(k, set()).add(lit)
    return sorted(parts.values(), key=sorted)


def _literals(g, ids):
    return {format_tableau(g.vertices[k]) for k in ids}


def test_drawn_crystal():
    g = crystal((2, 1), 2)
    assert len(g) == 16
    assert {format_tableau(v) for v in g.vertices} == {lit for lit, _ in NODES.values()}
    drawn = {(NODES[a][0], NODES[b][0], i) for a, b, i in EDGES}
    ours = {(format_tableau(g.vertices[a]), format_tableau(g.vertices[b]), i) for a, i, b in g.edges()}
    assert ours == drawn


@pytest.mark.parametrize(
    "lam,n", [((1,), 2), ((1, 1), 2), ((2, 1), 2), ((2, 2), 2), ((3, 1), 2), ((2, 1), 3), ((1, 1, 1), 3), ((2, 2), 3)]
)
def test_crystal_is_every_kn_tableau(lam, n):
    g = crystal(lam, n)
    brute = set(oracles.kn_tableaux(lam, n))
    assert {v.columns for v in g.vertices} == brute


def test_small_counts():
    assert len(crystal((2, 1), 2)) == 16
    assert len(crystal((1, 1), 2)) == 5
    assert len(crystal((1,), 2)) == 4


def test_string_lengths():
    g = crystal((2, 1), 2)
    for t in g.vertices:
        for i in (1, 2):
            k, x = 0, t
            while (x := lower(x, i)) is not None:
                k += 1
            assert k == varphi(t, i)
            k, x = 0, t
            while (x := raise_(x, i)) is not None:
                k += 1
            assert k == epsilon(t, i)
            assert varphi(t, i) - epsilon(t, i) == coroot_pairing(t.weight(), i, 2)


def test_invalid_generator():
    with pytest.raises(InvalidGenerator):
        lower(parse_tableau("1,1;2", 2), 3)


def test_weyl_group():
    assert len(orbit((2, 1), 2)) == 8
    for v in orbit((2, 1), 2):
        w = reduced_word_for(v, (2, 1))
        assert apply_word(w, (2, 1)) == v
        assert is_reduced(w, 2)
    assert not is_reduced((1, 1), 2)
    assert reduced_word_for((2, 1), (2, 1)) == ()


def test_atoms_match_drawing():
    g = crystal((2, 1), 2)
    atoms = sorted((_literals(g, g.atom(v)) for v in orbit((2, 1), 2)), key=sorted)
    assert atoms == _sectors(*ATOM_RAYS)
    opp = sorted((_literals(g, g.opposite_atom(v)) for v in orbit((2, 1), 2)), key=sorted)
    assert opp == _sectors(*OPPOSITE_RAYS)


@pytest.mark.parametrize("lam,n", [((2, 1), 2), ((2, 2), 2), ((2, 1), 3), ((1, 1), 3)])
def test_atoms_partition_with_one_key_each(lam, n):
    g = crystal(lam, n)
    keys = g.keys()
    for fam in (g.atom, g.opposite_atom):
        seen = set()
        for v, key in keys.items():
            ids = fam(v)
            assert not (ids & seen)
            seen |= ids
            inside = [k for k in keys.values() if g.index[k] in ids]
            assert inside == [key]
        assert seen == set(range(len(g)))


def test_demazure_extremes():
    g = crystal((2, 1), 2)
    assert demazure_crystal((2, 1), 2, ()) == [g.highest]
    longest = reduced_word_for((-2, -1), (2, 1))
    assert len(demazure_crystal((2, 1), 2, longest)) == 16
    assert len(opposite_demazure_crystal((2, 1), 2, ())) == 1


def test_demazure_independent_of_reduced_word():
    assert demazure_crystal((2, 1), 2, (1, 2, 1, 2)) == demazure_crystal((2, 1), 2, (2, 1, 2, 1))


def test_non_reduced_word_warns():
    with pytest.warns(NonReducedWordWarning):
        demazure_crystal((2, 1), 2, (1, 1))


def test_character_identities():
    lam, n = (2, 1), 2
    total = LaurentPolynomial(n, {})
    for v in orbit(lam, n):
        kv = demazure_character(lam, n, v)
        neg = tuple(-x for x in v)
        assert kv == opposite_demazure_character(lam, n, neg).invert()
        assert character_via_keys(lam, n, v, "direct") == kv
        assert character_via_keys(lam, n, v, "sjdt") == kv
        total = total + demazure_atom_character(lam, n, v)
    full = full_character(lam, n)
    assert total == full
    for i in range(1, n + 1):
        assert full.act(i) == full
    assert full.evaluate_at_one() == 16


def test_opposite_atoms_sum_to_full():
    lam, n = (2, 2), 3
    total = LaurentPolynomial(n, {})
    for v in orbit(lam, n):
        total = total + opposite_atom_character(lam, n, v)
    assert total == full_character(lam, n)


def test_laurent_arithmetic():
    x = LaurentPolynomial(2, {(1, 0): 1})
    y = LaurentPolynomial(2, {(0, -1): 2})
    p = (x + y) * (x - y)
    assert p == LaurentPolynomial(2, {(2, 0): 1, (0, -2): -4})
    assert str(p) == "x1^2 - 4*x2^-2"
    assert p.invert().invert() == p
    assert (p - p) == LaurentPolynomial(2, {})
    assert p.to_json() == {"n": 2, "monomials": [{"exp": [2, 0], "coef": 1}, {"exp": [0, -2], "coef": -4}]}


def test_exports_are_sorted_and_complete():
    g = crystal((2, 1), 2)
    dot = g.to_dot()
    assert dot.count("label=\"") == 16 + 18
    data = g.to_json()
    assert [v["tableau"] for v in data["vertices"]] == sorted(v["tableau"] for v in data["vertices"])
    assert len(data["edges"]) == 18


def test_atom_list_api():
    assert [format_tableau(t) for t in demazure_atom((2, 1), 2, (1, -2))] == ["1,-2;-2", "1,-2;2"]
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        demazure_crystal((2, 1), 2, (1, 2))
