"""Deterministic generators of KN skew tableaux for property tests."""
from __future__ import annotations

import random

from symkeys.crystal import crystal
from symkeys.sjdt import NonMinimalInput, outer_cells, reverse_slide

SHAPES = {
    2: [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1), (3, 2)],
    3: [(2, 1), (1, 1, 1), (2, 2), (2, 1, 1), (3, 1), (2, 2, 1)],
}


def grow(t, rng: random.Random, slides: int):
    """Apply reverse slides at random outer cells; slides that would not be minimal are skipped."""
    for _ in range(slides):
        cells = outer_cells(t)
        rng.shuffle(cells)
        for col in cells:
            try:
                t, _ = reverse_slide(t, col)
                break
            except NonMinimalInput:
                continue
    return t


def minimal_skew_tableaux(count: int, seed: int = 7):
    """Pairs (straight vertex, skew tableau rectifying to it), n <= 3."""
    rng = random.Random(seed)
    pool = [(n, lam) for n, lams in SHAPES.items() for lam in lams]
    out = []
    while len(out) < count:
        n, lam = rng.choice(pool)
        t = rng.choice(crystal(lam, n).vertices)
        x = grow(t, rng, rng.randint(1, 4))
        if x != t:
            out.append((t, x))
    return out
