"""Right and left keys of KN tableaux, by jeu de taquin and by the direct way."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (
    Column,
    InvalidTableau,
    SkewTableau,
    format_column,
    letter_of_rank,
    rank,
    require_kn,
    sort_letters,
    split_column,
    weight,
)
from .sjdt import swap_adjacent_column_lengths

Trace = Callable[[str], None]


def _straight(t: SkewTableau) -> list[Column]:
    require_kn(t)
    if not t.is_straight or not t.columns:
        raise InvalidTableau("keys are defined for non-empty straight tableaux")
    return [tuple(c) for c in t.columns]


def _fmt(col: Sequence[int]) -> str:
    return "[" + format_column(col) + "]"


# ---------------------------------------------------------------- via SJDT


def right_key_column_sjdt(t: SkewTableau, trace: Trace | None = None) -> Column:
    """First column of the right key: swap the first column to the far right."""
    cols = _straight(t)
    n = t.n
    cur = cols[0]
    for j, nxt in enumerate(cols[1:], start=2):
        if len(nxt) == len(cur):
            cur = nxt
        else:
            _, cur = swap_adjacent_column_lengths(cur, nxt, n)
        if trace is not None:
            trace(f"step {j}: carried column {_fmt(cur)}")
    return split_column(cur, n).right


def left_key_column_sjdt(t: SkewTableau, trace: Trace | None = None) -> Column:
    """Last column of the left key: swap the last column to the far left."""
    cols = _straight(t)
    n = t.n
    cur = cols[-1]
    for j in range(len(cols) - 2, -1, -1):
        prv = cols[j]
        if len(prv) == len(cur):
            cur = prv
        else:
            cur, _ = swap_adjacent_column_lengths(prv, cur, n)
        if trace is not None:
            trace(f"step {j + 1}: carried column {_fmt(cur)}")
    return split_column(cur, n).left


def _suffix(t: SkewTableau, j: int) -> SkewTableau:
    return SkewTableau(t.n, t.columns[j:])


def _prefix(t: SkewTableau, j: int) -> SkewTableau:
    return SkewTableau(t.n, t.columns[: j + 1])


def right_key_sjdt(t: SkewTableau, trace: Trace | None = None) -> SkewTableau:
    _straight(t)
    cols = []
    for j in range(len(t.columns)):
        if trace is not None:
            trace(f"K+ column {j + 1}")
        cols.append(right_key_column_sjdt(_suffix(t, j), trace))
    return SkewTableau(t.n, tuple(cols))


def left_key_sjdt(t: SkewTableau, trace: Trace | None = None) -> SkewTableau:
    _straight(t)
    cols = []
    for j in range(len(t.columns)):
        if trace is not None:
            trace(f"K- column {j + 1}")
        cols.append(left_key_column_sjdt(_prefix(t, j), trace))
    return SkewTableau(t.n, tuple(cols))


# ---------------------------------------------------------------- direct way


@dataclass(frozen=True)
class Matching:
    """Greedy matching between a right split column and the next left split column.

    ``pairs`` holds (index in rC, index in lC).
    """

    pairs: tuple[tuple[int, int], ...]
    unmatched_left: tuple[int, ...]
    unmatched_right: tuple[int, ...]


def match_split_columns(rc: Sequence[int], lc: Sequence[int], n: int) -> Matching:
    """Match each entry of ``lc``, largest first, to the biggest free entry of ``rc`` below it."""
    free = list(range(len(rc)))
    pairs = []
    lost = []
    for j in sorted(range(len(lc)), key=lambda k: rank(lc[k], n), reverse=True):
        cands = [i for i in free if rank(rc[i], n) <= rank(lc[j], n)]
        if not cands:
            lost.append(j)
            continue
        i = max(cands, key=lambda k: rank(rc[k], n))
        free.remove(i)
        pairs.append((i, j))
    return Matching(tuple(sorted(pairs)), tuple(free), tuple(sorted(lost)))


def _smallest_free(a: int, taken: set[int], n: int) -> int:
    for r in range(rank(a, n), 2 * n + 1):
        x = letter_of_rank(r, n)
        if x not in taken and -x not in taken:
            return x
    raise InvalidTableau(f"no free letter above {a}")


def right_key_column_direct(t: SkewTableau, trace: Trace | None = None) -> Column:
    cols = _straight(t)
    n = t.n
    cur = split_column(cols[0], n).right
    for j, nxt in enumerate(cols[1:], start=2):
        sp = split_column(nxt, n)
        m = match_split_columns(cur, sp.left, n)
        acc = set(sp.right)
        added = []
        for i in sorted(m.unmatched_left, key=lambda k: rank(cur[k], n)):
            x = _smallest_free(cur[i], acc, n)
            acc.add(x)
            added.append(x)
        cur = sort_letters(acc, n)
        if trace is not None:
            trace(f"rC{j} gains {_fmt(sort_letters(added, n))} -> {_fmt(cur)}")
    return cur


def _nearest_alive_above(col: Sequence[int], alive: Sequence[bool], s: int) -> int | None:
    for k in range(s - 1, -1, -1):
        if alive[k]:
            return col[k]
    return None


def left_key_column_direct(t: SkewTableau, trace: Trace | None = None) -> Column:
    cols = _straight(t)
    n = t.n
    cur = split_column(cols[-1], n).left
    for j in range(len(cols) - 2, -1, -1):
        sp = split_column(cols[j], n)
        lc, rc = sp.left, sp.right
        m = match_split_columns(rc, cur, n)
        alive_l = [True] * len(lc)
        alive_r = [True] * len(rc)
        removed = []
        for b in sorted(m.unmatched_left, key=lambda k: rank(rc[k], n)):
            hit = None
            for s in range(b, -1, -1):
                if not alive_l[s]:
                    continue
                ne = _nearest_alive_above(rc, alive_r, s)
                if ne is not None and rank(lc[s], n) > rank(ne, n):
                    hit = s
                    break
            if hit is None:
                hit = alive_l.index(True)
            alive_l[hit] = False
            alive_r[b] = False
            removed.append(lc[hit])
        cur = tuple(x for x, keep in zip(lc, alive_l) if keep)
        if trace is not None:
            slid = [rc[i] for i in m.unmatched_left]
            trace(f"lC{j + 1} loses {_fmt(removed)} (rC{j + 1} unmatched {_fmt(sort_letters(slid, n))}) -> {_fmt(cur)}")
    return cur


def right_key_direct(t: SkewTableau, trace: Trace | None = None) -> SkewTableau:
    _straight(t)
    cols = []
    for j in range(len(t.columns)):
        if trace is not None:
            trace(f"K+ column {j + 1}")
        cols.append(right_key_column_direct(_suffix(t, j), trace))
    return SkewTableau(t.n, tuple(cols))


def left_key_direct(t: SkewTableau, trace: Trace | None = None) -> SkewTableau:
    _straight(t)
    cols = []
    for j in range(len(t.columns)):
        if trace is not None:
            trace(f"K- column {j + 1}")
        cols.append(left_key_column_direct(_prefix(t, j), trace))
    return SkewTableau(t.n, tuple(cols))


def right_key(t: SkewTableau) -> SkewTableau:
    return right_key_direct(t)


def left_key(t: SkewTableau) -> SkewTableau:
    return left_key_direct(t)


def atom_of(t: SkewTableau) -> tuple[int, ...]:
    """Weight of the right key, which names the Demazure atom holding ``t``."""
    return weight(right_key(t))


def opposite_atom_of(t: SkewTableau) -> tuple[int, ...]:
    return weight(left_key(t))
