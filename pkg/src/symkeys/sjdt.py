"""Symplectic jeu de taquin: elementary slides, rectification and reshaping.

A punctured tableau keeps the puncture as ``None`` inside one column. Every
decision is taken on the split form, but the stored state is always the
unsplit filling.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (
    Column,
    InvalidShape,
    InvalidTableau,
    KNError,
    NotAdmissible,
    NotCoadmissible,
    SkewTableau,
    admissibility_check,
    format_column,
    phi,
    phi_inverse,
    rank,
    require_kn,
    sort_letters,
    split_column,
    weight,
)


class NotAdmissiblePair(KNError):
    pass


class NonMinimalInput(KNError):
    pass


class NotAPermutation(KNError):
    pass


class SlideGeometryError(RuntimeError):
    """A slide ended somewhere the column-swap logic does not allow."""


# Tests switch this on so that every elementary step re-checks the weight.
CHECK_INVARIANTS = False
STEPS_CHECKED = 0

VERTICAL, HORIZONTAL_BARRED, HORIZONTAL_UNBARRED, TERMINAL = "V", "HB", "HU", "T"


@dataclass(frozen=True)
class PuncturedTableau:
    n: int
    columns: tuple[tuple[int | None, ...], ...]
    tops: tuple[int, ...]

    @property
    def puncture(self) -> tuple[int, int]:
        """(row, column) of the puncture."""
        for j, col in enumerate(self.columns):
            if None in col:
                return self.tops[j] + col.index(None), j
        raise ValueError("no puncture")

    def filled(self) -> SkewTableau:
        return SkewTableau(self.n, tuple(tuple(x for x in c if x is not None) for c in self.columns), self.tops)


@dataclass(frozen=True)
class SlideOutcome:
    kind: str
    result: PuncturedTableau | SkewTableau
    letter: int | None = None
    lost: int | None = None
    at: tuple[int, int] = (0, 0)

    @property
    def cells_lost(self) -> int:
        return 0 if self.lost is None else 2

    def line(self) -> str:
        r, c = self.at
        if self.kind == VERTICAL:
            return f"V {r + 1} {c + 1}"
        if self.kind == TERMINAL:
            return f"T {r + 1} {c + 1}"
        tail = f" lost {self.lost}" if self.lost is not None else ""
        return f"{self.kind} {self.letter}{tail}"


Trace = Callable[[str], None]


def _split_punctured(col: Sequence[int | None], n: int) -> tuple[list, list]:
    p = col.index(None)
    sp = split_column(tuple(x for x in col if x is not None), n)
    left, right = list(sp.left), list(sp.right)
    left.insert(p, None)
    right.insert(p, None)
    return left, right


def _entry_at(cols, tops, j: int, row: int):
    if not 0 <= j < len(cols):
        return None
    i = row - tops[j]
    c = cols[j]
    return c[i] if 0 <= i < len(c) else None


def _coadmissible_inverse(letters, n: int, error=NotAdmissiblePair) -> list[int]:
    try:
        return list(phi_inverse(sort_letters(letters, n), n))
    except NotCoadmissible as exc:
        raise error(str(exc)) from None


def _forward_step(cols: list[list], tops: list[int], n: int) -> SlideOutcome:
    c = next(j for j, col in enumerate(cols) if None in col)
    col = cols[c]
    p = col.index(None)
    row = tops[c] + p
    try:
        _, rc = _split_punctured(col, n)
        alpha = rc[p + 1] if p + 1 < len(col) else None
        beta = None
        if _entry_at(cols, tops, c + 1, row) is not None:
            beta = split_column(tuple(cols[c + 1]), n).left[row - tops[c + 1]]
    except NotAdmissible as exc:
        raise NotAdmissiblePair(str(exc)) from None
    if alpha is None and beta is None:
        if p != len(col) - 1:
            raise NotAdmissiblePair("puncture stranded inside a column")
        col.pop()
        return SlideOutcome(TERMINAL, None, at=(row, c))
    if beta is None or (alpha is not None and rank(alpha, n) <= rank(beta, n)):
        col[p], col[p + 1] = col[p + 1], None
        return SlideOutcome(VERTICAL, None, at=(row, c))
    left_entries = [x for x in col if x is not None]
    right = cols[c + 1]
    q = row - tops[c + 1]
    if beta < 0:
        # beta leaves C2 and joins Phi(C1)
        right[q] = None
        cols[c] = _coadmissible_inverse(list(phi(tuple(left_entries), n)) + [beta], n)
        return SlideOutcome(HORIZONTAL_BARRED, None, letter=beta, at=(row, c))
    # beta leaves Phi(C2) and joins C1
    phi2 = list(phi(tuple(right), n))
    if phi2[q] != beta:
        raise NotAdmissiblePair("split form and Phi disagree on the slid letter")
    del phi2[q]
    new_right = _coadmissible_inverse(phi2, n)
    new_right.insert(q, None)
    cols[c + 1] = new_right
    new_left = list(sort_letters(left_entries + [beta], n))
    lost = None
    res = admissibility_check(new_left, n)
    if not res.ok:
        lost = res.z
        new_left = [x for x in new_left if abs(x) != lost]
        tops[c] += 1
        if not admissibility_check(new_left, n).ok:
            raise NotAdmissiblePair("column still breaks 1CC after the erasure")
    cols[c] = new_left
    return SlideOutcome(HORIZONTAL_UNBARRED, None, letter=beta, lost=lost, at=(row, c))


def _reverse_step(cols: list[list], tops: list[int], n: int) -> SlideOutcome:
    c = next(j for j, col in enumerate(cols) if None in col)
    col = cols[c]
    p = col.index(None)
    row = tops[c] + p
    try:
        lc, _ = _split_punctured(col, n)
        x = lc[p - 1] if p >= 1 else None
        y = None
        if _entry_at(cols, tops, c - 1, row) is not None:
            y = split_column(tuple(cols[c - 1]), n).right[row - tops[c - 1]]
    except NotAdmissible as exc:
        raise NotAdmissiblePair(str(exc)) from None
    if x is None and y is None:
        if p != 0:
            raise NotAdmissiblePair("puncture stranded inside a column")
        col.pop(0)
        tops[c] += 1
        return SlideOutcome(TERMINAL, None, at=(row, c))
    if y is None or (x is not None and rank(x, n) >= rank(y, n)):
        col[p - 1], col[p] = None, col[p - 1]
        return SlideOutcome(VERTICAL, None, at=(row, c))
    right_entries = [e for e in col if e is not None]
    left = cols[c - 1]
    q = row - tops[c - 1]
    if y < 0:
        # y leaves Phi(C1) and joins C2
        phi1 = list(phi(tuple(left), n))
        if phi1[q] != y:
            raise NotAdmissiblePair("split form and Phi disagree on the slid letter")
        del phi1[q]
        new_left = _coadmissible_inverse(phi1, n)
        new_left.insert(q, None)
        cols[c - 1] = new_left
        new_right = list(sort_letters(right_entries + [y], n))
        if not admissibility_check(new_right, n).ok:
            raise NonMinimalInput(
                f"reverse slide would need the non-admissible column [{format_column(new_right)}]"
            )
        cols[c] = new_right
        return SlideOutcome(HORIZONTAL_BARRED, None, letter=y, at=(row, c))
    # y leaves C1 and joins Phi(C2)
    left[q] = None
    cols[c] = _coadmissible_inverse(list(phi(tuple(right_entries), n)) + [y], n, NonMinimalInput)
    return SlideOutcome(HORIZONTAL_UNBARRED, None, letter=y, at=(row, c))


def _freeze(cols, tops, n) -> PuncturedTableau:
    return PuncturedTableau(n, tuple(tuple(c) for c in cols), tuple(tops))


def _step(pt: PuncturedTableau, forward: bool) -> SlideOutcome:
    cols = [list(c) for c in pt.columns]
    tops = list(pt.tops)
    before = weight(pt.filled()) if CHECK_INVARIANTS else None
    out = (_forward_step if forward else _reverse_step)(cols, tops, pt.n)
    if out.kind == TERMINAL:
        result = SkewTableau(pt.n, tuple(tuple(c) for c in cols), tuple(tops))
    else:
        result = _freeze(cols, tops, pt.n)
    if CHECK_INVARIANTS:
        after = weight(result.filled() if isinstance(result, PuncturedTableau) else result)
        assert before == after, f"slide changed the weight: {before} -> {after}"
        global STEPS_CHECKED
        STEPS_CHECKED += 1
    return SlideOutcome(out.kind, result, out.letter, out.lost, out.at)


def elementary_forward_slide(pt: PuncturedTableau) -> SlideOutcome:
    """One step of a forward slide (the puncture moves down or right)."""
    return _step(pt, True)


def elementary_reverse_slide(pt: PuncturedTableau) -> SlideOutcome:
    """One step of a reverse slide (the puncture moves up or left)."""
    return _step(pt, False)


def puncture_inner_corner(t: SkewTableau, col: int) -> PuncturedTableau:
    """Puncture the inner corner sitting on top of column ``col``."""
    tops = list(t.tops)
    if tops[col] <= 0 or (col + 1 < len(tops) and tops[col + 1] >= tops[col]):
        raise InvalidShape(f"no inner corner above column {col + 1}")
    cols = [list(c) for c in t.columns]
    cols[col].insert(0, None)
    tops[col] -= 1
    return _freeze(cols, tops, t.n)


def puncture_outer_cell(t: SkewTableau, col: int) -> PuncturedTableau:
    """Puncture the addable outer cell at the bottom of column ``col``."""
    cols = [list(c) for c in t.columns]
    tops = list(t.tops)
    if col == len(cols):
        cols.append([])
        tops.append(0)
    bottom = tops[col] + len(cols[col])
    if col > 0 and tops[col - 1] + len(cols[col - 1]) <= bottom:
        raise InvalidShape(f"no outer cell below column {col + 1}")
    cols[col].append(None)
    return _freeze(cols, tops, t.n)


def _run(pt: PuncturedTableau, forward: bool, trace: Trace | None):
    outcomes = []
    while True:
        out = _step(pt, forward)
        outcomes.append(out)
        if trace is not None:
            trace(out.line())
        if out.kind == TERMINAL:
            return out.result, outcomes
        pt = out.result


def forward_slide(t: SkewTableau, col: int, trace: Trace | None = None) -> tuple[SkewTableau, list[SlideOutcome]]:
    return _run(puncture_inner_corner(t, col), True, trace)


def reverse_slide(t: SkewTableau, col: int, trace: Trace | None = None) -> tuple[SkewTableau, list[SlideOutcome]]:
    return _run(puncture_outer_cell(t, col), False, trace)


def inner_corners(t: SkewTableau) -> list[int]:
    """Columns carrying an inner corner on top of them."""
    tops = t.tops
    return [j for j, top in enumerate(tops) if top > 0 and (j + 1 == len(tops) or tops[j + 1] < top)]


def outer_cells(t: SkewTableau) -> list[int]:
    """Columns (possibly one past the last) with an addable outer cell below."""
    b = t.bottoms
    out = [j for j in range(len(b)) if j == 0 or b[j - 1] > b[j]]
    if b and b[-1] > 0:
        out.append(len(b))
    return out


def rectify(t: SkewTableau, choose: Callable[[list[int]], int] | None = None, trace: Trace | None = None) -> SkewTableau:
    """Rectify a KN skew tableau. ``choose`` picks among inner-corner columns."""
    require_kn(t)
    while True:
        corners = inner_corners(t)
        if not corners:
            break
        col = corners[-1] if choose is None else choose(corners)
        t, _ = forward_slide(t, col, trace)
    out = t.normalized()
    if not out.is_straight:
        raise InvalidTableau("rectification did not reach a straight shape")
    return out


# ---------------------------------------------------------------- column pairs


def _pair_fits(left: Column, right: Column, d: int, n: int) -> bool:
    """Rows of the split form weakly increase when ``right`` sits ``d`` rows below ``left``'s top."""
    rl = split_column(left, n).right
    lr = split_column(right, n).left
    for i, b in enumerate(lr):
        k = i + d
        if 0 <= k < len(rl) and rank(rl[k], n) > rank(b, n):
            return False
    return True


def pair_offset(left: Column, right: Column, n: int) -> int:
    """Offset top(right) - top(left) giving the largest overlap that stays semistandard."""
    p, q = len(left), len(right)
    for d in range(min(0, p - q), -q - 1, -1):
        if d == -q or _pair_fits(left, right, d, n):
            return d
    return -q


def place_columns(columns: Sequence[Column], n: int) -> SkewTableau:
    """Lay out a sequence of columns with maximal overlap between neighbours."""
    tops = [0]
    for a, b in zip(columns, columns[1:]):
        tops.append(tops[-1] + pair_offset(a, b, n))
    if columns:
        m = min(tops)
        tops = [t - m for t in tops]
    return SkewTableau(n, tuple(tuple(c) for c in columns), tuple(tops) if columns else ())


def transfer_left(left: Column, right: Column, n: int, trace: Trace | None = None, tops=None):
    """Forward slide moving one cell of ``right`` into ``left``; None if impossible."""
    t = _pair_tableau(left, right, n, tops)
    if t.tops[0] <= t.tops[1]:
        return None
    out, _ = forward_slide(t, 0, trace)
    if len(out.columns) < 2 or len(out.columns[0]) != len(left) + 1:
        raise SlideGeometryError("forward slide did not move a cell into the left column")
    return out


def transfer_right(left: Column, right: Column, n: int, trace: Trace | None = None, tops=None):
    """Reverse slide moving one cell of ``left`` into ``right``; None if impossible."""
    t = _pair_tableau(left, right, n, tops)
    if t.bottoms[1] >= t.bottoms[0]:
        return None
    out, _ = reverse_slide(t, 1, trace)
    if len(out.columns[1]) != len(right) + 1:
        raise SlideGeometryError("reverse slide did not move a cell into the right column")
    return out


def _pair_tableau(left: Column, right: Column, n: int, tops=None) -> SkewTableau:
    if tops is None:
        d = pair_offset(left, right, n)
        tops = (max(0, -d), max(0, -d) + d)
    return SkewTableau(n, (tuple(left), tuple(right)), tuple(tops))


def swap_adjacent_column_lengths(left: Sequence[int], right: Sequence[int], n: int, trace: Trace | None = None) -> tuple[Column, Column]:
    """Exchange the lengths of two adjacent columns inside their Knuth class."""
    left, right = tuple(left), tuple(right)
    p, q = len(left), len(right)
    if p == q:
        return left, right
    t = _pair_tableau(left, right, n)
    require_kn(t)
    move = transfer_right if p > q else transfer_left
    for _ in range(abs(p - q)):
        t = move(t.columns[0], t.columns[1], n, trace, t.tops)
        if t is None:
            raise SlideGeometryError("column pair cannot be reshaped")
    a, b = t.columns
    final = _pair_tableau(a, b, n)
    if (final.tops[1] - final.tops[0]) != (t.tops[1] - t.tops[0]):
        raise SlideGeometryError("swapped pair is not in maximal-overlap position")
    return a, b


def reshape(t: SkewTableau, target_lengths: Sequence[int], trace: Trace | None = None) -> SkewTableau:
    """The tableau of the same Knuth class with the requested column lengths."""
    cols = [tuple(c) for c in t.columns]
    target = list(target_lengths)
    if sorted(target) != sorted(len(c) for c in cols):
        raise NotAPermutation(f"{tuple(target)} is not a permutation of {tuple(len(c) for c in cols)}")
    # destination of each column: k-th column of a length goes to its k-th slot
    slots: dict[int, list[int]] = {}
    for i, L in enumerate(target):
        slots.setdefault(L, []).append(i)
    dest = [slots[len(c)].pop(0) for c in cols]
    changed = True
    while changed:
        changed = False
        for j in range(len(cols) - 1):
            if dest[j] > dest[j + 1]:
                cols[j], cols[j + 1] = swap_adjacent_column_lengths(cols[j], cols[j + 1], t.n, trace)
                dest[j], dest[j + 1] = dest[j + 1], dest[j]
                if trace is not None:
                    trace("SWAP " + str(j + 1) + " " + ";".join(format_column(c) for c in cols))
                changed = True
    return place_columns(cols, t.n)


def swap_sequence(t: SkewTableau, positions: Sequence[int], trace: Trace | None = None) -> list[SkewTableau]:
    """Apply length swaps at the given 0-based positions, returning every stage."""
    cols = [tuple(c) for c in t.columns]
    stages = []
    for j in positions:
        cols[j], cols[j + 1] = swap_adjacent_column_lengths(cols[j], cols[j + 1], t.n, trace)
        stages.append(place_columns(cols, t.n))
    return stages
