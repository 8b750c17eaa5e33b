"""Column insertion, dual RSK on strict biwords, and cocrystals of KN tableaux.

Columns of a cocrystal vertex are numbered from the right: F_i moves one cell
from column i to column i + 1 by a forward slide, E_i moves it back by a
reverse slide.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    Column,
    InvalidShape,
    KNError,
    ParseError,
    SkewTableau,
    check_letter,
    conjugate,
    format_tableau,
    rank,
    require_kn,
)
from .sjdt import place_columns, transfer_left, transfer_right


class MalformedBiword(KNError):
    pass


# ---------------------------------------------------------------- insertion


def _insert(columns: list[list[int]], x: int, key) -> tuple[int, int]:
    """Column-insert ``x``; return the (row, column) of the new cell."""
    j = 0
    while True:
        if j == len(columns):
            columns.append([x])
            return 0, j
        col = columns[j]
        kx = key(x)
        for i, y in enumerate(col):
            if key(y) >= kx:
                col[i], x = x, y
                break
        else:
            col.append(x)
            return len(col) - 1, j
        j += 1


def column_insert(word: Sequence[int], n: int) -> SkewTableau:
    """Column-insert the letters of ``word`` from left to right."""
    columns: list[list[int]] = []
    for x in word:
        check_letter(x, n)
        _insert(columns, x, lambda y: rank(y, n))
    return SkewTableau(n, tuple(tuple(c) for c in columns))


def column_reading_word(t: SkewTableau) -> tuple[int, ...]:
    """Columns from right to left, each read top to bottom."""
    return tuple(x for col in reversed(t.columns) for x in col)


# ---------------------------------------------------------------- biwords


@dataclass(frozen=True)
class Biword:
    pairs: tuple[tuple[int, int], ...]

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pairs)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.pairs)

    def __str__(self) -> str:
        return " ".join(f"{a}:{b}" for a, b in self.pairs)


def parse_biword(text: str) -> Biword:
    pairs = []
    for tok in text.split():
        try:
            a, b = tok.split(":")
            pairs.append((int(a), int(b)))
        except ValueError:
            raise ParseError(f"bad biletter {tok!r}; expected top:bottom") from None
    return Biword(tuple(pairs))


def check_biword(w: Biword, n: int, r: int | None = None) -> None:
    for a, b in w.pairs:
        if a < 1 or (r is not None and a > r):
            raise MalformedBiword(f"top letter {a} outside 1..{r}")
        if not 1 <= b <= n:
            raise MalformedBiword(f"bottom letter {b} outside 1..{n}")
    for p, q in zip(w.pairs, w.pairs[1:]):
        if not (p[0] < q[0] or (p[0] == q[0] and p[1] < q[1])):
            raise MalformedBiword(f"biletters {p} and {q} are not strictly increasing")


def biword_of(t: SkewTableau) -> Biword:
    """Top letter = column index counted from the right, bottom = entry."""
    k = len(t.columns)
    return Biword(tuple((k - j, x) for j in range(k - 1, -1, -1) for x in t.columns[j]))


def columns_of_biword(w: Biword, r: int, n: int) -> SkewTableau:
    cols: list[list[int]] = [[] for _ in range(r)]
    for a, b in w.pairs:
        if not 1 <= a <= r:
            raise MalformedBiword(f"top letter {a} outside 1..{r}")
        cols[r - a].append(b)
    return place_columns([tuple(sorted(c, key=lambda x: rank(x, n))) for c in cols], n)


def dual_rsk(w: Biword, n: int, r: int | None = None) -> tuple[SkewTableau, SkewTableau]:
    """Insert bottoms by columns; record tops in the transposed cell of Q."""
    check_biword(w, n, r)
    r = max(w.top, default=0) if r is None else r
    columns: list[list[int]] = []
    qrows: list[list[int]] = []
    for a, b in w.pairs:
        row, col = _insert(columns, b, lambda y: y)
        # P gained (row, col); Q gains (col, row)
        while len(qrows) <= col:
            qrows.append([])
        if len(qrows[col]) != row:
            raise MalformedBiword("insertion broke the conjugate-shape bookkeeping")
        qrows[col].append(a)
    P = SkewTableau(n, tuple(tuple(c) for c in columns))
    Q = SkewTableau.from_rows(qrows, max(r, 1))
    return P, Q


# ---------------------------------------------------------------- cocrystals


def _pair_index(r: int, i: int) -> tuple[int, int]:
    if not 1 <= i <= r - 1:
        raise KNError(f"cocrystal index {i} outside 1..{r - 1}")
    return r - i - 1, r - i


def _padded(t: SkewTableau, r: int | None) -> list[Column]:
    cols = [tuple(c) for c in t.columns]
    r = len(cols) if r is None else r
    if r < len(cols):
        raise InvalidShape(f"r={r} is smaller than the number of columns")
    return cols + [()] * (r - len(cols))


def cocrystal_lower(x: SkewTableau, i: int, r: int | None = None) -> SkewTableau | None:
    """F_i: one cell from column i (from the right) to column i + 1."""
    cols = _padded(x, r)
    a, b = _pair_index(len(cols), i)
    out = transfer_left(cols[a], cols[b], x.n)
    if out is None:
        return None
    cols[a], cols[b] = out.columns
    return place_columns(cols, x.n)


def cocrystal_raise(x: SkewTableau, i: int, r: int | None = None) -> SkewTableau | None:
    """E_i: one cell from column i + 1 (from the right) to column i."""
    cols = _padded(x, r)
    a, b = _pair_index(len(cols), i)
    out = transfer_right(cols[a], cols[b], x.n)
    if out is None:
        return None
    cols[a], cols[b] = out.columns
    return place_columns(cols, x.n)


def cocrystal_weight(x: SkewTableau) -> tuple[int, ...]:
    """Column lengths read from right to left."""
    return tuple(len(c) for c in reversed(x.columns))


@dataclass
class Cocrystal:
    base: SkewTableau
    r: int
    vertices: list[SkewTableau]
    index: dict[SkewTableau, int]
    down: dict[tuple[int, int], int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int, int]]:
        return sorted((a, i, b) for (a, i), b in self.down.items())

    def keys(self) -> list[SkewTableau]:
        target = sorted(cocrystal_weight(self.base))
        return sorted(
            (v for v in self.vertices if sorted(cocrystal_weight(v)) == target), key=format_tableau
        )

    def to_json(self) -> dict:
        labels = [format_tableau(v) for v in self.vertices]
        order = sorted(range(len(labels)), key=lambda k: labels[k])
        rename = {k: q for q, k in enumerate(order)}
        return {
            "n": self.base.n,
            "r": self.r,
            "base": format_tableau(self.base),
            "vertices": [
                {"id": rename[k], "columns": [list(c) for c in self.vertices[k].columns], "tableau": labels[k],
                 "weight": list(cocrystal_weight(self.vertices[k]))}
                for k in order
            ],
            "edges": sorted(
                ({"from": rename[a], "to": rename[b], "i": i} for a, i, b in self.edges()),
                key=lambda e: (e["from"], e["i"]),
            ),
        }

    def to_dot(self) -> str:
        from .crystal import graph_to_dot

        return graph_to_dot(
            [format_tableau(v) for v in self.vertices], self.edges(), name="cocrystal", label=lambda i: f"F{i}"
        )


def generate_cocrystal(t: SkewTableau, r: int | None = None) -> Cocrystal:
    """Closure of the straight tableau ``t`` under every F_i and E_i."""
    require_kn(t)
    if not t.is_straight:
        raise InvalidShape("the cocrystal is generated from a straight tableau")
    cols = _padded(t, r)
    r = len(cols)
    base = place_columns(cols, t.n)
    vertices = [base]
    index = {base: 0}
    down: dict[tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        x = vertices[a]
        for i in range(1, r):
            for op, forward in ((cocrystal_lower, True), (cocrystal_raise, False)):
                y = op(x, i, r)
                if y is None:
                    continue
                if y not in index:
                    index[y] = len(vertices)
                    vertices.append(y)
                    queue.append(index[y])
                b = index[y]
                if forward:
                    down[(a, i)] = b
                else:
                    down[(b, i)] = a
    return Cocrystal(base, r, vertices, index, down)


def cocrystal_keys(t: SkewTableau, r: int | None = None) -> list[SkewTableau]:
    return generate_cocrystal(t, r).keys()


def ssyt_count(shape: Sequence[int], r: int) -> int:
    """Number of SSYT of a straight shape with entries in 1..r (hook content formula)."""
    from fractions import Fraction

    shape = [p for p in shape if p]
    conj = conjugate(shape)
    acc = Fraction(1)
    for i, row in enumerate(shape):
        for j in range(row):
            hook = row - j + conj[j] - i - 1
            acc *= Fraction(r + j - i, hook)
    return int(acc)
