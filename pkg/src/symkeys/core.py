"""Letters, admissible columns and Kashiwara-Nakashima tableaux of type C_n.

Letters are nonzero integers. A positive ``k`` is the letter k and ``-k`` is
its barred partner. The alphabet order is 1 < 2 < ... < n < -n < ... < -1,
so every comparison goes through :func:`rank`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Column = tuple[int, ...]


class KNError(ValueError):
    """Base class for every input error raised by this package."""


class ParseError(KNError):
    pass


class NotAdmissible(KNError):
    pass


class SplitImpossible(NotAdmissible):
    pass


class NotCoadmissible(KNError):
    pass


class InvalidTableau(KNError):
    pass


class InvalidShape(KNError):
    pass


class WeightNotInOrbit(KNError):
    pass


class AlphabetMismatch(KNError):
    pass


# ---------------------------------------------------------------- letters


def rank(x: int, n: int) -> int:
    """Position of ``x`` in 1 < ... < n < -n < ... < -1 (1-based)."""
    return x if x > 0 else 2 * n + 1 + x


def letter_of_rank(r: int, n: int) -> int:
    return r if r <= n else r - 2 * n - 1


def bar(x: int) -> int:
    return -x


def check_letter(x: int, n: int) -> None:
    if not isinstance(x, int) or x == 0 or abs(x) > n:
        raise AlphabetMismatch(f"letter {x!r} is not in the alphabet [+-{n}]")


def sort_letters(letters: Iterable[int], n: int) -> Column:
    return tuple(sorted(letters, key=lambda x: rank(x, n)))


def is_column(entries: Sequence[int], n: int) -> bool:
    return all(rank(a, n) < rank(b, n) for a, b in zip(entries, entries[1:]))


def format_column(col: Sequence[int]) -> str:
    return ",".join(str(x) for x in col)


def parse_column(text: str, n: int) -> Column:
    text = text.strip()
    if not text:
        return ()
    try:
        col = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad column literal {text!r}") from exc
    for x in col:
        check_letter(x, n)
    if not is_column(col, n):
        raise InvalidTableau(f"column {text!r} is not strictly increasing")
    return col


# ---------------------------------------------------------------- columns


@dataclass(frozen=True)
class Admissible:
    ok = True


@dataclass(frozen=True)
class BreaksAt:
    z: int
    ok = False


def symmetric_pairs(col: Sequence[int]) -> tuple[int, ...]:
    """Unbarred z with both z and -z in the column, largest first."""
    s = set(col)
    return tuple(sorted((x for x in s if x > 0 and -x in s), reverse=True))


def admissibility_check(col: Sequence[int], n: int) -> Admissible | BreaksAt:
    for z in reversed(symmetric_pairs(col)):
        if sum(1 for x in col if abs(x) <= z) > z:
            return BreaksAt(z)
    return Admissible()


def is_admissible(col: Sequence[int], n: int) -> bool:
    return admissibility_check(col, n).ok


def is_coadmissible(col: Sequence[int], n: int) -> bool:
    for z in symmetric_pairs(col):
        if sum(1 for x in col if abs(x) >= z) > n - z + 1:
            return False
    return True


@dataclass(frozen=True)
class Split:
    left: Column
    right: Column
    I: tuple[int, ...]
    J: tuple[int, ...]


@lru_cache(maxsize=1 << 16)
def _split(col: Column, n: int) -> Split:
    res = admissibility_check(col, n)
    if not res.ok:
        raise NotAdmissible(f"column [{format_column(col)}] breaks 1CC at {res.z}")
    I = symmetric_pairs(col)
    if not I:
        return Split(col, col, (), ())
    used = {abs(x) for x in col}
    J: list[int] = []
    bound = None
    for z in I:
        t = z - 1 if bound is None else min(bound, z) - 1
        while t >= 1 and t in used:
            t -= 1
        if t < 1:
            raise SplitImpossible(f"column [{format_column(col)}] cannot be split")
        J.append(t)
        bound = t
    swap_up = dict(zip(I, J))
    left = sort_letters((swap_up.get(x, x) if x > 0 else x for x in col), n)
    right = sort_letters((-swap_up[-x] if x < 0 and -x in swap_up else x for x in col), n)
    return Split(left, right, I, tuple(J))


def split_column(col: Sequence[int], n: int) -> Split:
    """Left and right columns of an admissible column, with I and J kept."""
    return _split(tuple(col), n)


@lru_cache(maxsize=1 << 16)
def _phi(col: Column, n: int) -> Column:
    sp = _split(col, n)
    return tuple(x for x in sp.left if x > 0) + tuple(x for x in sp.right if x < 0)


def phi(col: Sequence[int], n: int) -> Column:
    """The bijection from admissible to coadmissible columns."""
    return _phi(tuple(col), n)


@lru_cache(maxsize=1 << 16)
def _phi_inverse(col: Column, n: int) -> Column:
    if not is_coadmissible(col, n):
        raise NotCoadmissible(f"column [{format_column(col)}] is not coadmissible")
    Z = symmetric_pairs(col)
    if not Z:
        return col
    used = {abs(x) for x in col}
    H: list[int] = []
    floor = None
    for z in reversed(Z):
        h = z + 1 if floor is None else max(floor, z) + 1
        while h <= n and h in used:
            h += 1
        if h > n:
            raise NotCoadmissible(f"column [{format_column(col)}] has no inverse image")
        H.append(h)
        floor = h
    swap_down = dict(zip(reversed(Z), H))
    out = sort_letters(
        (swap_down[abs(x)] * (1 if x > 0 else -1) if abs(x) in swap_down else x for x in col), n
    )
    return out


def phi_inverse(col: Sequence[int], n: int) -> Column:
    return _phi_inverse(tuple(col), n)


# ---------------------------------------------------------------- tableaux


@dataclass(frozen=True)
class SkewShape:
    outer: tuple[int, ...]
    inner: tuple[int, ...]

    @property
    def is_straight(self) -> bool:
        return sum(self.inner) == 0


def _conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    return _conjugate(parts)


@dataclass(frozen=True)
class SkewTableau:
    """A filling stored column by column.

    Column ``j`` occupies rows ``tops[j]`` .. ``tops[j] + len(columns[j]) - 1``
    (row 0 is the top row). Empty columns are allowed and keep a position.
    """

    n: int
    columns: tuple[Column, ...]
    tops: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        tops = tuple(self.tops) if self.tops else (0,) * len(cols)
        if len(tops) != len(cols):
            raise InvalidShape("tops and columns differ in length")
        object.__setattr__(self, "tops", tops)

    # construction ---------------------------------------------------

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], n: int, tops: Sequence[int] | None = None) -> "SkewTableau":
        return cls(n, tuple(tuple(c) for c in columns), tuple(tops) if tops else ())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | None]], n: int) -> "SkewTableau":
        rows = [list(r) for r in rows]
        while rows and not rows[-1]:
            rows.pop()
        lengths = [len(r) for r in rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise InvalidShape(f"row lengths {lengths} are not weakly decreasing")
        inner = []
        for i, r in enumerate(rows):
            k = 0
            while k < len(r) and r[k] is None:
                k += 1
            if any(x is None for x in r[k:]):
                raise InvalidShape(f"row {i + 1}: inner cells must come first")
            inner.append(k)
        if any(a < b for a, b in zip(inner, inner[1:])):
            raise InvalidShape(f"inner row lengths {inner} are not weakly decreasing")
        width = lengths[0] if lengths else 0
        columns, tops = [], []
        for j in range(width):
            cells = [r[j] for r in rows if len(r) > j]
            top = sum(1 for x in cells if x is None)
            col = tuple(x for x in cells if x is not None)
            for i, x in enumerate(col):
                try:
                    check_letter(x, n)
                except AlphabetMismatch as exc:
                    raise AlphabetMismatch(f"row {top + i + 1}, column {j + 1}: {exc}") from None
            columns.append(col)
            tops.append(top)
        return cls(n, tuple(columns), tuple(tops))

    # geometry -------------------------------------------------------

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    @property
    def bottoms(self) -> tuple[int, ...]:
        return tuple(t + len(c) for t, c in zip(self.tops, self.columns))

    @property
    def is_straight(self) -> bool:
        return all(t == 0 for t in self.tops)

    def shape(self) -> SkewShape:
        return SkewShape(_conjugate(self.bottoms), _conjugate(self.tops))

    def is_proper_shape(self) -> bool:
        t, b = self.tops, self.bottoms
        return all(t[j] >= t[j + 1] and b[j] >= b[j + 1] for j in range(len(t) - 1)) and all(
            x >= 0 for x in t
        )

    def normalized(self) -> "SkewTableau":
        """Shift rows so the smallest top is 0 and drop trailing empty columns."""
        cols, tops = list(self.columns), list(self.tops)
        while cols and not cols[-1] and tops[-1] == 0:
            cols.pop()
            tops.pop()
        if tops:
            m = min(tops)
            tops = [t - m for t in tops]
        return SkewTableau(self.n, tuple(cols), tuple(tops))

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield (row, column, letter) for every filled cell."""
        for j, (t, col) in enumerate(zip(self.tops, self.columns)):
            for i, x in enumerate(col):
                yield t + i, j, x

    def entry(self, row: int, col: int) -> int | None:
        if not 0 <= col < len(self.columns):
            return None
        i = row - self.tops[col]
        c = self.columns[col]
        return c[i] if 0 <= i < len(c) else None

    def rows(self) -> list[list[int | None]]:
        """Rows top to bottom, ``None`` for inner cells."""
        if not self.is_proper_shape():
            raise InvalidShape("columns do not form a skew shape")
        bottoms = self.bottoms
        height = max(bottoms, default=0)
        out = []
        for r in range(height):
            row: list[int | None] = []
            for j, b in enumerate(bottoms):
                if b <= r:
                    break
                row.append(None if r < self.tops[j] else self.columns[j][r - self.tops[j]])
            out.append(row)
        return out

    def weight(self) -> tuple[int, ...]:
        return weight(self)

    def __str__(self) -> str:
        return format_tableau(self)


# ---------------------------------------------------------------- I/O


def parse_tableau(text: str, n: int) -> SkewTableau:
    """Parse the text literal, e.g. ``"1,3,-1;3,-3;-3"`` or ``".,2;1,3"``."""
    text = text.strip()
    if text.startswith("{"):
        return tableau_from_json(text, expected_n=n)
    rows: list[list[int | None]] = []
    if text:
        for i, chunk in enumerate(text.split(";")):
            row: list[int | None] = []
            chunk = chunk.strip()
            if not chunk:
                rows.append(row)
                continue
            for j, tok in enumerate(chunk.split(",")):
                tok = tok.strip()
                if tok == ".":
                    row.append(None)
                    continue
                try:
                    row.append(int(tok))
                except ValueError:
                    raise ParseError(f"row {i + 1}, column {j + 1}: bad entry {tok!r}") from None
            rows.append(row)
    return SkewTableau.from_rows(rows, n)


def format_tableau(t: SkewTableau) -> str:
    return ";".join(",".join("." if x is None else str(x) for x in row) for row in t.rows())


def tableau_to_json(t: SkewTableau) -> dict:
    return {"n": t.n, "rows": t.rows()}


def tableau_from_json(data: str | dict, expected_n: int | None = None) -> SkewTableau:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
    if not isinstance(data, dict) or "rows" not in data:
        raise ParseError("JSON tableau needs a 'rows' field")
    n = data.get("n", expected_n)
    if n is None:
        raise ParseError("JSON tableau needs 'n'")
    if expected_n is not None and n != expected_n:
        raise AlphabetMismatch(f"tableau has n={n}, expected n={expected_n}")
    return SkewTableau.from_rows(data["rows"], n)


# ---------------------------------------------------------------- validation


@dataclass(frozen=True)
class Valid:
    ok = True
    reason = ""


@dataclass(frozen=True)
class Invalid:
    reason: str
    ok = False


def split_form(t: SkewTableau) -> SkewTableau:
    cols, tops = [], []
    for j, (top, col) in enumerate(zip(t.tops, t.columns)):
        try:
            sp = split_column(col, t.n)
        except NotAdmissible as exc:
            raise NotAdmissible(f"column {j + 1}: {exc}") from None
        cols += [sp.left, sp.right]
        tops += [top, top]
    return SkewTableau(t.n, tuple(cols), tuple(tops))


def validate_kn(t: SkewTableau) -> Valid | Invalid:
    n = t.n
    for _, j, x in t.cells():
        if x == 0 or abs(x) > n:
            return Invalid(f"column {j + 1}: letter {x} outside the alphabet")
    if not t.is_proper_shape():
        return Invalid("columns do not form a skew shape")
    if t.is_straight and any(not c for c in t.columns):
        return Invalid("straight tableau with an empty column")
    for j, col in enumerate(t.columns):
        if not is_column(col, n):
            return Invalid(f"column {j + 1} is not strictly increasing")
        res = admissibility_check(col, n)
        if not res.ok:
            return Invalid(f"column {j + 1} breaks 1CC at {res.z}")
    sf = split_form(t)
    for j in range(len(sf.columns) - 1):
        for r in range(sf.tops[j + 1], sf.bottoms[j + 1]):
            a, b = sf.entry(r, j), sf.entry(r, j + 1)
            if a is not None and rank(a, n) > rank(b, n):
                return Invalid(f"split form row {r + 1} decreases between split columns {j + 1} and {j + 2}")
    return Valid()


def require_kn(t: SkewTableau) -> None:
    res = validate_kn(t)
    if not res.ok:
        raise InvalidTableau(res.reason)


def weight(t: SkewTableau) -> tuple[int, ...]:
    w = [0] * t.n
    for col in t.columns:
        for x in col:
            w[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(w)


# ---------------------------------------------------------------- keys


def is_key_tableau(t: SkewTableau) -> bool:
    require_kn(t)
    if not t.is_straight:
        return False
    letters = {x for col in t.columns for x in col}
    if any(-x in letters for x in letters):
        return False
    return all(set(b) <= set(a) for a, b in zip(t.columns, t.columns[1:]))


def key_of_weight(v: Sequence[int], lam: Sequence[int] | None = None, n: int | None = None) -> SkewTableau:
    """The key tableau of weight ``v``: column j holds sign(v_i)*i for |v_i| >= j."""
    v = tuple(v)
    n = len(v) if n is None else n
    if len(v) != n:
        raise WeightNotInOrbit(f"weight {v} does not have length {n}")
    if lam is not None:
        lam_p = tuple(sorted((p for p in lam), reverse=True)) + (0,) * (n - len(lam))
        if tuple(sorted((abs(x) for x in v), reverse=True)) != lam_p[:n] or len(lam_p) != n:
            raise WeightNotInOrbit(f"weight {v} is not in the orbit of {tuple(lam)}")
    depth = max((abs(x) for x in v), default=0)
    cols = []
    for j in range(1, depth + 1):
        cols.append(sort_letters(((i + 1) * (1 if x > 0 else -1) for i, x in enumerate(v) if abs(x) >= j), n))
    return SkewTableau(n, tuple(cols))


def entrywise_leq(a: SkewTableau, b: SkewTableau) -> bool:
    """Cellwise rank comparison of two tableaux of the same shape."""
    if a.tops != b.tops or a.lengths != b.lengths:
        raise InvalidShape("entrywise comparison needs equal shapes")
    n = a.n
    return all(rank(x, n) <= rank(y, n) for ca, cb in zip(a.columns, b.columns) for x, y in zip(ca, cb))


def shape_of_straight(t: SkewTableau) -> tuple[int, ...]:
    return conjugate(t.lengths)
