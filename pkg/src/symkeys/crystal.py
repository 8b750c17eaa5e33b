"""Type C_n crystals on KN tableaux, Demazure crystals, atoms and characters."""
from __future__ import annotations

import itertools
import json
import warnings
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .core import (
    InvalidShape,
    KNError,
    SkewTableau,
    WeightNotInOrbit,
    entrywise_leq,
    format_tableau,
    key_of_weight,
    require_kn,
    weight,
)


class InvalidGenerator(KNError):
    pass


class NonReducedWordWarning(UserWarning):
    pass


# ---------------------------------------------------------------- operators


def reading_positions(t: SkewTableau) -> list[tuple[int, int]]:
    """(column, index) pairs in reading order: columns right to left, each top to bottom."""
    return [(j, i) for j in range(len(t.columns) - 1, -1, -1) for i in range(len(t.columns[j]))]


def _sign(x: int, i: int, n: int) -> int:
    if i < n:
        if x == i or x == -(i + 1):
            return 1
        if x == i + 1 or x == -i:
            return -1
        return 0
    return 1 if x == n else -1 if x == -n else 0


def _bracket(t: SkewTableau, i: int) -> tuple[list, list]:
    """Uncancelled '-' and '+' positions after removing every '+' ... '-' pair."""
    plus: list = []
    minus: list = []
    for j, k in reading_positions(t):
        s = _sign(t.columns[j][k], i, t.n)
        if s > 0:
            plus.append((j, k))
        elif s < 0:
            if plus:
                plus.pop()
            else:
                minus.append((j, k))
    return minus, plus


def _check_index(t: SkewTableau, i: int) -> None:
    if not 1 <= i <= t.n:
        raise InvalidGenerator(f"crystal index {i} outside 1..{t.n}")


def _replace(t: SkewTableau, pos: tuple[int, int], new: int) -> SkewTableau:
    j, k = pos
    cols = list(t.columns)
    col = list(cols[j])
    col[k] = new
    cols[j] = tuple(col)
    return SkewTableau(t.n, tuple(cols), t.tops)


def _down(x: int, i: int, n: int) -> int:
    if i == n:
        return -n
    return i + 1 if x == i else -i


def _up(x: int, i: int, n: int) -> int:
    if i == n:
        return n
    return i if x == i + 1 else -(i + 1)


def lower(t: SkewTableau, i: int) -> SkewTableau | None:
    """f_i by the signature rule on the column reading word."""
    _check_index(t, i)
    _, plus = _bracket(t, i)
    if not plus:
        return None
    pos = plus[0]
    return _replace(t, pos, _down(t.columns[pos[0]][pos[1]], i, t.n))


def raise_(t: SkewTableau, i: int) -> SkewTableau | None:
    """e_i by the signature rule on the column reading word."""
    _check_index(t, i)
    minus, _ = _bracket(t, i)
    if not minus:
        return None
    pos = minus[-1]
    return _replace(t, pos, _up(t.columns[pos[0]][pos[1]], i, t.n))


def epsilon(t: SkewTableau, i: int) -> int:
    _check_index(t, i)
    return len(_bracket(t, i)[0])


def varphi(t: SkewTableau, i: int) -> int:
    _check_index(t, i)
    return len(_bracket(t, i)[1])


def simple_root(i: int, n: int) -> tuple[int, ...]:
    a = [0] * n
    if i < n:
        a[i - 1], a[i] = 1, -1
    else:
        a[n - 1] = 2
    return tuple(a)


def coroot_pairing(v: Sequence[int], i: int, n: int) -> int:
    return v[i - 1] - v[i] if i < n else v[n - 1]


# ---------------------------------------------------------------- Weyl group


def reflect(v: Sequence[int], i: int) -> tuple[int, ...]:
    v = list(v)
    n = len(v)
    if not 1 <= i <= n:
        raise InvalidGenerator(f"generator s_{i} outside 1..{n}")
    if i < n:
        v[i - 1], v[i] = v[i], v[i - 1]
    else:
        v[n - 1] = -v[n - 1]
    return tuple(v)


def apply_word(word: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Act by s_{w[0]} s_{w[1]} ... on ``v`` (rightmost generator first)."""
    v = tuple(v)
    for i in reversed(word):
        v = reflect(v, i)
    return v


def orbit(lam: Sequence[int], n: int) -> list[tuple[int, ...]]:
    lam = _pad(lam, n)
    out = set()
    for perm in set(itertools.permutations(lam)):
        nz = [k for k, x in enumerate(perm) if x]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            v = list(perm)
            for k, s in zip(nz, signs):
                v[k] *= s
            out.add(tuple(v))
    return sorted(out, reverse=True)


def _pad(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = tuple(x for x in lam if x)
    if len(lam) > n or any(a < b for a, b in zip(lam, lam[1:])) or any(x < 0 for x in lam):
        raise InvalidShape(f"{lam} is not a partition with at most {n} parts")
    return lam + (0,) * (n - len(lam))


def _dominant(v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((abs(x) for x in v), reverse=True))


def reduced_word_for(v: Sequence[int], lam: Sequence[int]) -> tuple[int, ...]:
    """A reduced word sigma with sigma(lam) = v, found by greedy descent."""
    v = tuple(v)
    n = len(v)
    if _dominant(v) != _pad(lam, n):
        raise WeightNotInOrbit(f"{v} is not in the orbit of {tuple(lam)}")
    word = []
    while True:
        for i in range(1, n + 1):
            if coroot_pairing(v, i, n) < 0:
                word.append(i)
                v = reflect(v, i)
                break
        else:
            return tuple(word)


def coxeter_length(word: Sequence[int], n: int) -> int:
    """Length of the signed permutation given by ``word``."""
    u = apply_word(word, tuple(range(n, 0, -1)))
    inv = sum(1 for a, b in itertools.combinations(range(n), 2) if u[a] < u[b])
    inv += sum(1 for a, b in itertools.combinations(range(n), 2) if u[a] + u[b] < 0)
    return inv + sum(1 for x in u if x < 0)


def is_reduced(word: Sequence[int], n: int) -> bool:
    return coxeter_length(word, n) == len(word)


# ---------------------------------------------------------------- Laurent polynomials


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer combination of monomials x^e with e in Z^n."""

    n: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {tuple(e): c for e, c in dict(self.terms).items() if c}
        for e in clean:
            if len(e) != self.n:
                raise ValueError(f"exponent {e} does not have length {self.n}")
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    @classmethod
    def from_weights(cls, weights: Iterable[Sequence[int]], n: int) -> "LaurentPolynomial":
        acc: dict[tuple[int, ...], int] = {}
        for w in weights:
            acc[tuple(w)] = acc.get(tuple(w), 0) + 1
        return cls(n, acc)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(self.n, acc)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        acc: dict[tuple[int, ...], int] = {}
        for (e1, c1), (e2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            e = tuple(a + b for a, b in zip(e1, e2))
            acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.n, acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPolynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.terms.items())))

    def invert(self) -> "LaurentPolynomial":
        """Substitute x_i -> 1/x_i."""
        return LaurentPolynomial(self.n, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def act(self, i: int) -> "LaurentPolynomial":
        """Apply the generator s_i to the exponents."""
        return LaurentPolynomial(self.n, {reflect(e, i): c for e, c in self.terms.items()})

    def evaluate_at_one(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {"n": self.n, "monomials": [{"exp": list(e), "coef": c} for e, c in self.terms.items()]}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = "*".join(
                f"x{k + 1}" if a == 1 else f"x{k + 1}^{a}" for k, a in enumerate(e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------- crystal graphs


@dataclass
class CrystalGraph:
    """The crystal B^lam of KN tableaux, with Demazure data computed on demand."""

    lam: tuple[int, ...]
    n: int
    vertices: list[SkewTableau]
    index: dict[SkewTableau, int]
    down: dict[tuple[int, int], int]
    up: dict[tuple[int, int], int]
    _demazure: dict = field(default_factory=dict, repr=False)
    _opposite: dict = field(default_factory=dict, repr=False)

    @property
    def highest(self) -> SkewTableau:
        return key_of_weight(_pad(self.lam, self.n), self.lam, self.n)

    @property
    def lowest(self) -> SkewTableau:
        return key_of_weight(tuple(-x for x in _pad(self.lam, self.n)), self.lam, self.n)

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int, int]]:
        return sorted((a, i, b) for (a, i), b in self.down.items())

    def keys(self) -> dict[tuple[int, ...], SkewTableau]:
        return {v: key_of_weight(v, self.lam, self.n) for v in orbit(self.lam, self.n)}

    # Demazure closures on vertex ids ---------------------------------

    def _string_closure(self, ids: Iterable[int], i: int, moves: dict) -> frozenset[int]:
        out = set()
        for v in ids:
            while v is not None and v not in out:
                out.add(v)
                v = moves.get((v, i))
        return frozenset(out)

    def demazure_ids(self, word: Sequence[int]) -> frozenset[int]:
        word = tuple(word)
        ids = frozenset([self.index[self.highest]])
        for i in reversed(word):
            _check_gen(i, self.n)
            ids = self._string_closure(ids, i, self.down)
        return ids

    def opposite_demazure_ids(self, word: Sequence[int]) -> frozenset[int]:
        word = tuple(word)
        ids = frozenset([self.index[self.lowest]])
        for i in reversed(word):
            _check_gen(i, self.n)
            ids = self._string_closure(ids, i, self.up)
        return ids

    def demazure(self, v: Sequence[int]) -> frozenset[int]:
        v = tuple(v)
        if v not in self._demazure:
            self._demazure[v] = self.demazure_ids(reduced_word_for(v, self.lam))
        return self._demazure[v]

    def opposite_demazure(self, w: Sequence[int]) -> frozenset[int]:
        """Opposite Demazure crystal whose key has weight ``w``."""
        w = tuple(w)
        if w not in self._opposite:
            lam_neg = tuple(-x for x in w)
            self._opposite[w] = self.opposite_demazure_ids(reduced_word_for(lam_neg, self.lam))
        return self._opposite[w]

    def atom(self, v: Sequence[int]) -> frozenset[int]:
        v = tuple(v)
        kv = key_of_weight(v, self.lam, self.n)
        out = set(self.demazure(v))
        for u, ku in self.keys().items():
            if u != v and entrywise_leq(ku, kv):
                out -= self.demazure(u)
        return frozenset(out)

    def opposite_atom(self, w: Sequence[int]) -> frozenset[int]:
        w = tuple(w)
        kw = key_of_weight(w, self.lam, self.n)
        out = set(self.opposite_demazure(w))
        for u, ku in self.keys().items():
            if u != w and entrywise_leq(kw, ku):
                out -= self.opposite_demazure(u)
        return frozenset(out)

    def tableaux(self, ids: Iterable[int]) -> list[SkewTableau]:
        return sorted((self.vertices[k] for k in ids), key=format_tableau)

    def character(self, ids: Iterable[int] | None = None) -> LaurentPolynomial:
        ids = range(len(self.vertices)) if ids is None else ids
        return LaurentPolynomial.from_weights((weight(self.vertices[k]) for k in ids), self.n)

    # export ------------------------------------------------------------

    def to_json(self) -> dict:
        order = sorted(range(len(self.vertices)), key=lambda k: format_tableau(self.vertices[k]))
        rename = {k: r for r, k in enumerate(order)}
        return {
            "n": self.n,
            "shape": list(self.lam),
            "vertices": [
                {"id": rename[k], "tableau": format_tableau(self.vertices[k]), "weight": list(weight(self.vertices[k]))}
                for k in order
            ],
            "edges": sorted(
                ({"from": rename[a], "to": rename[b], "i": i} for a, i, b in self.edges()),
                key=lambda e: (e["from"], e["i"]),
            ),
        }

    def to_dot(self) -> str:
        return graph_to_dot(
            [format_tableau(v) for v in self.vertices],
            self.edges(),
            name="crystal",
            label=lambda i: str(i),
        )


_COLORS = ["blue", "red", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]


def graph_to_dot(labels: Sequence[str], edges: Iterable[tuple[int, int, int]], name: str, label) -> str:
    order = sorted(range(len(labels)), key=lambda k: labels[k])
    rename = {k: r for r, k in enumerate(order)}
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for k in order:
        lines.append(f'  v{rename[k]} [label="{labels[k]}"];')
    for a, i, b in sorted(edges, key=lambda e: (rename[e[0]], e[1])):
        color = _COLORS[(i - 1) % len(_COLORS)]
        lines.append(f'  v{rename[a]} -> v{rename[b]} [label="{label(i)}", color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _check_gen(i: int, n: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= n:
        raise InvalidGenerator(f"generator {i!r} outside 1..{n}")


@lru_cache(maxsize=64)
def generate_crystal(lam: tuple[int, ...], n: int) -> CrystalGraph:
    """Breadth-first closure of K(lam) under every f_i."""
    lam = tuple(x for x in _pad(lam, n) if x)
    top = key_of_weight(_pad(lam, n), lam, n)
    vertices = [top]
    index = {top: 0}
    down: dict[tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for i in range(1, n + 1):
            b = lower(vertices[a], i)
            if b is None:
                continue
            if b not in index:
                index[b] = len(vertices)
                vertices.append(b)
                queue.append(index[b])
            down[(a, i)] = index[b]
    up = {(b, i): a for (a, i), b in down.items()}
    return CrystalGraph(lam, n, vertices, index, down, up)


def crystal(lam: Sequence[int], n: int) -> CrystalGraph:
    return generate_crystal(tuple(lam), n)


# ---------------------------------------------------------------- module-level API


def _word_checked(word: Sequence[int], n: int) -> tuple[int, ...]:
    word = tuple(word)
    for i in word:
        _check_gen(i, n)
    if not is_reduced(word, n):
        warnings.warn(f"word {word} is not reduced", NonReducedWordWarning, stacklevel=3)
    return word


def demazure_crystal(lam: Sequence[int], n: int, word: Sequence[int]) -> list[SkewTableau]:
    g = crystal(lam, n)
    return g.tableaux(g.demazure_ids(_word_checked(word, n)))


def opposite_demazure_crystal(lam: Sequence[int], n: int, word: Sequence[int]) -> list[SkewTableau]:
    g = crystal(lam, n)
    return g.tableaux(g.opposite_demazure_ids(_word_checked(word, n)))


def demazure_atom(lam: Sequence[int], n: int, v: Sequence[int]) -> list[SkewTableau]:
    g = crystal(lam, n)
    return g.tableaux(g.atom(v))


def opposite_demazure_atom(lam: Sequence[int], n: int, w: Sequence[int]) -> list[SkewTableau]:
    g = crystal(lam, n)
    return g.tableaux(g.opposite_atom(w))


def demazure_character(lam: Sequence[int], n: int, v: Sequence[int]) -> LaurentPolynomial:
    g = crystal(lam, n)
    return g.character(g.demazure(v))


def demazure_atom_character(lam: Sequence[int], n: int, v: Sequence[int]) -> LaurentPolynomial:
    g = crystal(lam, n)
    return g.character(g.atom(v))


def opposite_demazure_character(lam: Sequence[int], n: int, w: Sequence[int]) -> LaurentPolynomial:
    g = crystal(lam, n)
    return g.character(g.opposite_demazure(w))


def opposite_atom_character(lam: Sequence[int], n: int, w: Sequence[int]) -> LaurentPolynomial:
    g = crystal(lam, n)
    return g.character(g.opposite_atom(w))


def full_character(lam: Sequence[int], n: int) -> LaurentPolynomial:
    return crystal(lam, n).character()


def character_via_keys(lam: Sequence[int], n: int, v: Sequence[int], method: str = "direct") -> LaurentPolynomial:
    """Sum of x^wt(T) over the T whose right key is entrywise at most K(v)."""
    from .keys import right_key_direct, right_key_sjdt

    g = crystal(lam, n)
    kv = key_of_weight(v, g.lam, n)
    key = right_key_direct if method == "direct" else right_key_sjdt
    return LaurentPolynomial.from_weights(
        (weight(t) for t in g.vertices if entrywise_leq(key(t), kv)), n
    )


def is_crystal_vertex(t: SkewTableau) -> bool:
    require_kn(t)
    return t.is_straight
