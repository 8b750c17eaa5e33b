"""Command-line interface: ``symkeys VERB [options] [TABLEAU]``.

Tableaux are read from the positional argument, or from stdin when it is
missing or ``-``. Exit status is 0 on success, 1 on invalid input and 2 when
two key algorithms disagree.
"""
from __future__ import annotations

import argparse
import importlib
import json
import re
import sys
import warnings
from typing import Callable, Sequence

from . import keys as ky
from .core import (
    KNError,
    ParseError,
    SkewTableau,
    format_column,
    format_tableau,
    parse_column,
    parse_tableau,
    phi,
    phi_inverse,
    split_column,
    split_form,
    tableau_to_json,
    validate_kn,
)
from .rsk_cocrystal import dual_rsk, generate_cocrystal, parse_biword
from .sjdt import rectify, reshape

cr = importlib.import_module(".crystal", __package__)

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems count as invalid input
        raise UsageError(message)

    def __init__(self, *a, **kw) -> None:
        super().__init__(*a, **kw)
        # literals such as "-2,-1" or "-1;2" are values, not options
        self._negative_number_matcher = re.compile(r"^-\d[\d,;. -]*$")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _read(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    return arg


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    return args.n


def _tableau(args):
    return parse_tableau(_read(args.input), _need_n(args))


class Out:
    def __init__(self) -> None:
        self.lines: list[str] = []

    def __call__(self, line: str = "") -> None:
        self.lines.append(line)

    def text(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _emit_tableau(out: Out, args, t, label: str | None = None) -> None:
    if args.out == "json":
        data = tableau_to_json(t)
        if label:
            data = {"label": label, **data}
        out(json.dumps(data, sort_keys=True))
    else:
        out(f"{label}: {format_tableau(t)}" if label else format_tableau(t))


def _tracer(args, out: Out) -> Callable[[str], None] | None:
    return out if getattr(args, "trace", False) else None


# ---------------------------------------------------------------- verbs


def _is_column_literal(text: str) -> bool:
    return not any(c in text for c in ";.{")


def cmd_validate(args, out: Out) -> int:
    text = _read(args.input).strip()
    n = _need_n(args)
    if _is_column_literal(text):
        t = SkewTableau(n, (parse_column(text, n),))
    else:
        t = parse_tableau(text, n)
    res = validate_kn(t)
    if not res.ok:
        raise KNError(res.reason)
    out("valid")
    return EXIT_OK


def cmd_split(args, out: Out) -> int:
    text = _read(args.input).strip()
    n = _need_n(args)
    if _is_column_literal(text):
        sp = split_column(parse_column(text, n), n)
        if args.out == "json":
            out(json.dumps({"left": list(sp.left), "right": list(sp.right), "I": list(sp.I), "J": list(sp.J)}))
        else:
            out(f"{format_column(sp.left)} | {format_column(sp.right)}")
        return EXIT_OK
    t = parse_tableau(text, n)
    res = validate_kn(t)
    if not res.ok:
        raise KNError(res.reason)
    _emit_tableau(out, args, split_form(t))
    return EXIT_OK


def cmd_phi(args, out: Out) -> int:
    n = _need_n(args)
    col = parse_column(_read(args.input).strip(), n)
    res = phi_inverse(col, n) if args.inverse else phi(col, n)
    out(json.dumps(list(res)) if args.out == "json" else format_column(res))
    return EXIT_OK


def cmd_rectify(args, out: Out) -> int:
    t = _tableau(args)
    res = rectify(t, trace=_tracer(args, out))
    _emit_tableau(out, args, res)
    return EXIT_OK


def cmd_reshape(args, out: Out) -> int:
    if args.lengths is None:
        raise UsageError("--lengths is required")
    t = _tableau(args)
    res = reshape(t, _ints(args.lengths), trace=_tracer(args, out))
    _emit_tableau(out, args, res)
    return EXIT_OK


_KEYS = {
    ("right", "sjdt"): ky.right_key_sjdt,
    ("right", "direct"): ky.right_key_direct,
    ("left", "sjdt"): ky.left_key_sjdt,
    ("left", "direct"): ky.left_key_direct,
}


def _keys(args, out: Out, trace) -> int:
    t = _tableau(args)
    methods = ["sjdt", "direct"] if args.method == "both" else [args.method]
    results = []
    for m in methods:
        if trace is not None:
            trace(f"== {args.side} key, {m} ==")
            if m == "direct":
                trace(f"split form: {format_tableau(split_form(t))}")
        k = _KEYS[(args.side, m)](t, trace)
        results.append(k)
        _emit_tableau(out, args, k, label=m if len(methods) > 1 else None)
    if len(results) == 2:
        if results[0] == results[1]:
            out("MATCH")
        else:
            out("MISMATCH")
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_key(args, out: Out) -> int:
    return _keys(args, out, _tracer(args, out))


def cmd_trace(args, out: Out) -> int:
    if args.side is not None:
        return _keys(args, out, out)
    t = _tableau(args)
    if args.lengths is not None:
        res = reshape(t, _ints(args.lengths), trace=out)
    else:
        res = rectify(t, trace=out)
    _emit_tableau(out, args, res)
    return EXIT_OK


def _shape(args) -> tuple[int, ...]:
    if args.shape is None:
        raise UsageError("--shape is required")
    return _ints(args.shape)


def _emit_set(out: Out, args, ts) -> None:
    if args.out == "json":
        out(json.dumps({"count": len(ts), "tableaux": [format_tableau(t) for t in ts]}))
    else:
        for t in ts:
            out(format_tableau(t))


def cmd_crystal(args, out: Out) -> int:
    g = cr.crystal(_shape(args), _need_n(args))
    if args.out == "json":
        out(json.dumps(g.to_json(), sort_keys=True))
    elif args.out == "dot":
        out(g.to_dot().rstrip("\n"))
    else:
        for v in sorted(g.vertices, key=format_tableau):
            out(format_tableau(v))
    return EXIT_OK


def _word_or_weight(args, g) -> tuple[str, tuple[int, ...]]:
    if args.word is not None:
        return "word", _ints(args.word)
    if args.v is not None:
        return "v", _ints(args.v)
    raise UsageError("give --v or --word")


def cmd_demazure(args, out: Out) -> int:
    g = cr.crystal(_shape(args), _need_n(args))
    kind, data = _word_or_weight(args, g)
    if kind == "word":
        ts = (cr.opposite_demazure_crystal if args.opposite else cr.demazure_crystal)(g.lam, g.n, data)
    else:
        ids = g.opposite_demazure(data) if args.opposite else g.demazure(data)
        ts = g.tableaux(ids)
    _emit_set(out, args, ts)
    return EXIT_OK


def cmd_atom(args, out: Out) -> int:
    g = cr.crystal(_shape(args), _need_n(args))
    if args.v is None:
        raise UsageError("--v is required")
    v = _ints(args.v)
    ids = g.opposite_atom(v) if args.opposite else g.atom(v)
    _emit_set(out, args, g.tableaux(ids))
    return EXIT_OK


def cmd_character(args, out: Out) -> int:
    lam, n = _shape(args), _need_n(args)
    if args.v is None:
        poly = cr.full_character(lam, n)
    else:
        v = _ints(args.v)
        if args.atom:
            poly = (cr.opposite_atom_character if args.opposite else cr.demazure_atom_character)(lam, n, v)
        else:
            poly = (cr.opposite_demazure_character if args.opposite else cr.demazure_character)(lam, n, v)
    out(json.dumps(poly.to_json(), sort_keys=True) if args.out == "json" else str(poly))
    return EXIT_OK


def cmd_cocrystal(args, out: Out) -> int:
    t = _tableau(args)
    c = generate_cocrystal(t, args.r)
    if args.keys:
        _emit_set(out, args, c.keys())
    elif args.out == "json":
        out(json.dumps(c.to_json(), sort_keys=True))
    elif args.out == "dot":
        out(c.to_dot().rstrip("\n"))
    else:
        for v in sorted(c.vertices, key=format_tableau):
            out(format_tableau(v))
    return EXIT_OK


def cmd_rsk(args, out: Out) -> int:
    w = parse_biword(_read(args.input))
    n = args.n if args.n is not None else max(w.bottom, default=1)
    p, q = dual_rsk(w, n, args.r)
    if args.out == "json":
        out(json.dumps({"P": tableau_to_json(p), "Q": tableau_to_json(q)}, sort_keys=True))
    else:
        out(f"P: {format_tableau(p)}")
        out(f"Q: {format_tableau(q)}")
    return EXIT_OK


VERBS = {
    "validate": cmd_validate,
    "split": cmd_split,
    "phi": cmd_phi,
    "rectify": cmd_rectify,
    "reshape": cmd_reshape,
    "key": cmd_key,
    "crystal": cmd_crystal,
    "demazure": cmd_demazure,
    "atom": cmd_atom,
    "character": cmd_character,
    "cocrystal": cmd_cocrystal,
    "rsk": cmd_rsk,
    "trace": cmd_trace,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symkeys", description="Symplectic KN tableaux: jeu de taquin, crystals and keys.")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("input", nargs="?", help="tableau, column or biword literal; stdin when omitted or '-'")
    p.add_argument("--n", type=int, help="alphabet bound")
    p.add_argument("--shape", help="partition, e.g. 2,1")
    p.add_argument("--v", help="weight, e.g. -2,1")
    p.add_argument("--word", help="reduced word, e.g. 1,2")
    p.add_argument("--side", choices=["right", "left"])
    p.add_argument("--method", choices=["sjdt", "direct", "both"], default="direct")
    p.add_argument("--out", choices=["text", "json", "dot"], default="text")
    p.add_argument("--r", type=int, help="number of cocrystal columns")
    p.add_argument("--lengths", help="target column lengths for reshape")
    p.add_argument("--inverse", action="store_true", help="phi: apply the inverse map")
    p.add_argument("--opposite", action="store_true", help="use the opposite Demazure family")
    p.add_argument("--atom", action="store_true", help="character: atom instead of Demazure crystal")
    p.add_argument("--keys", action="store_true", help="cocrystal: list only the key vertices")
    p.add_argument("--trace", action="store_true", help="print step logs before the result")
    return p


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; return (exit code, stdout, stderr)."""
    out = Out()
    try:
        args = build_parser().parse_intermixed_args(list(argv))
        if args.verb == "key" and args.side is None:
            args.side = "right"
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", cr.NonReducedWordWarning)
            code = VERBS[args.verb](args, out)
        err = "".join(f"warning: {w.message}\n" for w in caught)
        return code, out.text(), err
    except UsageError as exc:
        return EXIT_INVALID, out.text(), f"usage error: {exc}\n"
    except KNError as exc:
        return EXIT_INVALID, out.text(), f"error: {exc}\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, stdout, stderr = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(stdout)
    sys.stderr.write(stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
