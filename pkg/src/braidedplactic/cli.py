"""Command-line front end: thin adapters over the library, text or JSON on stdout."""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product as cartesian

from . import braiding, cohomology, crystal, plactic
from .linalg import parse_field
from .report import Report
from .tableau import (
    EMPTY_TOKEN,
    Tableau,
    format_word,
    insert_left,
    insert_right,
    is_column,
    is_row,
    parse_word,
    product,
    shape,
    tableau_of_word,
)

SUITES = ("ybe", "idempotent", "pseudo-unit", "monoid", "crystal", "commute", "cohomology")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _word(text: str):
    return parse_word(text)


def _letter(text: str) -> int:
    w = parse_word(text)
    if len(w) != 1:
        raise UsageError(f"expected a single letter, got {text!r}")
    return w[0]


def _factor(kind: str, text: str):
    w = parse_word(text)
    ok = is_row(w) if kind == "row" else is_column(w)
    if not ok:
        raise UsageError(f"{text!r} is not a {kind}")
    return w


def _fmt(w) -> str:
    return format_word(w) if w else EMPTY_TOKEN


def cmd_tableau(a) -> int:
    T = tableau_of_word(_word(a.word))
    print(T)
    print("shape " + json.dumps(list(shape(T))))
    return 0


def cmd_insert(a) -> int:
    T = Tableau.parse(a.tableau)
    x = _letter(a.letter)
    print(insert_left(x, T) if a.side == "left" else insert_right(T, x))
    return 0


def cmd_product(a) -> int:
    print(product(Tableau.parse(a.t1), Tableau.parse(a.t2)))
    return 0


def cmd_normal_form(a) -> int:
    factors = braiding.normal_factors(a.kind, tableau_of_word(_word(a.word)))
    print(" ".join(_fmt(f) for f in factors) if factors else EMPTY_TOKEN)
    return 0


def cmd_sigma(a) -> int:
    u, v = _factor(a.kind, a.u), _factor(a.kind, a.v)
    x, y = braiding.sigma_for(a.kind)(u, v)
    print(f"({_fmt(x)}, {_fmt(y)})")
    return 0


def cmd_s_op(a) -> int:
    if a.i < 1:
        raise UsageError("operator index must be >= 1")
    print(_fmt(crystal.s_word(_word(a.word), a.i)))
    return 0


def _emit(rep) -> int:
    print(_dump(rep.to_dict()))
    return 0 if rep.passed else 1


def cmd_verify(a) -> int:
    n = a.n
    if n < 1:
        raise UsageError("--n must be positive")
    kind = a.kind
    if a.suite in ("ybe", "idempotent", "pseudo-unit"):
        if kind == "col":
            spec = braiding.column_spec(n)
        else:
            spec = braiding.row_spec(n, a.max_len)
        rep = braiding.verify_braided_set(spec, max_width=a.max_width)
        wanted = {"ybe": ["ybe"], "idempotent": ["idempotent"],
                  "pseudo-unit": ["pseudo_unit_1", "pseudo_unit_2"]}[a.suite]
        rep.checks = {k: v for k, v in rep.checks.items() if k in wanted}
        return _emit(rep)
    if a.suite == "monoid":
        els = braiding.decorated_domain(n, a.max_len, range(a.max_alpha + 1))
        return _emit(braiding.verify_monoid_compat(kind, els))
    if a.suite == "crystal":
        return _emit(crystal.verify_crystal(n, a.max_len, tuple_word_len=2, k=a.k))
    if a.suite == "commute":
        rep = Report(f"action compatibility on A_{n}")
        domain = braiding.decorated_domain(n, a.max_len, range(a.max_alpha + 1))
        tuples = list(cartesian(domain, repeat=a.k))
        for kd in ("row", "col"):
            rep.checks[f"action_compat_{kd}"] = crystal.check_action_compat(kd, tuples, n)
        return _emit(rep)
    return _emit(cohomology.verify_cohomology(n, a.k))


def cmd_betti(a) -> int:
    field = parse_field(a.field)
    print(_dump(cohomology.betti_report(a.n, a.kmax, a.character, field)))
    return 0


def parse_cochain(text: str, n: int, character: str, field):
    """``xi:<a>`` or ``f:<col>,<col>,...``; terms joined by ``+`` with optional ``<c>*`` scalars."""
    cx = cohomology.column_complex(n, character, field)
    total = None
    for term in text.replace("-", "+-").split("+"):
        term = term.strip()
        if not term:
            continue
        coeff = 1
        if "*" in term:
            c, term = term.split("*", 1)
            coeff = int(c) if c not in ("", "-") else (-1 if c == "-" else 1)
        elif term.startswith("-"):
            coeff, term = -1, term[1:]
        kind, _, body = term.partition(":")
        if kind == "xi":
            f = cohomology.xi(_letter(body), n, character, field)
        elif kind == "f":
            cols = tuple(parse_word(c) for c in body.split(",")) if body else ()
            if not all(is_column(c) and c and max(c) <= n for c in cols):
                raise UsageError(f"{body!r} is not a tuple of non-empty columns over 1..{n}")
            if not cx.is_critical(cols):
                raise UsageError(f"({body}) is not a critical tuple")
            f = cx.indicator(*cols)
        else:
            raise UsageError(f"cannot parse cochain {text!r}")
        f = coeff * f
        if total is not None and total.degree != f.degree:
            raise UsageError("terms of a cochain must share one degree")
        total = f if total is None else total + f
    if total is None:
        raise UsageError(f"empty cochain {text!r}")
    return total


def cmd_cup(a) -> int:
    field = parse_field(a.field)
    f = parse_cochain(a.f, a.n, a.character, field)
    g = parse_cochain(a.g, a.n, a.character, field)
    h = f ^ g
    out = h.to_dict()
    out["cochain"] = str(h)
    print(_dump(out))
    return 0


def cmd_center(a) -> int:
    w = _word(a.word)
    T = tableau_of_word(w)
    print(_dump({
        "word": _fmt(w),
        "tableau": str(T),
        "central": plactic.is_central(w, a.n),
        "longest_column_power": plactic.is_longest_column_power(T, a.n),
    }))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="braidedplactic", description="Plactic monoids through braidings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("tableau", help="tableau of a word")
    s.add_argument("word")
    s.set_defaults(func=cmd_tableau)

    s = sub.add_parser("insert", help="insert a letter into a tableau")
    s.add_argument("--side", choices=("left", "right"), default="right")
    s.add_argument("letter")
    s.add_argument("tableau")
    s.set_defaults(func=cmd_insert)

    s = sub.add_parser("product", help="product of two tableaux")
    s.add_argument("t1")
    s.add_argument("t2")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("normal-form", help="row or column factorization of a word")
    s.add_argument("--kind", choices=("row", "col"), default="col")
    s.add_argument("word")
    s.set_defaults(func=cmd_normal_form)

    s = sub.add_parser("sigma", help="apply the row or column braiding")
    s.add_argument("--kind", choices=("row", "col"), default="col")
    s.add_argument("u")
    s.add_argument("v")
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("s-op", help="letter-permuting operator s_i on a word")
    s.add_argument("i", type=int)
    s.add_argument("word")
    s.set_defaults(func=cmd_s_op)

    s = sub.add_parser("verify", help="run an exhaustive verification suite")
    s.add_argument("--suite", choices=SUITES, required=True)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--kind", choices=("row", "col"), default="col")
    s.add_argument("--max-len", type=int, default=2, help="word/row length bound")
    s.add_argument("--max-width", type=int, default=4, help="normal tuple width bound")
    s.add_argument("--max-alpha", type=int, default=2, help="largest decoration")
    s.add_argument("--k", type=int, default=2, help="tuple width (or degree bound for cohomology)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("betti", help="Betti numbers of the column complex")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--character", choices=("eps0", "eps1"), default="eps1")
    s.add_argument("--field", default="Q")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("cup", help="cup product of two cochains")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--character", choices=("eps0", "eps1"), default="eps1")
    s.add_argument("--field", default="Q")
    s.add_argument("f")
    s.add_argument("g")
    s.set_defaults(func=cmd_cup)

    s = sub.add_parser("center", help="plactic centrality of a word")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("word")
    s.set_defaults(func=cmd_center)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except cohomology.ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
