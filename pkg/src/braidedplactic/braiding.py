"""Row and column braidings, their decorated extensions, braid-word actions,
normal forms, and exhaustive checks of the braided-set axioms.

Rows and columns are plain tuples of letters; the empty tuple is the empty
row ``e_R`` / empty column ``e_C``, which also serves as pseudo-unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product as cartesian
from typing import Any, Callable, Hashable, Iterable, Sequence

from .report import Report
from .tableau import (
    EMPTY,
    Tableau,
    Word,
    column_tableau,
    format_word,
    is_column,
    is_row,
    is_subword,
    order_rel,
    product,
    row_tableau,
    tableau_of_word,
)

Sigma = Callable[[Any, Any], tuple[Any, Any]]
E: Word = ()


# -- the two braidings on rows and columns ------------------------------------

@lru_cache(maxsize=None)
def _sigma_R(r1: Word, r2: Word) -> tuple[Word, Word]:
    P = product(row_tableau(r1), row_tableau(r2))
    if P.n_rows == 2:
        return P.rows[0], P.rows[1]
    return E, (P.rows[0] if P.rows else E)


@lru_cache(maxsize=None)
def _sigma_C(c1: Word, c2: Word) -> tuple[Word, Word]:
    P = product(column_tableau(c1), column_tableau(c2))
    cols = P.columns
    if len(cols) == 2:
        return cols[0], cols[1]
    return (cols[0] if cols else E), E


def sigma_R(r1: Sequence[int], r2: Sequence[int]) -> tuple[Word, Word]:
    """Row braiding: the two rows of ``r1 * r2`` (top, bottom), or ``(e, r1 r2)``."""
    r1, r2 = tuple(r1), tuple(r2)
    if not (is_row(r1) and is_row(r2)):
        raise ValueError("sigma_R needs two rows")
    return _sigma_R(r1, r2)


def sigma_C(c1: Sequence[int], c2: Sequence[int]) -> tuple[Word, Word]:
    """Column braiding: the two columns of ``c1 * c2`` (left, right), or ``(c, e)``."""
    c1, c2 = tuple(c1), tuple(c2)
    if not (is_column(c1) and is_column(c2)):
        raise ValueError("sigma_C needs two columns")
    return _sigma_C(c1, c2)


def sigma_for(kind: str) -> Sigma:
    if kind == "row":
        return sigma_R
    if kind == "col":
        return sigma_C
    raise ValueError(f"unknown braiding kind {kind!r}")


# -- decorated tableaux -------------------------------------------------------

@dataclass(frozen=True)
class DecoratedTableau:
    tableau: Tableau = EMPTY
    alpha: int = 0

    def __post_init__(self):
        if self.alpha < 0:
            raise ValueError("decoration must be non-negative")

    def __str__(self) -> str:
        return f"({self.tableau},{self.alpha})"


DECORATED_UNIT = DecoratedTableau()


def _count(kind: str, T: Tableau) -> int:
    if kind == "row":
        return T.n_rows
    if kind == "col":
        return T.n_cols
    raise ValueError(f"unknown braiding kind {kind!r}")


def decorated_product(kind: str, u: DecoratedTableau, v: DecoratedTableau) -> DecoratedTableau:
    P = product(u.tableau, v.tableau)
    extra = _count(kind, u.tableau) + _count(kind, v.tableau) - _count(kind, P)
    return DecoratedTableau(P, u.alpha + v.alpha + extra)


def sigma_decorated(kind: str, u: DecoratedTableau,
                    v: DecoratedTableau) -> tuple[DecoratedTableau, DecoratedTableau]:
    """Insertion braiding on decorated tableaux.

    Returns ``((T2', a2'), (T1', a1'))`` where the rows (resp. columns) of
    ``T2'`` followed by those of ``T1'`` make up ``T1 * T2``, and the
    decorations absorb the rows (columns) that went missing.
    """
    T1, a1 = u.tableau, u.alpha
    T2, a2 = v.tableau, v.alpha
    P = product(T1, T2)
    if kind == "row":
        total = P.n_rows
        need = a1 + T1.n_rows
        if total >= need:
            T1p = Tableau(P.rows[total - need:])
            T2p = Tableau(P.rows[: total - need])
            return (DecoratedTableau(T2p, a2 + T2.n_rows - T2p.n_rows),
                    DecoratedTableau(T1p, 0))
        return (DecoratedTableau(EMPTY, a2 + T2.n_rows),
                DecoratedTableau(P, need - total))
    if kind == "col":
        cols = P.columns
        total = len(cols)
        need = a2 + T2.n_cols
        if total >= need:
            T2p = Tableau.from_columns(cols[:need])
            T1p = Tableau.from_columns(cols[need:])
            return (DecoratedTableau(T2p, 0),
                    DecoratedTableau(T1p, a1 + T1.n_cols - T1p.n_cols))
        return (DecoratedTableau(P, need - total),
                DecoratedTableau(EMPTY, a1 + T1.n_cols))
    raise ValueError(f"unknown braiding kind {kind!r}")


def decorated_sigma(kind: str) -> Sigma:
    return lambda u, v: sigma_decorated(kind, u, v)


# -- generic braided sets -----------------------------------------------------

@dataclass(frozen=True)
class BraidedSetSpec:
    """A braiding on a finite (or truncated) domain with a pseudo-unit."""

    sigma: Sigma
    unit: Hashable
    domain: tuple
    name: str = "braided set"
    fmt: Callable[[Any], str] = str

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        if self.unit not in self.domain:
            raise ValueError("pseudo-unit must belong to the domain")


def all_columns(n: int) -> list[Word]:
    """All columns over {1..n}, ordered by subset bitmask (bit a-1 for letter a)."""
    return [mask_to_column(m) for m in range(1 << n)]


def column_to_mask(col: Sequence[int]) -> int:
    m = 0
    for x in col:
        m |= 1 << (x - 1)
    return m


def mask_to_column(mask: int) -> Word:
    return tuple(a + 1 for a in range(mask.bit_length() - 1, -1, -1) if mask >> a & 1)


def all_rows(n: int, max_len: int) -> list[Word]:
    """Rows over {1..n} of length <= max_len, by length then lexicographically."""
    out: list[Word] = []
    for length in range(max_len + 1):
        out.extend(_nondecreasing(n, length))
    return out


def _nondecreasing(n: int, length: int, low: int = 1) -> Iterable[Word]:
    if length == 0:
        yield ()
        return
    for x in range(low, n + 1):
        for rest in _nondecreasing(n, length - 1, x):
            yield (x,) + rest


def _fmt_word(w) -> str:
    return format_word(w)


def column_spec(n: int) -> BraidedSetSpec:
    return BraidedSetSpec(sigma_C, E, tuple(all_columns(n)), f"sigma_C on Col(A_{n})", _fmt_word)


def row_spec(n: int, max_len: int) -> BraidedSetSpec:
    return BraidedSetSpec(sigma_R, E, tuple(all_rows(n, max_len)),
                          f"sigma_R on rows over A_{n} of length <= {max_len}", _fmt_word)


def flip_spec(domain: Sequence, unit: Hashable) -> BraidedSetSpec:
    return BraidedSetSpec(lambda x, y: (y, x), unit, tuple(domain), "flip")


def associative_spec(domain: Sequence, mul: Callable[[Any, Any], Any], unit: Hashable) -> BraidedSetSpec:
    """The braiding ``(v, w) -> (1, v w)`` of a monoid (closed finite domain)."""
    return BraidedSetSpec(lambda v, w: (unit, mul(v, w)), unit, tuple(domain), "associativity braiding")


def words_tableaux(n: int, max_len: int) -> list[Tableau]:
    """Distinct tableaux of words of length <= max_len over {1..n}, in a fixed order."""
    seen: dict[Tableau, None] = {}
    for length in range(max_len + 1):
        for w in cartesian(range(1, n + 1), repeat=length):
            seen.setdefault(tableau_of_word(w), None)
    return list(seen)


def decorated_domain(n: int, max_len: int, alphas: Iterable[int]) -> list[DecoratedTableau]:
    alphas = tuple(alphas)
    return [DecoratedTableau(T, a) for T in words_tableaux(n, max_len) for a in alphas]


def decorated_spec(kind: str, n: int, max_len: int, alphas: Iterable[int] = (0,)) -> BraidedSetSpec:
    return BraidedSetSpec(decorated_sigma(kind), DECORATED_UNIT,
                          tuple(decorated_domain(n, max_len, alphas)),
                          f"decorated sigma_{kind}")


def _as_sigma(obj) -> Sigma:
    if isinstance(obj, BraidedSetSpec):
        return obj.sigma
    if isinstance(obj, str):
        return sigma_for(obj)
    return obj


# -- braid words --------------------------------------------------------------

def apply_generator(sigma, i: int, tup: Sequence) -> tuple:
    """``b_i``: apply the braiding at 1-based positions ``(i, i+1)``."""
    t = list(tup)
    if not 1 <= i < len(t):
        raise ValueError(f"generator b_{i} out of range for width {len(t)}")
    t[i - 1], t[i] = _as_sigma(sigma)(t[i - 1], t[i])
    return tuple(t)


def apply_braid_word(sigma, word: Sequence[int], tup: Sequence) -> tuple:
    """Act by a positive braid word; the rightmost generator acts first."""
    s = _as_sigma(sigma)
    t = list(tup)
    for i in word:
        if not 1 <= i < len(t):
            raise ValueError(f"generator b_{i} out of range for width {len(t)}")
    for i in reversed(word):
        t[i - 1], t[i] = s(t[i - 1], t[i])
    return tuple(t)


def delta_word(k: int) -> tuple[int, ...]:
    """``b_1 (b_2 b_1) ... (b_{k-1} ... b_1)`` as a list of indices."""
    return tuple(i for top in range(1, k) for i in range(top, 0, -1))


def is_normal(sigma, tup: Sequence) -> bool:
    s = _as_sigma(sigma)
    return all(s(tup[j], tup[j + 1]) == (tup[j], tup[j + 1]) for j in range(len(tup) - 1))


def delta_normalize(sigma, tup: Sequence) -> tuple:
    return apply_braid_word(sigma, delta_word(len(tup)), tup)


def normalize_by_rewriting(sigma, tup: Sequence, max_steps: int = 100_000) -> tuple:
    """Alternative normalizer: braid the leftmost non-fixed pair until normal."""
    s = _as_sigma(sigma)
    t = list(tup)
    for _ in range(max_steps):
        for j in range(len(t) - 1):
            out = s(t[j], t[j + 1])
            if out != (t[j], t[j + 1]):
                t[j], t[j + 1] = out
                break
        else:
            return tuple(t)
    raise RuntimeError("rewriting did not reach a normal word")


def reduced_normal_form(kind: str, factors: Sequence[Sequence[int]]) -> tuple[Word, ...]:
    """Normalize a tuple of rows (columns) and drop the empty ones.

    For single letters spelling ``w`` this returns the rows (columns) of the
    insertion tableau of ``w``.
    """
    check = is_row if kind == "row" else is_column
    facs = tuple(tuple(f) for f in factors)
    for f in facs:
        if not check(f):
            raise ValueError(f"{f} is not a valid {kind}")
    return tuple(f for f in delta_normalize(sigma_for(kind), facs) if f)


def normal_factors(kind: str, T: Tableau) -> tuple[Word, ...]:
    """Reduced normal word of a tableau: rows top to bottom, or columns left to right."""
    return T.rows if kind == "row" else T.columns


def normal_product(kind: str, u: Sequence[Word], v: Sequence[Word]) -> tuple[Word, ...]:
    """Product of reduced normal words: normalize the concatenation."""
    return tuple(f for f in delta_normalize(sigma_for(kind), tuple(u) + tuple(v)) if f)


def tableau_of_factors(kind: str, factors: Sequence[Word]) -> Tableau:
    if kind == "row":
        return Tableau(tuple(f for f in factors if f))
    return Tableau.from_columns(factors)


# -- verification -------------------------------------------------------------

def normal_tuples(spec: BraidedSetSpec, max_width: int) -> Iterable[tuple]:
    """All normal tuples of width 1..max_width, in domain-lexicographic order."""
    s = spec.sigma
    fixed_after = {x: [y for y in spec.domain if s(x, y) == (x, y)] for x in spec.domain}

    def extend(prefix):
        yield prefix
        if len(prefix) < max_width:
            for y in fixed_after[prefix[-1]]:
                yield from extend(prefix + (y,))

    for x in spec.domain:
        yield from extend((x,))


def _fmt_tuple(spec: BraidedSetSpec, t) -> str:
    return "(" + ", ".join(spec.fmt(x) for x in t) + ")"


def verify_braided_set(spec: BraidedSetSpec, max_width: int = 4) -> Report:
    """Exhaustive YBE, idempotency and pseudo-unit checks over ``spec.domain``."""
    s = spec.sigma
    rep = Report(f"braided set: {spec.name}", info={"domain_size": len(spec.domain)})
    ybe = rep.check("ybe")
    idem = rep.check("idempotent")
    pu1 = rep.check("pseudo_unit_1")
    pu2 = rep.check("pseudo_unit_2")
    dom = spec.domain

    table = {(x, y): s(x, y) for x in dom for y in dom}

    def sig(x, y):
        out = table.get((x, y))
        return out if out is not None else s(x, y)

    for x, y, z in cartesian(dom, repeat=3):
        # (s x 1)(1 x s)(s x 1) versus (1 x s)(s x 1)(1 x s)
        a, b = sig(x, y); b, c = sig(b, z); a, b = sig(a, b)
        left = (a, b, c)
        b, c = sig(y, z); a, b = sig(x, b); b, c = sig(b, c)
        right = (a, b, c)
        ybe.tick(left == right, _fmt_tuple(spec, (x, y, z)))

    for (x, y), out in table.items():
        idem.tick(sig(*out) == out, _fmt_tuple(spec, (x, y)))

    u = spec.unit
    for x in dom:
        allowed = {(u, x), (x, u)}
        pu1.tick(sig(u, x) in allowed and sig(x, u) in allowed, spec.fmt(x))

    for t in normal_tuples(spec, max_width):
        for j, x in enumerate(t):
            if x == u:
                dropped = t[:j] + t[j + 1:]
                pu2.tick(is_normal(sig, dropped), _fmt_tuple(spec, t))
    return rep


def _row_ge(u: Word, v: Word) -> bool:
    return order_rel("row-weak", u, v)


def verify_observations(kind: str, domain: Sequence[Word]) -> Report:
    """Exhaustive checks of the comparison, subcolumn and weak-invertibility facts."""
    dom = [tuple(x) for x in domain]
    sig = sigma_for(kind)
    table = {(a, b): sig(a, b) for a in dom for b in dom}
    rep = Report(f"observations for sigma_{kind}", info={"domain_size": len(dom)})
    cmp_ = rep.check("comparison")
    for (a1, a2), (a3, a4) in table.items():
        quad = {1: a1, 2: a2, 3: a3, 4: a4}
        pairs = [(i, j) for i in range(1, 5) for j in range(1, 5) if i != j and (i == 3 or j == 4)]
        if kind == "row":
            ok = (is_subword(a3, a1) and is_subword(a2, a4)
                  and order_rel("row-strict", a3, a4) and order_rel("row-strict", a3, a2)
                  and all(_row_ge(quad[i], quad[j]) for i, j in pairs))
        else:
            ok = (set(a1) <= set(a3) and set(a4) <= set(a2)
                  and all(order_rel("col", quad[i], quad[j]) for i, j in pairs))
        cmp_.tick(ok, f"{format_word(a1)}, {format_word(a2)}")

    if kind == "col":
        sub = rep.check("subcolumn")
        for (a1, a2), (a3, a4) in table.items():
            is_sub = set(a1) <= set(a2)
            ok = ((a3 == a2 or a4 == a1) == is_sub)
            if is_sub:
                ok = ok and (a3, a4) == (a2, a1) and table[(a2, a1)] == (a2, a1)
            sub.tick(ok, f"{format_word(a1)}, {format_word(a2)}")

    quads = [(a1, a2, a3, a4) for (a1, a2), (a3, a4) in table.items()]
    weak = rep.check("weak_invertibility")
    for keep in combinations(range(4), 3):
        _determines(quads, keep, weak)
    if kind == "row":
        _determines(quads, (0, 3), rep.check("row_a1_a4_determine"))
    else:
        _determines(quads, (0, 1), rep.check("col_a1_a2_determine"))
    return rep


def _determines(quads, keep, chk) -> None:
    seen: dict[tuple, tuple] = {}
    for q in quads:
        key = tuple(q[i] for i in keep)
        prev = seen.setdefault(key, q)
        label = "a" + "".join(str(i + 1) for i in keep)
        chk.tick(prev == q, f"{label}: " + " | ".join(format_word(x) for x in (prev + q)))


def verify_monoid_compat(kind: str, elements: Sequence[DecoratedTableau]) -> Report:
    """Braided commutative monoid axioms for decorated tableaux, plus side facts.

    Checks YBE, the two product-compatibility axioms, the exchange law
    ``w' v' = v w``, the unit axiom, ``sigma^3 = sigma``, idempotency on
    each level set ``count(T) + alpha = m``, content conservation and
    subadditivity of the row/column count.
    """
    els = list(elements)
    s = decorated_sigma(kind)
    mul = lambda x, y: decorated_product(kind, x, y)  # noqa: E731
    table = {(x, y): s(x, y) for x in els for y in els}

    def sig(x, y):
        out = table.get((x, y))
        return out if out is not None else s(x, y)

    rep = Report(f"decorated braided monoid ({kind})", info={"elements": len(els)})
    ybe, left_mul, right_mul = rep.check("ybe"), rep.check("product_left"), rep.check("product_right")
    exch, unit = rep.check("exchange"), rep.check("unit")
    cube, level = rep.check("cube"), rep.check("level_idempotent")
    cons, sub = rep.check("content"), rep.check("subadditive")

    for u, v, w in cartesian(els, repeat=3):
        label = f"{u} {v} {w}"
        a, b = sig(u, v); b, c = sig(b, w); a, b = sig(a, b)
        left = (a, b, c)
        b, c = sig(v, w); a, b = sig(u, b); b, c = sig(b, c)
        ybe.tick(left == (a, b, c), label)

        w1, v1 = sig(v, w)
        w2, u1 = sig(u, w1)
        left_mul.tick(s(mul(u, v), w) == (w2, mul(u1, v1)), label)
        v1, u1 = sig(u, v)
        w1, u2 = sig(u1, w)
        right_mul.tick(s(u, mul(v, w)) == (mul(v1, w1), u2), label)

    for (v, w), (w1, v1) in table.items():
        label = f"{v} {w}"
        exch.tick(mul(w1, v1) == mul(v, w), label)
        once = (w1, v1)
        cube.tick(sig(*sig(*once)) == once, label)
        T = product(v.tableau, w.tableau)
        cons.tick(sorted(_letters(w1.tableau) + _letters(v1.tableau)) == sorted(_letters(T)), label)
        sub.tick(_count(kind, T) <= _count(kind, v.tableau) + _count(kind, w.tableau), label)
        lv = _count(kind, v.tableau) + v.alpha
        lw = _count(kind, w.tableau) + w.alpha
        if lv == lw:
            ok = (_count(kind, w1.tableau) + w1.alpha == lv
                  and _count(kind, v1.tableau) + v1.alpha == lv
                  and sig(*once) == once)
            level.tick(ok, label)

    for x in els:
        unit.tick(s(DECORATED_UNIT, x) == (x, DECORATED_UNIT)
                  and s(x, DECORATED_UNIT) == (DECORATED_UNIT, x), str(x))
    return rep


def _letters(T: Tableau) -> list[int]:
    return [x for r in T.rows for x in r]
