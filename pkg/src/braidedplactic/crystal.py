"""Letter-permuting operators ``s_i`` on words, tableaux and decorated tuples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Callable, Iterable, Sequence

from .braiding import DecoratedTableau, apply_generator, decorated_sigma
from .plactic import knuth_neighbors
from .report import CheckResult, Report
from .tableau import Tableau, Word, format_word, read, shape, tableau_of_word


@dataclass(frozen=True)
class MatchingState:
    """Result of the cyclic ``(i+1, i)`` matching on a word.

    ``positions`` are the indices of the letters ``i`` and ``i+1`` in the
    word; ``pairs`` and ``unmatched`` refer to word indices.
    """

    positions: tuple[int, ...]
    pairs: frozenset[tuple[int, int]]
    unmatched: tuple[int, ...]


def match_rounds(word: Sequence[int], i: int) -> MatchingState:
    """Match cyclically consecutive ``(i+1, i)`` pairs in rounds until none remain.

    Consecutiveness is taken among still-unmatched letters, and the last
    letter is followed by the first one.
    """
    positions = tuple(p for p, x in enumerate(word) if x == i or x == i + 1)
    unmatched = list(positions)
    pairs = set()
    while len(unmatched) >= 2:
        m = len(unmatched)
        hits = [j for j in range(m)
                if word[unmatched[j]] == i + 1 and word[unmatched[(j + 1) % m]] == i]
        if not hits:
            break
        gone = set()
        for j in hits:
            a, b = unmatched[j], unmatched[(j + 1) % m]
            pairs.add((a, b))
            gone.update((a, b))
        unmatched = [p for p in unmatched if p not in gone]
    return MatchingState(positions, frozenset(pairs), tuple(unmatched))


def match_scan(word: Sequence[int], i: int) -> MatchingState:
    """Same matching by a left-to-right bracket scan, run twice around the word."""
    positions = tuple(p for p, x in enumerate(word) if x == i or x == i + 1)
    stack: list[int] = []
    matched: set[int] = set()
    pairs = set()
    for _ in range(2):
        for p in positions:
            if p in matched or p in stack:
                continue
            if word[p] == i + 1:
                stack.append(p)
            elif stack:
                q = stack.pop()
                pairs.add((q, p))
                matched.update((q, p))
    unmatched = tuple(p for p in positions if p not in matched)
    return MatchingState(positions, frozenset(pairs), unmatched)


def s_word(word: Sequence[int], i: int) -> Word:
    """Flip every unmatched ``i`` / ``i+1`` after the cyclic matching."""
    if i < 1:
        raise ValueError(f"operator index must be >= 1, got {i}")
    w = list(word)
    for p in match_rounds(w, i).unmatched:
        w[p] = 2 * i + 1 - w[p]
    return tuple(w)


def s_word_classical(word: Sequence[int], i: int) -> Word:
    """Textbook variant: linear bracketing, unmatched ``i^a (i+1)^b`` become ``i^b (i+1)^a``."""
    w = list(word)
    stack: list[int] = []
    free_low: list[int] = []
    for p, x in enumerate(w):
        if x == i + 1:
            stack.append(p)
        elif x == i:
            if stack:
                stack.pop()
            else:
                free_low.append(p)
    free = sorted(free_low + stack)
    b = len(stack)
    for k, p in enumerate(free):
        w[p] = i if k < b else i + 1
    return tuple(w)


def reassemble(word: Sequence[int], shp: Sequence[int]) -> Tableau:
    """Fill a shape row by row from the top; raises if the result is not a tableau."""
    rows, pos = [], 0
    for length in shp:
        rows.append(tuple(word[pos:pos + length]))
        pos += length
    if pos != len(word):
        raise ValueError("word length does not match shape")
    return Tableau(tuple(rows))


def s_tableau(T: Tableau, i: int, *, check: bool = False) -> Tableau:
    out = tableau_of_word(s_word(read(T, "rows"), i))
    if check:
        if shape(out) != shape(T):
            raise AssertionError(f"s_{i} changed the shape of {T}")
        if reassemble(s_word(read(T, "rows"), i), shape(T)) != out:
            raise AssertionError(f"s_{i} reading does not reassemble for {T}")
    return out


def _s_cut(words: Sequence[Word], i: int) -> list[Word]:
    flat = s_word(tuple(x for w in words for x in w), i)
    out, pos = [], 0
    for w in words:
        out.append(flat[pos:pos + len(w)])
        pos += len(w)
    return out


def s_tuple(tup: Sequence[DecoratedTableau], i: int) -> tuple[DecoratedTableau, ...]:
    """``s_i`` on a tuple: act on the concatenated row readings, recut, rebuild."""
    pieces = _s_cut([read(d.tableau, "rows") for d in tup], i)
    return tuple(DecoratedTableau(reassemble(p, shape(d.tableau)), d.alpha)
                 for p, d in zip(pieces, tup))


def s_tuple_by_columns(tup: Sequence[DecoratedTableau], i: int) -> tuple[DecoratedTableau, ...]:
    pieces = _s_cut([read(d.tableau, "cols") for d in tup], i)
    return tuple(DecoratedTableau(tableau_of_word(p), d.alpha) for p, d in zip(pieces, tup))


def s_tuple_diagonal(tup: Sequence[DecoratedTableau], i: int) -> tuple[DecoratedTableau, ...]:
    """Componentwise extension; not compatible with the braid actions."""
    return tuple(DecoratedTableau(s_tableau(d.tableau, i), d.alpha) for d in tup)


def all_words(n: int, max_len: int) -> Iterable[Word]:
    for length in range(max_len + 1):
        yield from cartesian(range(1, n + 1), repeat=length)


def check_action_compat(kind: str, tuples: Iterable[Sequence[DecoratedTableau]], n: int,
                        action: Callable = s_tuple, name: str | None = None) -> CheckResult:
    """``s_i`` (via ``action``) against every ``b_l`` acting by the decorated braiding."""
    sigma = decorated_sigma(kind)
    chk = CheckResult(name or f"action_compat_{kind}")
    for t in tuples:
        t = tuple(t)
        for i in range(1, n):
            for l in range(1, len(t)):
                lhs = action(apply_generator(sigma, l, t), i)
                rhs = apply_generator(sigma, l, action(t, i))
                chk.tick(lhs == rhs, f"s_{i} b_{l} on (" + ", ".join(map(str, t)) + ")")
    return chk


def verify_crystal(n: int, max_word_len: int, tuple_word_len: int = 2, k: int = 2,
                   alphas: Sequence[int] = (0,), action: Callable = s_tuple) -> Report:
    """Exhaustive checks of the ``S_n`` action and its compatibility with braidings."""
    from .braiding import decorated_domain

    rep = Report(f"crystal operators on A_{n}",
                 info={"max_word_len": max_word_len, "tuple_word_len": tuple_word_len, "k": k})
    inv, far, braid = rep.check("involution"), rep.check("far_commutation"), rep.check("braid_relation")
    cont, match = rep.check("content"), rep.check("matching_independence")
    knuth, rt, ct = rep.check("knuth_compat"), rep.check("commute_RT"), rep.check("commute_CT")
    shp = rep.check("shape_preserved")
    cyclic_changed = 0
    idx = range(1, n)

    for w in all_words(n, max_word_len):
        label = format_word(w)
        images = {i: s_word(w, i) for i in idx}
        T = tableau_of_word(w)
        for i in idx:
            si = images[i]
            inv.tick(s_word(si, i) == w, f"{label} i={i}")
            c0, c1 = w.count(i), w.count(i + 1)
            others = all(si.count(a) == w.count(a) for a in range(1, n + 1) if a not in (i, i + 1))
            cont.tick(si.count(i) == c1 and si.count(i + 1) == c0 and others, f"{label} i={i}")
            a, b = match_rounds(w, i), match_scan(w, i)
            match.tick(a.pairs == b.pairs and a.unmatched == b.unmatched, f"{label} i={i}")
            if s_word_classical(w, i) != si:
                cyclic_changed += 1
            for w2 in knuth_neighbors(w):
                knuth.tick(tableau_of_word(s_word(w2, i)) == tableau_of_word(si), f"{label} ~ {format_word(w2)} i={i}")
            rt.tick(s_word(read(T, "rows"), i) == read(tableau_of_word(si), "rows"), f"{label} i={i}")
            ct.tick(s_word(read(T, "cols"), i) == read(tableau_of_word(si), "cols"), f"{label} i={i}")
            try:
                s_tableau(T, i, check=True)
                ok = True
            except (AssertionError, ValueError):
                ok = False
            shp.tick(ok, f"{T} i={i}")
            for j in idx:
                if abs(i - j) > 1:
                    far.tick(s_word(images[j], i) == s_word(si, j), f"{label} i={i} j={j}")
            if i + 1 < n:
                lhs = s_word(s_word(si, i + 1), i)
                rhs = s_word(s_word(images[i + 1], i), i + 1)
                braid.tick(lhs == rhs, f"{label} i={i}")
    rep.info["classical_variant_differs"] = cyclic_changed

    domain = decorated_domain(n, tuple_word_len, alphas)
    tuples = list(cartesian(domain, repeat=k))
    readings = rep.check("row_col_readings_agree")
    for t in tuples:
        for i in idx:
            readings.tick(s_tuple(t, i) == s_tuple_by_columns(t, i), f"{t} i={i}")
    for kind in ("row", "col"):
        rep.checks[f"action_compat_{kind}"] = check_action_compat(kind, tuples, n, action)
    return rep
