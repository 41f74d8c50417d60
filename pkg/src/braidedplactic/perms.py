"""Permutations in one-line notation (1-based) and their reduced words.

``t_i`` is the transposition ``(i, i+1)``; words compose as functions, so
the word ``(i1, ..., il)`` means ``t_i1 o ... o t_il``.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator

Perm = tuple[int, ...]


def identity(k: int) -> Perm:
    return tuple(range(1, k + 1))


def inverse(s: Perm) -> Perm:
    inv = [0] * len(s)
    for j, v in enumerate(s, 1):
        inv[v - 1] = j
    return tuple(inv)


def length(s: Perm) -> int:
    return sum(1 for a in range(len(s)) for b in range(a + 1, len(s)) if s[a] > s[b])


def compose(s: Perm, t: Perm) -> Perm:
    """``s o t``."""
    return tuple(s[t[j] - 1] for j in range(len(t)))


def transposition(i: int, k: int) -> Perm:
    p = list(range(1, k + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def from_word(word, k: int) -> Perm:
    p = identity(k)
    for i in word:
        p = compose(p, transposition(i, k))
    return p


def reduced_word(s: Perm) -> tuple[int, ...]:
    """Canonical reduced word: strip the first right descent until sorted (bubble-sort transcript)."""
    p = list(s)
    peeled = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                peeled.append(i + 1)
                p[i], p[i + 1] = p[i + 1], p[i]
                break
        else:
            return tuple(reversed(peeled))


def reduced_word_left(s: Perm) -> tuple[int, ...]:
    """A second reduced word, built from the largest left descent each time."""
    p = list(s)
    word = []
    while True:
        pos = {v: j for j, v in enumerate(p)}
        desc = [i for i in range(1, len(p)) if pos[i] > pos[i + 1]]
        if not desc:
            return tuple(word)
        i = desc[-1]
        word.append(i)
        a, b = pos[i], pos[i + 1]
        p[a], p[b] = i + 1, i


def all_reduced_words(s: Perm) -> list[tuple[int, ...]]:
    s = tuple(s)
    if length(s) == 0:
        return [()]
    out = []
    for i in range(1, len(s)):
        if s[i - 1] > s[i]:
            shorter = compose(s, transposition(i, len(s)))
            out.extend(w + (i,) for w in all_reduced_words(shorter))
    return out


def all_perms(k: int) -> Iterator[Perm]:
    yield from permutations(range(1, k + 1))


def shuffles(p: int, q: int) -> Iterator[Perm]:
    """``(p, q)``-shuffles: increasing on ``1..p`` and on ``p+1..p+q``."""
    k = p + q
    for first in combinations(range(1, k + 1), p):
        rest = [v for v in range(1, k + 1) if v not in first]
        yield tuple(first) + tuple(rest)
