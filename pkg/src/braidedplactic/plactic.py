"""Knuth relations, plactic equality and the center of the plactic monoid."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from operator import le
from typing import Sequence

from .tableau import Tableau, Word, read, tableau_of_word

DEFAULT_BFS_CAP = 8


@dataclass(frozen=True)
class PlacticElement:
    """An element of the plactic monoid, kept as its canonical tableau."""

    canonical: Tableau

    @classmethod
    def of_word(cls, word: Sequence[int]) -> "PlacticElement":
        return cls(tableau_of_word(word))

    def __mul__(self, other: "PlacticElement") -> "PlacticElement":
        return PlacticElement(self.canonical * other.canonical)

    def word(self) -> Word:
        return read(self.canonical, "rows")

    def __str__(self) -> str:
        return str(self.canonical)


def knuth_neighbors(word: Sequence[int]) -> set[Word]:
    """Words reachable from ``word`` by one elementary Knuth move.

    The moves are ``xzy <-> zxy`` for ``x <= y < z`` and ``yxz <-> yzx``
    for ``x < y <= z``, applied in either direction at any position.
    """
    w = tuple(word)
    out = set()
    for i in range(len(w) - 2):
        a, b, c = w[i : i + 3]
        # xzy -> zxy, and zxy -> xzy
        if a <= c < b or b <= c < a:
            out.add(w[:i] + (b, a, c) + w[i + 3 :])
        # yxz -> yzx, and yzx -> yxz
        if b < a <= c or c < a <= b:
            out.add(w[:i] + (a, c, b) + w[i + 3 :])
    out.discard(w)
    return out


def knuth_class(word: Sequence[int], cap: int = DEFAULT_BFS_CAP) -> set[Word]:
    """BFS closure of ``word`` under Knuth moves."""
    w = tuple(word)
    if len(w) > cap:
        raise ValueError(f"word length {len(w)} exceeds BFS cap {cap}")
    seen = {w}
    queue = deque([w])
    while queue:
        for nxt in knuth_neighbors(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def plactic_equal(w1: Sequence[int], w2: Sequence[int], *, oracle: bool = False,
                  cap: int = DEFAULT_BFS_CAP) -> bool:
    """Equality in the plactic monoid.

    By default compares insertion tableaux. With ``oracle=True`` the answer is
    computed from the Knuth-move closure instead, which never touches the
    insertion code.
    """
    w1, w2 = tuple(w1), tuple(w2)
    if oracle:
        if sorted(w1) != sorted(w2):
            return False
        return w2 in knuth_class(w1, cap)
    return tableau_of_word(w1) == tableau_of_word(w2)


def longest_nondec_subword(word: Sequence[int]) -> int:
    """Length of the longest non-decreasing subsequence (quadratic DP)."""
    best: list[int] = []
    for i, x in enumerate(word):
        best.append(1 + max((best[j] for j in range(i) if word[j] <= x), default=0))
    return max(best, default=0)


def longest_nondec_subword_brute(word: Sequence[int]) -> int:
    """Exponential reference: try every subsequence, longest first."""
    w = tuple(word)
    for k in range(len(w), 0, -1):
        for sub in combinations(w, k):
            if all(map(le, sub, sub[1:])):
                return k
    return 0


def longest_column(n: int) -> Word:
    return tuple(range(n, 0, -1))


def is_central(word: Sequence[int], n: int) -> bool:
    """Whether ``word`` commutes with every letter of ``{1..n}`` plactically."""
    w = tuple(word)
    if any(x > n for x in w):
        raise ValueError(f"word {w} has letters above {n}")
    return all(tableau_of_word(w + (a,)) == tableau_of_word((a,) + w)
               for a in range(1, n + 1))


def is_longest_column_power(T: Tableau, n: int) -> bool:
    """Whether ``T`` is a power of ``n (n-1) ... 1`` in the plactic monoid."""
    c = longest_column(n)
    return all(col == c for col in T.columns)
