"""Young tableaux in French convention, Schensted insertion and the tableau product.

A tableau is stored as its rows listed top to bottom; the top row is the
shortest one. Columns are read top to bottom and are strictly decreasing.
Letters are positive integers.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]

EMPTY_TOKEN = "e"


def _check_letters(word: Sequence[int]) -> None:
    for x in word:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"letters must be positive integers, got {x!r}")


def is_row(word: Sequence[int]) -> bool:
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def is_column(word: Sequence[int]) -> bool:
    return all(word[i] > word[i + 1] for i in range(len(word) - 1))


def order_rel(kind: str, u: Sequence[int], v: Sequence[int]) -> bool:
    """Compare two rows or two columns.

    ``row-strict`` is u >_R v: ``|u| <= |v|`` and ``u[i] > v[i]`` for every
    position of ``u``. ``row-weak`` is the same with ``>=``. ``col`` is
    u <=_C v: ``|u| >= |v|`` and the bottom ``|v|`` letters of ``u`` are
    letterwise ``<=`` those of ``v``. The empty row dominates every row.
    """
    _check_letters(u)
    _check_letters(v)
    if kind in ("row-strict", "row-weak"):
        if not (is_row(u) and is_row(v)):
            raise ValueError("row comparison needs non-decreasing words")
        if len(u) > len(v):
            return False
        if kind == "row-strict":
            return all(a > b for a, b in zip(u, v))
        return all(a >= b for a, b in zip(u, v))
    if kind == "col":
        if not (is_column(u) and is_column(v)):
            raise ValueError("column comparison needs strictly decreasing words")
        s, t = len(u), len(v)
        if s < t:
            return False
        return all(u[i + s - t] <= v[i] for i in range(t))
    raise ValueError(f"unknown order kind {kind!r}")


@dataclass(frozen=True)
class Tableau:
    """A semistandard Young tableau, rows top to bottom.

    Construction validates the rows eagerly; every other function in the
    package assumes a valid tableau.
    """

    rows: tuple[Word, ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if not r:
                raise ValueError("tableau rows must be non-empty")
            _check_letters(r)
            if not is_row(r):
                raise ValueError(f"row {r} is not non-decreasing")
        for upper, lower in zip(rows, rows[1:]):
            if len(upper) > len(lower) or any(a <= b for a, b in zip(upper, lower)):
                raise ValueError(f"rows {upper} and {lower} do not stack into a tableau")

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]]) -> "Tableau":
        """Assemble a tableau from its columns (each read top to bottom)."""
        cols = [tuple(c) for c in columns if len(c)]
        for c in cols:
            _check_letters(c)
            if not is_column(c):
                raise ValueError(f"column {c} is not strictly decreasing")
        if not cols:
            return cls()
        height = len(cols[0])
        rows = []
        for level in range(height - 1, -1, -1):
            rows.append(tuple(c[len(c) - 1 - level] for c in cols if len(c) > level))
        return cls(tuple(rows))

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        text = text.strip()
        if text in ("", EMPTY_TOKEN):
            return cls()
        return cls(tuple(parse_word(part) for part in text.split("/")))

    @property
    def columns(self) -> tuple[Word, ...]:
        if not self.rows:
            return ()
        width = len(self.rows[-1])
        return tuple(tuple(r[j] for r in self.rows if len(r) > j) for j in range(width))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[-1]) if self.rows else 0

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __bool__(self) -> bool:
        return bool(self.rows)

    def __mul__(self, other: "Tableau") -> "Tableau":
        return product(self, other)

    def content(self, n: int | None = None) -> tuple[int, ...]:
        return content(read(self, "rows"), n)

    def __str__(self) -> str:
        if not self.rows:
            return EMPTY_TOKEN
        return "/".join(format_word(r) for r in self.rows)

    def __repr__(self) -> str:
        return f"Tableau({str(self)!r})"


EMPTY = Tableau()


def parse_word(text: str) -> Word:
    """Parse ``"3266134"``, ``"3 2 6 6 1 3 4"`` or ``"e"`` (empty)."""
    text = text.strip()
    if text in ("", EMPTY_TOKEN):
        return ()
    parts = text.replace(",", " ").split()
    if len(parts) == 1 and parts[0].isdigit():
        letters = tuple(int(ch) for ch in parts[0])
    else:
        try:
            letters = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot parse word {text!r}") from None
    _check_letters(letters)
    return letters


def format_word(word: Sequence[int]) -> str:
    if not word:
        return EMPTY_TOKEN
    if all(x <= 9 for x in word):
        return "".join(str(x) for x in word)
    return " ".join(str(x) for x in word)


def content(word: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Letter multiplicities ``(#1, #2, ..., #n)``."""
    top = max(word, default=0)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"letter {top} exceeds alphabet bound {n}")
    counts = [0] * n
    for x in word:
        counts[x - 1] += 1
    return tuple(counts)


def read(T: Tableau, mode: str = "rows") -> Word:
    if mode == "rows":
        return tuple(x for r in T.rows for x in r)
    if mode == "cols":
        return tuple(x for c in T.columns for x in c)
    raise ValueError(f"unknown reading mode {mode!r}")


def shape(T: Tableau) -> tuple[int, ...]:
    return tuple(len(r) for r in T.rows)


def _insert_right_rows(rows: list[list[int]], x: int) -> None:
    # rows are mutated in place; the bumped letter climbs from the bottom row
    level = len(rows) - 1
    while level >= 0:
        row = rows[level]
        if x >= row[-1]:
            row.append(x)
            return
        j = bisect.bisect_right(row, x)
        row[j], x = x, row[j]
        level -= 1
    rows.insert(0, [x])


def insert_right(T: Tableau, x: int) -> Tableau:
    """Schensted row insertion of ``x`` from the right (``T * x``)."""
    _check_letters((x,))
    rows = [list(r) for r in T.rows]
    _insert_right_rows(rows, x)
    return Tableau(tuple(tuple(r) for r in rows))


def insert_left(x: int, T: Tableau) -> Tableau:
    """Column insertion of ``x`` from the left (``x * T``).

    ``x`` goes on top of the first column if it exceeds its top letter;
    otherwise it replaces the smallest letter ``>= x`` there, and the
    replaced letter is inserted into the remaining columns the same way.
    """
    _check_letters((x,))
    cols = [list(c) for c in T.columns]
    for col in cols:
        if x > col[0]:
            col.insert(0, x)
            break
        # col is decreasing; reverse-search for the smallest entry >= x
        j = len(col) - 1
        while col[j] < x:
            j -= 1
        col[j], x = x, col[j]
    else:
        cols.append([x])
    return Tableau.from_columns(cols)


def insert_word(T: Tableau, word: Iterable[int]) -> Tableau:
    """The insertion map: right-insert the letters of ``word`` one by one."""
    rows = [list(r) for r in T.rows]
    letters = tuple(word)
    _check_letters(letters)
    for x in letters:
        _insert_right_rows(rows, x)
    return Tableau(tuple(tuple(r) for r in rows))


def tableau_of_word(word: Sequence[int]) -> Tableau:
    return insert_word(EMPTY, word)


def product(T1: Tableau, T2: Tableau) -> Tableau:
    return insert_word(T1, read(T2, "rows"))


def row_tableau(row: Sequence[int]) -> Tableau:
    row = tuple(row)
    if not is_row(row):
        raise ValueError(f"{row} is not a row")
    return Tableau((row,) if row else ())


def column_tableau(col: Sequence[int]) -> Tableau:
    col = tuple(col)
    if not is_column(col):
        raise ValueError(f"{col} is not a column")
    return Tableau(tuple((x,) for x in col))


def is_subword(small: Sequence[int], big: Sequence[int]) -> bool:
    """Whether ``small`` is a (scattered) subsequence of ``big``."""
    it = iter(big)
    return all(any(x == y for y in it) for x in small)
