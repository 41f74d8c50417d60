"""Exact scalar fields and sparse Gaussian elimination.

Rows are dicts ``{column index: nonzero scalar}``. No floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable


class Rationals:
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def inv(self, x: Fraction) -> Fraction:
        return 1 / x

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x: int) -> int:
        return pow(x, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = Rationals()


def parse_field(text: str):
    """``"Q"``, ``"GF(p)"`` or ``"GFp:<p>"``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"GF\((\d+)\)|GFp:(\d+)", text)
    if not m:
        raise ValueError(f"unknown field {text!r}")
    return PrimeField(int(m.group(1) or m.group(2)))


class Eliminator:
    """Incremental row echelon form; each stored row has its pivot as smallest column."""

    def __init__(self, field=QQ):
        self.field = field
        self.pivots: dict[int, dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        f = self.field
        row = {c: f(v) for c, v in row.items() if f(v) != f.zero}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            factor = row[c]
            for cc, vv in piv.items():
                nv = row.get(cc, f.zero) - factor * vv
                if isinstance(f, PrimeField):
                    nv %= f.p
                if nv == f.zero:
                    row.pop(cc, None)
                else:
                    row[cc] = nv
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns whether it was independent of the previous ones."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        inv = self.field.inv(r[c])
        if isinstance(self.field, PrimeField):
            self.pivots[c] = {cc: vv * inv % self.field.p for cc, vv in r.items()}
        else:
            self.pivots[c] = {cc: vv * inv for cc, vv in r.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[dict], field=QQ) -> int:
    e = Eliminator(field)
    for r in rows:
        e.add(r)
    return e.rank


def transpose(rows: list[dict], n_cols: int) -> list[dict]:
    cols: list[dict] = [dict() for _ in range(n_cols)]
    for i, r in enumerate(rows):
        for j, v in r.items():
            cols[j][i] = v
    return cols


def matmul(a: list[dict], b: list[dict]) -> list[dict]:
    """Sparse product ``a @ b`` with ``a`` and ``b`` given as lists of rows."""
    out = []
    for r in a:
        acc: dict = {}
        for j, v in r.items():
            for k, w in b[j].items():
                acc[k] = acc.get(k, 0) + v * w
        out.append({k: v for k, v in acc.items() if v != 0})
    return out
