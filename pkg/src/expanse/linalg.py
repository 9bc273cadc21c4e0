"""Exact ranks over QQ and GF(p) for sparse integer matrices.

Vectors are ``dict[int, int]`` maps from coordinate to a nonzero integer
entry.  Over QQ the elimination is fraction-free on Python integers; over
GF(2) rows are packed into ``int`` bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``characteristic == 0`` is QQ, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def token(self) -> str:
        """Short name used by the CLI and reports: ``q``, ``2``, ``3``..."""
        return "q" if self.characteristic == 0 else str(self.characteristic)

    @classmethod
    def parse(cls, text) -> "Field":
        if isinstance(text, Field):
            return text
        if isinstance(text, int):
            return cls(text)
        t = str(text).strip().lower()
        if t in ("q", "qq", "0", "rational", "rationals"):
            return cls(0)
        if t.startswith("gf(") and t.endswith(")"):
            t = t[3:-1]
        elif t.startswith("gf"):
            t = t[2:]
        try:
            return cls(int(t))
        except ValueError:
            raise ValueError(f"unknown field {text!r}") from None


QQ = Field(0)
GF2 = Field(2)
GF3 = Field(3)


def as_field(f) -> Field:
    return Field.parse(f)


def rank(vectors: Iterable[dict], field=QQ) -> int:
    """Rank of the span of ``vectors`` over ``field``."""
    p = as_field(field).characteristic
    if p == 0:
        return _rank_rational(vectors)
    if p == 2:
        packed = []
        for v in vectors:
            m = 0
            for k, x in v.items():
                if x & 1:
                    m |= 1 << k
            packed.append(m)
        return rank_gf2(packed)
    return _rank_mod_p(vectors, p)


def rank_gf2(rows: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            piv = basis.get(top)
            if piv is None:
                basis[top] = row
                break
            row ^= piv
    return len(basis)


def _rank_mod_p(vectors: Iterable[dict], p: int) -> int:
    pivots: dict[int, dict] = {}
    for v in vectors:
        row = {k: x % p for k, x in v.items() if x % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {k: x * inv % p for k, x in row.items()}
                break
            b = row[c]
            for k, x in piv.items():
                y = (row.get(k, 0) - b * x) % p
                if y:
                    row[k] = y
                else:
                    row.pop(k, None)
    return len(pivots)


def _rank_rational(vectors: Iterable[dict]) -> int:
    pivots: dict[int, dict] = {}
    for v in vectors:
        row = {k: x for k, x in v.items() if x}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                break
            a, b = piv[c], row[c]
            if b % a == 0:
                q = b // a
                for k, x in piv.items():
                    y = row.get(k, 0) - q * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
            else:
                new = {k: a * x for k, x in row.items()}
                for k, x in piv.items():
                    y = new.get(k, 0) - b * x
                    if y:
                        new[k] = y
                    else:
                        new.pop(k, None)
                g = 0
                for x in new.values():
                    g = gcd(g, x)
                    if g == 1:
                        break
                row = {k: x // g for k, x in new.items()} if g > 1 else new
    return len(pivots)
