"""Exact sparse rational linear algebra over integer-indexed basis slots.

Vectors are sparse dicts {slot: coefficient} with int or Fraction values and
no stored zeros.  SpanBasis keeps a fully row-reduced basis: pivots strictly
increasing, pivot coefficients 1, every row zero at the other rows' pivots.
Operations are pure; instances are values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _subtract(target: dict, factor, source: dict) -> None:
    for s, c in source.items():
        nv = target.get(s, 0) - factor * c
        if nv:
            target[s] = nv
        else:
            target.pop(s, None)


def _normalized(vec: dict) -> dict:
    pivot = min(vec)
    pc = vec[pivot]
    if pc == 1:
        return vec
    inv = Fraction(1) / pc
    return {s: c * inv for s, c in vec.items()}


class SpanBasis:
    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[tuple[int, dict]] = ()):
        self._rows = tuple(rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def pivots(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._rows)

    def row_vectors(self) -> list[dict]:
        return [dict(v) for _, v in self._rows]

    def reduce(self, vec: dict) -> dict:
        """Residual of vec after elimination against the basis (a new dict)."""
        r = {s: c for s, c in vec.items() if c}
        for pivot, row in self._rows:
            c = r.get(pivot)
            if c:
                _subtract(r, c, row)
        return r

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: dict) -> tuple["SpanBasis", bool]:
        """Basis of the span grown by vec, plus whether the span grew."""
        r = self.reduce(vec)
        if not r:
            return self, False
        r = _normalized(r)
        pivot = min(r)
        rows = []
        for p, row in self._rows:
            c = row.get(pivot)
            if c:
                nr = dict(row)
                _subtract(nr, c, r)
                rows.append((p, nr))
            else:
                rows.append((p, row))
        rows.append((pivot, r))
        rows.sort(key=lambda pr: pr[0])
        return SpanBasis(rows), True

    def insert_all(self, vecs: Iterable[dict]) -> "SpanBasis":
        b = self
        for v in vecs:
            b, _ = b.insert(v)
        return b

    def union(self, other: "SpanBasis") -> "SpanBasis":
        return self.insert_all(v for _, v in other._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpanBasis):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self) -> str:
        return f"SpanBasis(dim={self.dim}, pivots={self.pivots()})"


def span_insert(basis: SpanBasis, vec: dict) -> tuple[SpanBasis, bool]:
    return basis.insert(vec)


def span_contains(basis: SpanBasis, vec: dict) -> bool:
    return basis.contains(vec)


def kernel_combinations(rows: Sequence[dict]) -> list[dict]:
    """Exact null space of a list of sparse vectors.

    Returns combination dicts {row_index: coefficient} with
    sum_j c_j rows[j] = 0; there are len(rows) - rank of them.
    """
    elim: list[tuple[int, dict, dict]] = []
    kernel: list[dict] = []
    for j, vec in enumerate(rows):
        lhs = {s: c for s, c in vec.items() if c}
        combo = {j: 1}
        for pivot, plhs, pcombo in elim:
            c = lhs.get(pivot)
            if c:
                _subtract(lhs, c, plhs)
                _subtract(combo, c, pcombo)
        if not lhs:
            kernel.append(combo)
            continue
        pivot = min(lhs)
        pc = lhs[pivot]
        if pc != 1:
            inv = Fraction(1) / pc
            lhs = {s: c * inv for s, c in lhs.items()}
            combo = {s: c * inv for s, c in combo.items()}
        elim.append((pivot, lhs, combo))
    return kernel
