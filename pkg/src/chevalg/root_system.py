"""Root systems for the simply laced Cartan families A, D and E.

Positive roots are generated by closure from the simple roots (root-string
arithmetic) and kept in a canonical order: ascending height, with ties broken
by lexicographically descending coefficient vectors.  All indices exposed by
this module are 1-based, and index i <= rank is the i-th simple root.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence


class UnsupportedCartanTypeError(ValueError):
    """Raised for Cartan data outside the supported simply laced families."""


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family == "A":
            ok = self.rank >= 1
        elif self.family == "D":
            ok = self.rank >= 3
        elif self.family == "E":
            ok = self.rank in (6, 7, 8)
        else:
            raise UnsupportedCartanTypeError(
                f"unsupported Cartan family {self.family!r}"
            )
        if not ok:
            raise UnsupportedCartanTypeError(
                f"unsupported rank {self.rank} for family {self.family}"
            )

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise UnsupportedCartanTypeError(f"cannot parse Cartan type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _edges(ct: CartanType) -> list[tuple[int, int]]:
    n = ct.rank
    if ct.family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if ct.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E family: chain 1-3-4-...-n with node 2 attached to node 4.
    return [(1, 3)] + [(i, i + 1) for i in range(3, n)] + [(2, 4)]


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    n = ct.rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in _edges(ct):
        m[a - 1][b - 1] = m[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable positive-root data for a Cartan type.

    positive_roots holds integer coefficient vectors over the simple roots;
    root_weights[i] is the value vector (alpha_i(H_1), ..., alpha_i(H_k)).
    """

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    index_of: dict
    heights: tuple[int, ...]
    root_weights: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    def root_coeffs(self, i: int) -> tuple[int, ...]:
        return self.positive_roots[i - 1]

    def root_height(self, i: int) -> int:
        return self.heights[i - 1]

    def root_sum(self, i: int, j: int) -> Optional[int]:
        """Index of alpha_i + alpha_j if that vector is a positive root."""
        a, b = self.positive_roots[i - 1], self.positive_roots[j - 1]
        return self.index_of.get(tuple(x + y for x, y in zip(a, b)))

    def root_weight(self, i: int) -> tuple[int, ...]:
        """Weight of alpha_i in fundamental coordinates: alpha_i(H_j)."""
        return self.root_weights[i - 1]

    def pairing(self, coeffs: Sequence[int], i: int) -> int:
        """Cartan integer of the vector with coefficients coeffs against node i."""
        row = self.cartan_matrix[i - 1]
        return sum(c * row[m] for m, c in enumerate(coeffs) if c)

    def reflect(self, w: Sequence, i: int) -> tuple:
        """Simple reflection s_i on a weight in fundamental coordinates."""
        c = w[i - 1]
        if not c:
            return tuple(w)
        m = self.cartan_matrix
        return tuple(w[j] - c * m[j][i - 1] for j in range(self.rank))

    def dominant_conjugate(self, w: Sequence) -> tuple[tuple, int, bool]:
        """Dominant Weyl conjugate of w, the sign of the Weyl element used,
        and whether w lies on a reflection wall (zero coordinate when dominant).
        """
        v = list(w)
        m = self.cartan_matrix
        k = self.rank
        parity = 1
        guard = 0
        while True:
            for i in range(k):
                if v[i] < 0:
                    c = v[i]
                    for j in range(k):
                        v[j] -= c * m[j][i]
                    parity = -parity
                    break
            else:
                break
            guard += 1
            if guard > 16 * self.n_positive + 64:
                raise RuntimeError("dominant conjugation failed to terminate")
        return tuple(v), parity, any(x == 0 for x in v)

    def dump(self) -> str:
        lines = [f"ROOTS v1 {self.cartan_type}"]
        for idx, c in enumerate(self.positive_roots, 1):
            lines.append("ROOT {} {}".format(idx, " ".join(map(str, c))))
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootSystem:
    """Enumerate the positive roots of ct by closure from the simple roots.

    A candidate alpha + alpha_i is accepted when the alpha_i-string through
    alpha continues upward: q = p - <alpha, alpha_i^> >= 1, with p the number
    of string steps below alpha.
    """
    m = cartan_matrix(ct)
    k = ct.rank
    simple = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    known = set(simple)
    buckets = [sorted(simple, reverse=True)]
    while True:
        nxt = set()
        for alpha in buckets[-1]:
            for i in range(k):
                cand = tuple(
                    c + 1 if j == i else c for j, c in enumerate(alpha)
                )
                if cand in known or cand in nxt:
                    continue
                p = 0
                down = tuple(
                    c - 1 if j == i else c for j, c in enumerate(alpha)
                )
                while down in known:
                    p += 1
                    down = tuple(
                        c - 1 if j == i else c for j, c in enumerate(down)
                    )
                pair = sum(c * m[i][j] for j, c in enumerate(alpha) if c)
                if p - pair >= 1:
                    nxt.add(cand)
        if not nxt:
            break
        known |= nxt
        buckets.append(sorted(nxt, reverse=True))
    positive = tuple(r for bucket in buckets for r in bucket)
    index_of = {r: i for i, r in enumerate(positive, 1)}
    heights = tuple(sum(r) for r in positive)
    weights = tuple(
        tuple(sum(c * m[j][mm] for mm, c in enumerate(r) if c) for j in range(k))
        for r in positive
    )
    return RootSystem(
        cartan_type=ct,
        cartan_matrix=m,
        positive_roots=positive,
        index_of=index_of,
        heights=heights,
        root_weights=weights,
    )
