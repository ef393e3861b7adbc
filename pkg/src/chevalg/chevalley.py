"""Chevalley bases with integer structure constants for simply laced systems.

Basis slots are laid out as H_1..H_k, then X_1..X_N, then Y_1..Y_N, where the
root indices follow the canonical ordering of the RootSystem.  Signs of the
constants N(alpha, beta) are fixed by the extraspecial pair convention: for
every non-simple positive root gamma the decomposition gamma = alpha + beta
with minimal alpha gets N = +(p+1), and every other decomposition is derived
from that one through the Jacobi identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .root_system import CartanType, RootSystem, build_root_system

Coef = Union[int, Fraction]


# --- basis slot layout -----------------------------------------------------

def n_slots(rs: RootSystem) -> int:
    return rs.rank + 2 * rs.n_positive


def h_slot(rs: RootSystem, i: int) -> int:
    return i - 1


def x_slot(rs: RootSystem, i: int) -> int:
    return rs.rank + i - 1


def y_slot(rs: RootSystem, i: int) -> int:
    return rs.rank + rs.n_positive + i - 1


def slot_kind(rs: RootSystem, slot: int) -> tuple[str, int]:
    k, npos = rs.rank, rs.n_positive
    if slot < k:
        return "H", slot + 1
    if slot < k + npos:
        return "X", slot - k + 1
    return "Y", slot - k - npos + 1


def slot_name(rs: RootSystem, slot: int) -> str:
    kind, i = slot_kind(rs, slot)
    return f"{kind}[{i}]"


def _fmt_coef(c: Coef) -> str:
    f = Fraction(c)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


class LieElement:
    """Sparse exact-coefficient element over the Chevalley basis.

    Instances are treated as immutable; arithmetic returns new elements and
    zero coefficients are never stored.
    """

    __slots__ = ("rs", "coeffs")

    def __init__(self, rs: RootSystem, coeffs: dict):
        self.rs = rs
        self.coeffs = {s: c for s, c in coeffs.items() if c}

    # -- constructors --

    @classmethod
    def zero(cls, rs: RootSystem) -> "LieElement":
        return cls(rs, {})

    @classmethod
    def h_basis(cls, rs: RootSystem, i: int) -> "LieElement":
        if not 1 <= i <= rs.rank:
            raise IndexError(f"Cartan index {i} out of range for {rs.cartan_type}")
        return cls(rs, {h_slot(rs, i): 1})

    @classmethod
    def x_basis(cls, rs: RootSystem, i: int) -> "LieElement":
        if not 1 <= i <= rs.n_positive:
            raise IndexError(f"root index {i} out of range for {rs.cartan_type}")
        return cls(rs, {x_slot(rs, i): 1})

    @classmethod
    def y_basis(cls, rs: RootSystem, i: int) -> "LieElement":
        if not 1 <= i <= rs.n_positive:
            raise IndexError(f"root index {i} out of range for {rs.cartan_type}")
        return cls(rs, {y_slot(rs, i): 1})

    @classmethod
    def from_parts(cls, rs: RootSystem, h=None, x=None, y=None) -> "LieElement":
        coeffs: dict = {}
        for part, slot_fn, limit in (
            (h, h_slot, rs.rank),
            (x, x_slot, rs.n_positive),
            (y, y_slot, rs.n_positive),
        ):
            if not part:
                continue
            for i, c in part.items():
                if not 1 <= i <= limit:
                    raise IndexError(f"index {i} out of range for {rs.cartan_type}")
                coeffs[slot_fn(rs, i)] = c
        return cls(rs, coeffs)

    # -- part views (keys are 1-based indices) --

    def _part(self, kind: str) -> dict:
        return {
            i: c
            for s, c in self.coeffs.items()
            for k, i in (slot_kind(self.rs, s),)
            if k == kind
        }

    @property
    def h_part(self) -> dict:
        return self._part("H")

    @property
    def x_part(self) -> dict:
        return self._part("X")

    @property
    def y_part(self) -> dict:
        return self._part("Y")

    # -- arithmetic --

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check_same(other)
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            nv = out.get(s, 0) + c
            if nv:
                out[s] = nv
            else:
                out.pop(s, None)
        return LieElement(self.rs, out)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return LieElement(self.rs, {s: -c for s, c in self.coeffs.items()})

    def __mul__(self, scalar: Coef) -> "LieElement":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return LieElement(self.rs, {s: c * scalar for s, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return (
            self.rs.cartan_type == other.rs.cartan_type
            and self.coeffs == other.coeffs
        )

    def _check_same(self, other: "LieElement") -> None:
        if self.rs.cartan_type != other.rs.cartan_type:
            raise ValueError(
                f"elements over different root systems: "
                f"{self.rs.cartan_type} vs {other.rs.cartan_type}"
            )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for s in sorted(self.coeffs):
            c = self.coeffs[s]
            txt = f"{_fmt_coef(abs(c))}*{slot_name(self.rs, s)}"
            if not parts:
                parts.append(txt if c > 0 else "-" + txt)
            else:
                parts.append(("+ " if c > 0 else "- ") + txt)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LieElement({self.rs.cartan_type}, {self})"


# --- structure table -------------------------------------------------------

class StructureTable:
    """Integer structure constants N(alpha_i, alpha_j); immutable after build."""

    __slots__ = ("rs", "n", "_pt")

    def __init__(self, rs: RootSystem, n: dict):
        self.rs = rs
        self.n = dict(n)
        self._pt = None

    def n_const(self, i: int, j: int) -> Optional[int]:
        return self.n.get((i, j))

    # -- basis pair brackets, cached as a dense table of sparse tuples --

    def pair_table(self) -> list:
        if self._pt is None:
            self._pt = self._build_pair_table()
        return self._pt

    def _build_pair_table(self) -> list:
        rs = self.rs
        k, npos = rs.rank, rs.n_positive
        total = k + 2 * npos
        idx = rs.index_of
        roots = rs.positive_roots
        weights = rs.root_weights
        pt = [[()] * total for _ in range(total)]
        for i in range(k):
            for r in range(npos):
                w = weights[r][i]
                if w:
                    pt[i][k + r] = ((k + r, w),)
                    pt[k + r][i] = ((k + r, -w),)
                    pt[i][k + npos + r] = ((k + npos + r, -w),)
                    pt[k + npos + r][i] = ((k + npos + r, w),)
        for (i, j), c in self.n.items():
            s = idx[
                tuple(a + b for a, b in zip(roots[i - 1], roots[j - 1]))
            ]
            pt[k + i - 1][k + j - 1] = ((k + s - 1, c),)
            pt[k + npos + i - 1][k + npos + j - 1] = ((k + npos + s - 1, -c),)
        for i in range(1, npos + 1):
            ci = roots[i - 1]
            diag = tuple((m, ci[m]) for m in range(k) if ci[m])
            pt[k + i - 1][k + npos + i - 1] = diag
            pt[k + npos + i - 1][k + i - 1] = tuple((m, -c) for m, c in diag)
            for j in range(1, npos + 1):
                if j == i:
                    continue
                d = tuple(a - b for a, b in zip(ci, roots[j - 1]))
                dd = idx.get(d)
                if dd is not None:
                    slot, coef = k + dd - 1, -self.n[(j, dd)]
                else:
                    vv = idx.get(tuple(-a for a in d))
                    if vv is None:
                        continue
                    slot, coef = k + npos + vv - 1, self.n[(vv, i)]
                pt[k + i - 1][k + npos + j - 1] = ((slot, coef),)
                pt[k + npos + j - 1][k + i - 1] = ((slot, -coef),)
        return pt

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        if (
            x.rs.cartan_type != self.rs.cartan_type
            or y.rs.cartan_type != self.rs.cartan_type
        ):
            raise ValueError(
                f"bracket of elements over {x.rs.cartan_type}/{y.rs.cartan_type} "
                f"against a {self.rs.cartan_type} table"
            )
        pt = self.pair_table()
        acc: dict = {}
        for sa, ca in x.coeffs.items():
            row = pt[sa]
            for sb, cb in y.coeffs.items():
                entry = row[sb]
                if entry:
                    f = ca * cb
                    for s, c in entry:
                        acc[s] = acc.get(s, 0) + f * c
        return LieElement(self.rs, acc)


def _string_down(rs: RootSystem, j: int, i: int) -> int:
    """Number of steps the alpha_i-string continues below alpha_j."""
    p = 0
    down = tuple(a - b for a, b in zip(rs.root_coeffs(j), rs.root_coeffs(i)))
    while down in rs.index_of:
        p += 1
        down = tuple(a - b for a, b in zip(down, rs.root_coeffs(i)))
    return p


def build_structure_table(rs: RootSystem) -> StructureTable:
    """Derive all N(alpha_i, alpha_j) for summable positive pairs.

    Roots are processed in canonical (height ascending) order.  For each
    non-simple gamma, the decomposition with minimal first index gets
    N = +(p+1); the remaining decompositions (alpha, beta) follow from the
    Jacobi identity against the extraspecial pair (a1, b1):

        N(alpha, beta) * N(a1, b1) =
            N(beta, delta) * N(delta, a1)   with delta = alpha - a1, plus
            N(nu, a1) * N(nu, alpha)        with nu = beta - a1,

    where exactly one of delta, nu is a root.
    """
    idx = rs.index_of
    n: dict = {}
    for g in range(1, rs.n_positive + 1):
        gamma = rs.root_coeffs(g)
        if rs.root_height(g) == 1:
            continue
        specials = []
        for a in range(1, g):
            rest = tuple(x - y for x, y in zip(gamma, rs.root_coeffs(a)))
            b = idx.get(rest)
            if b is not None and a < b:
                specials.append((a, b))
        a1, b1 = specials[0]
        base = _string_down(rs, b1, a1) + 1
        n[(a1, b1)] = base
        n[(b1, a1)] = -base
        alpha1 = rs.root_coeffs(a1)
        for a, b in specials[1:]:
            alpha, beta = rs.root_coeffs(a), rs.root_coeffs(b)
            val = 0
            dd = idx.get(tuple(x - y for x, y in zip(alpha, alpha1)))
            if dd is not None:
                val += n[(b, dd)] * n[(dd, a1)]
            vv = idx.get(tuple(x - y for x, y in zip(beta, alpha1)))
            if vv is not None:
                val += n[(vv, a1)] * n[(vv, a)]
            q, r = divmod(val, base)
            assert r == 0 and q != 0, (a, b, g, val, base)
            assert abs(q) == _string_down(rs, b, a) + 1
            n[(a, b)] = q
            n[(b, a)] = -q
    return StructureTable(rs, n)


def bracket(table: StructureTable, x: LieElement, y: LieElement) -> LieElement:
    return table.bracket(x, y)


def nested_bracket(
    table: StructureTable, kind: str, indices: Sequence[int]
) -> LieElement:
    """Left-nested bracket [[..[g_{a1}, g_{a2}], ..], g_{am}] of simple
    generators, kind "X" or "Y"."""
    if kind not in ("X", "Y"):
        raise ValueError(f"kind must be 'X' or 'Y', got {kind!r}")
    if not indices:
        raise ValueError("empty index sequence")
    rs = table.rs
    basis = LieElement.x_basis if kind == "X" else LieElement.y_basis
    for a in indices:
        if not 1 <= a <= rs.rank:
            raise IndexError(f"simple index {a} out of range for {rs.cartan_type}")
    elem = basis(rs, indices[0])
    for a in indices[1:]:
        elem = table.bracket(elem, basis(rs, a))
    return elem


# --- relation audits --------------------------------------------------------

@dataclass(frozen=True)
class SerreReport:
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_serre(
    table: StructureTable,
    cartan: Sequence[Sequence[int]],
    gens: Sequence[tuple[LieElement, LieElement, LieElement]],
) -> SerreReport:
    """Check all six defining relation families for candidate generators.

    gens[i] is the triple (h_i, x_i, y_i); cartan is the matrix the relations
    are taken against.  Failures are reported, not raised.
    """
    m = len(gens)
    failures = []
    checked = 0
    zero = LieElement.zero(table.rs)
    br = table.bracket
    for i in range(m):
        hi, xi, yi = gens[i]
        for j in range(m):
            hj, xj, yj = gens[j]
            checked += 4
            if br(hi, hj) != zero:
                failures.append(f"[h{i + 1},h{j + 1}] != 0")
            if br(hi, xj) != cartan[j][i] * xj:
                failures.append(f"[h{i + 1},x{j + 1}] != M[{j + 1}][{i + 1}]*x{j + 1}")
            if br(hi, yj) != -cartan[j][i] * yj:
                failures.append(f"[h{i + 1},y{j + 1}] != -M[{j + 1}][{i + 1}]*y{j + 1}")
            expected = hi if i == j else zero
            if br(xi, yj) != expected:
                failures.append(f"[x{i + 1},y{j + 1}] != delta*h{i + 1}")
            if i != j:
                checked += 2
                power = 1 - cartan[j][i]
                tx, ty = xj, yj
                for _ in range(power):
                    tx = br(xi, tx)
                    ty = br(yi, ty)
                if tx != zero:
                    failures.append(f"(ad x{i + 1})^{power}(x{j + 1}) != 0")
                if ty != zero:
                    failures.append(f"(ad y{i + 1})^{power}(y{j + 1}) != 0")
    return SerreReport(checked=checked, failures=tuple(failures))


@dataclass(frozen=True)
class JacobiReport:
    checked: int
    failures: tuple[tuple[str, str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def jacobi_check(
    table: StructureTable,
    exhaustive: bool = False,
    samples: int = 0,
    seed: int = 0,
    max_witnesses: int = 5,
) -> JacobiReport:
    """Audit [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 on basis triples.

    Either the full cube of basis triples (exhaustive=True) or a seeded
    random sample of the given size.
    """
    rs = table.rs
    pt = table.pair_table()
    total = n_slots(rs)
    failures: list = []

    def check(a: int, b: int, c: int) -> bool:
        acc: dict = {}
        get = acc.get
        for s, u in pt[a][b]:
            for s2, v in pt[s][c]:
                acc[s2] = get(s2, 0) + u * v
        for s, u in pt[b][c]:
            for s2, v in pt[s][a]:
                acc[s2] = get(s2, 0) + u * v
        for s, u in pt[c][a]:
            for s2, v in pt[s][b]:
                acc[s2] = get(s2, 0) + u * v
        return not any(acc.values())

    checked = 0
    if exhaustive:
        rng_iter: Iterable = (
            (a, b, c)
            for a in range(total)
            for b in range(total)
            for c in range(total)
        )
    else:
        rng = random.Random(seed)
        rng_iter = (
            (rng.randrange(total), rng.randrange(total), rng.randrange(total))
            for _ in range(samples)
        )
    for a, b, c in rng_iter:
        checked += 1
        if not check(a, b, c):
            if len(failures) < max_witnesses:
                failures.append(
                    (slot_name(rs, a), slot_name(rs, b), slot_name(rs, c))
                )
    return JacobiReport(checked=checked, failures=tuple(failures))


# --- table dump / load -------------------------------------------------------

def dump_table(table: StructureTable) -> str:
    lines = [f"CHEVALLEY v1 {table.rs.cartan_type}"]
    for i, j in sorted(k for k in table.n if k[0] < k[1]):
        s = table.rs.root_sum(i, j)
        lines.append(f"N {i} {j} {s} {table.n[(i, j)]}")
    return "\n".join(lines) + "\n"


def load_table(text: str) -> StructureTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty table dump")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "CHEVALLEY" or head[1] != "v1":
        raise ValueError(f"bad table header: {lines[0]!r}")
    rs = build_root_system(CartanType.parse(head[2]))
    n: dict = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 5 or parts[0] != "N":
            raise ValueError(f"bad table line: {ln!r}")
        i, j, s, c = (int(p) for p in parts[1:])
        if rs.root_sum(i, j) != s:
            raise ValueError(f"inconsistent root sum in line: {ln!r}")
        n[(i, j)] = c
        n[(j, i)] = -c
    return StructureTable(rs, n)
