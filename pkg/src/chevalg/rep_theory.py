"""Finite dimensional irrep machinery over a RootSystem.

Weights live in fundamental coordinates (integer tuples; coordinate i is the
value on H_i, so the Weyl vector rho is all ones).  The invariant form is
normalized so every root has squared length 2; with that normalization
(mu, alpha) equals the Cartan pairing <mu, alpha^> for any root alpha.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .root_system import CartanType, RootSystem, build_root_system, cartan_matrix

Weight = tuple[int, ...]


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"fundamental weight index {i} out of range")
    return tuple(1 if j == i - 1 else 0 for j in range(rs.rank))


def rho(rs: RootSystem) -> Weight:
    return (1,) * rs.rank


def _check_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight length {len(lam)} != rank {rs.rank}")
    if any(not isinstance(c, int) or c < 0 for c in lam):
        raise ValueError(f"weight {lam} is not dominant integral")
    return lam


@lru_cache(maxsize=None)
def _inv_cartan(ct: CartanType) -> tuple[tuple[Fraction, ...], ...]:
    m = cartan_matrix(ct)
    k = len(m)
    aug = [
        [Fraction(m[i][j]) for j in range(k)]
        + [Fraction(1 if j == i else 0) for j in range(k)]
        for i in range(k)
    ]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pc = aug[col][col]
        aug[col] = [v / pc for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[k:]) for row in aug)


def root_coordinates(rs: RootSystem, w: Sequence) -> tuple[Fraction, ...]:
    """Coordinates of a weight over the simple roots (inverse Cartan matrix)."""
    inv = _inv_cartan(rs.cartan_type)
    return tuple(
        sum(inv[i][j] * w[j] for j in range(rs.rank)) for i in range(rs.rank)
    )


def weight_inner(rs: RootSystem, u: Sequence, v: Sequence) -> Fraction:
    rc = root_coordinates(rs, v)
    return sum((Fraction(u[i]) * rc[i] for i in range(rs.rank)), Fraction(0))


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Product over positive roots of <lam+rho, alpha^> / <rho, alpha^>."""
    lam = _check_dominant(rs, lam)
    num = den = 1
    for coeffs in rs.positive_roots:
        num *= sum(c * (lam[m] + 1) for m, c in enumerate(coeffs) if c)
        den *= sum(coeffs)
    q, r = divmod(num, den)
    assert r == 0
    return q


def weyl_orbit(rs: RootSystem, w: Sequence[int]) -> list[Weight]:
    seen = {tuple(w)}
    stack = [tuple(w)]
    while stack:
        v = stack.pop()
        for i in range(1, rs.rank + 1):
            u = rs.reflect(v, i)
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return sorted(seen)


@lru_cache(maxsize=None)
def _dominant_multiplicities(ct: CartanType, lam: Weight) -> tuple:
    """Dominant weights of V(lam) with multiplicities (recursive formula,
    processed downward from lam)."""
    rs = build_root_system(ct)
    k = rs.rank
    pos_fund = rs.root_weights
    pos_coeffs = rs.positive_roots

    dom = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for a in pos_fund:
                v = tuple(w[m] - a[m] for m in range(k))
                if v not in dom and all(x >= 0 for x in v):
                    dom.add(v)
                    nxt.append(v)
        frontier = nxt

    def depth(v: Weight) -> int:
        rc = root_coordinates(rs, tuple(l - x for l, x in zip(lam, v)))
        total = sum(rc)
        assert total.denominator == 1
        return int(total)

    ordered = sorted(dom, key=lambda v: (depth(v), v))
    lam_rho = tuple(l + 1 for l in lam)
    norm_lam = weight_inner(rs, lam_rho, lam_rho)
    mults: dict = {}
    for v in ordered:
        if v == lam:
            mults[v] = 1
            continue
        diff = tuple(l - x for l, x in zip(lam, v))
        r = tuple(int(c) for c in root_coordinates(rs, diff))
        total = 0
        for a_f, a_c in zip(pos_fund, pos_coeffs):
            kmax = min(r[m] // a_c[m] for m in range(k) if a_c[m])
            w = v
            for _ in range(kmax):
                w = tuple(w[m] + a_f[m] for m in range(k))
                m2 = mults.get(rs.dominant_conjugate(w)[0])
                if m2:
                    total += m2 * sum(a_c[m] * w[m] for m in range(k))
        v_rho = tuple(x + 1 for x in v)
        denom = norm_lam - weight_inner(rs, v_rho, v_rho)
        mult = Fraction(2 * total) / denom
        assert mult.denominator == 1 and mult > 0, (v, mult)
        mults[v] = int(mult)
    return tuple(mults.items())


def freudenthal_character(rs: RootSystem, lam: Sequence[int]) -> dict[Weight, int]:
    """Full weight multiplicity function of V(lam)."""
    lam = _check_dominant(rs, lam)
    char: dict[Weight, int] = {}
    for dom, mult in _dominant_multiplicities(rs.cartan_type, lam):
        for w in weyl_orbit(rs, dom):
            char[w] = mult
    return char


def tensor_decompose(
    rs: RootSystem, lam: Sequence[int], mu: Sequence[int]
) -> dict[Weight, int]:
    """Decomposition of V(lam) (x) V(mu) by signed reflection of lam+nu+rho
    into the dominant chamber over the weights nu of V(mu); contributions on
    a chamber wall are dropped."""
    lam = _check_dominant(rs, lam)
    mu = _check_dominant(rs, mu)
    if weyl_dim(rs, mu) > weyl_dim(rs, lam):
        lam, mu = mu, lam
    char = freudenthal_character(rs, mu)
    lam_rho = tuple(l + 1 for l in lam)
    out: dict[Weight, int] = {}
    for nu in sorted(char):
        m = char[nu]
        w = tuple(a + b for a, b in zip(lam_rho, nu))
        dom, sign, wall = rs.dominant_conjugate(w)
        if wall:
            continue
        hw = tuple(d - 1 for d in dom)
        out[hw] = out.get(hw, 0) + sign * m
    out = {k: v for k, v in out.items() if v}
    if any(v < 0 for v in out.values()):
        raise RuntimeError(f"inconsistent decomposition multiplicities: {out}")
    return out


def tensor_oracle(
    rs: RootSystem,
    lam: Sequence[int],
    mu: Sequence[int],
    product_limit: int = 200_000,
) -> dict[Weight, int]:
    """Independent decomposition path: convolve the two characters, then
    greedily peel full irrep characters off the maximal remaining weight."""
    lam = _check_dominant(rs, lam)
    mu = _check_dominant(rs, mu)
    d1, d2 = weyl_dim(rs, lam), weyl_dim(rs, mu)
    if d1 * d2 > product_limit:
        raise ValueError(
            f"product dimension {d1 * d2} exceeds the convolution limit"
        )
    c1 = freudenthal_character(rs, lam)
    c2 = freudenthal_character(rs, mu)
    conv: dict[Weight, int] = {}
    for w1, m1 in c1.items():
        for w2, m2 in c2.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            conv[w] = conv.get(w, 0) + m1 * m2

    def height(w: Weight) -> Fraction:
        return sum(root_coordinates(rs, w), Fraction(0))

    out: dict[Weight, int] = {}
    while conv:
        top = max(conv, key=lambda w: (height(w), w))
        mult = conv[top]
        if mult < 0 or any(x < 0 for x in top):
            raise RuntimeError(
                f"internal inconsistency while peeling: {top} -> {mult}"
            )
        out[top] = mult
        for u, m in freudenthal_character(rs, top).items():
            nv = conv.get(u, 0) - mult * m
            if nv:
                if nv < 0:
                    raise RuntimeError(
                        f"negative intermediate multiplicity at {u}: {nv}"
                    )
                conv[u] = nv
            else:
                conv.pop(u, None)
    return out
