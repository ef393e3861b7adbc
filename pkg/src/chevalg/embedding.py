"""The natural copy of so(14) inside E8 and the extended GraviGUT structure.

Generator j of the rank-7 source algebra maps to generator 9-j of E8, i.e. to
the subdiagram obtained by deleting node 1.  Submodules of E8 under the
adjoint action of the image are generated by exact closure sweeps; the
grading by the first root coordinate (values 0, +-1, +-2) drives all closure
and nilpotency behaviour checked here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chevalley import (
    LieElement,
    StructureTable,
    n_slots,
    slot_kind,
    x_slot,
)
from .exact_linalg import SpanBasis, kernel_combinations
from .root_system import CartanType, RootSystem

# Coefficients of the one-dimensional centralizer generator over H_1..H_8;
# it acts on a root vector as multiplication by the first root coordinate.
CENTRALIZER_H_COEFFS = (4, 5, 7, 10, 8, 6, 4, 2)

# Simple lowering steps taking the root-112 vector down to the root-1 vector.
LOWERING_WORD_TO_NODE_1 = (
    2, 4, 3, 5, 6, 7, 8, 4, 5, 2, 6, 4, 5, 3, 4, 7, 6, 5, 2, 4, 3,
)

GeneratorTriple = tuple[LieElement, LieElement, LieElement]


@dataclass(frozen=True, eq=False)
class Embedding:
    source: RootSystem
    target: StructureTable
    images: tuple[GeneratorTriple, ...]

    @property
    def h_images(self) -> tuple[LieElement, ...]:
        return tuple(t[0] for t in self.images)

    @property
    def x_images(self) -> tuple[LieElement, ...]:
        return tuple(t[1] for t in self.images)

    @property
    def y_images(self) -> tuple[LieElement, ...]:
        return tuple(t[2] for t in self.images)


def phi_so14_e8(d7: RootSystem, e8: StructureTable) -> Embedding:
    """The generator assignment j -> 9 - j from the rank-7 source into E8."""
    if d7.cartan_type != CartanType("D", 7):
        raise ValueError(f"source must be D7, got {d7.cartan_type}")
    if e8.rs.cartan_type != CartanType("E", 8):
        raise ValueError(f"target must be E8, got {e8.rs.cartan_type}")
    rs = e8.rs
    images = tuple(
        (
            LieElement.h_basis(rs, 9 - j),
            LieElement.x_basis(rs, 9 - j),
            LieElement.y_basis(rs, 9 - j),
        )
        for j in range(1, 8)
    )
    return Embedding(source=d7, target=e8, images=images)


def identity_embedding(table: StructureTable) -> Embedding:
    rs = table.rs
    images = tuple(
        (
            LieElement.h_basis(rs, i),
            LieElement.x_basis(rs, i),
            LieElement.y_basis(rs, i),
        )
        for i in range(1, rs.rank + 1)
    )
    return Embedding(source=rs, target=table, images=images)


@dataclass(frozen=True)
class EmbeddingReport:
    serre_checked: int
    serre_failures: tuple[str, ...]
    images_independent: bool

    @property
    def ok(self) -> bool:
        return not self.serre_failures and self.images_independent


def verify_embedding(emb: Embedding) -> EmbeddingReport:
    """Check the source relations on the images plus linear independence."""
    from .chevalley import verify_serre

    report = verify_serre(emb.target, emb.source.cartan_matrix, emb.images)
    span = SpanBasis()
    count = 0
    for triple in emb.images:
        for g in triple:
            span, was_new = span.insert(g.coeffs)
            count += 1
    return EmbeddingReport(
        serre_checked=report.checked,
        serre_failures=report.failures,
        images_independent=span.dim == count,
    )


@dataclass(frozen=True, eq=False)
class Submodule:
    generator: LieElement
    basis: SpanBasis
    dim: int
    highest_weight_vectors: tuple[tuple[LieElement, tuple[int, ...]], ...]

    @property
    def highest_weight(self) -> tuple[int, ...]:
        return self.highest_weight_vectors[0][1]


def _weight_under(emb: Embedding, v: LieElement) -> tuple[int, ...]:
    """Eigenvalue vector of v under the embedded Cartan generators."""
    t = emb.target
    pivot = min(v.coeffs)
    pc = v.coeffs[pivot]
    out = []
    for h in emb.h_images:
        b = t.bracket(h, v)
        c = Fraction(b.coeffs.get(pivot, 0)) / Fraction(pc)
        if b != c * v:
            raise RuntimeError("vector is not a weight vector for the image Cartan")
        assert c.denominator == 1
        out.append(int(c))
    return tuple(out)


def _highest_weight_vectors(
    emb: Embedding, basis: SpanBasis
) -> tuple[tuple[LieElement, tuple[int, ...]], ...]:
    t = emb.target
    rs = t.rs
    total = n_slots(rs)
    rows = basis.row_vectors()
    elems = [LieElement(rs, r) for r in rows]
    stacked = []
    for e in elems:
        img: dict = {}
        for r, xg in enumerate(emb.x_images):
            for s, c in t.bracket(xg, e).coeffs.items():
                img[r * total + s] = c
        stacked.append(img)
    found = []
    for combo in kernel_combinations(stacked):
        v = LieElement.zero(rs)
        for j, c in sorted(combo.items()):
            v = v + c * elems[j]
        found.append((v, _weight_under(emb, v)))
    return tuple(found)


def generate_submodule(emb: Embedding, w: LieElement) -> Submodule:
    """Smallest subspace containing w closed under ad of every generator image."""
    if not w:
        raise ValueError("cannot generate a submodule from the zero element")
    t = emb.target
    gens = [g for triple in emb.images for g in triple]
    basis = SpanBasis()
    basis, _ = basis.insert(w.coeffs)
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for g in gens:
            r = t.bracket(g, u)
            if r:
                basis, was_new = basis.insert(r.coeffs)
                if was_new:
                    queue.append(r)
    return Submodule(
        generator=w,
        basis=basis,
        dim=basis.dim,
        highest_weight_vectors=_highest_weight_vectors(emb, basis),
    )


@dataclass(frozen=True, eq=False)
class AdjointSummand:
    name: str
    dim: int
    highest_weight: tuple[int, ...]
    submodule: Submodule


@dataclass(frozen=True, eq=False)
class AdjointDecomposition:
    summands: tuple[AdjointSummand, ...]
    total_dim: int
    independent: bool

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.summands)

    @property
    def highest_weights(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s.highest_weight for s in self.summands)

    def summand(self, name: str) -> AdjointSummand:
        for s in self.summands:
            if s.name == name:
                return s
        raise KeyError(name)


def centralizer_element(rs: RootSystem) -> LieElement:
    return LieElement.from_parts(
        rs, h={i + 1: c for i, c in enumerate(CENTRALIZER_H_COEFFS)}
    )


def decompose_adjoint(emb: Embedding) -> AdjointDecomposition:
    """Generate the six adjoint-action submodules of E8 and identify each
    highest weight by an exact annihilator search inside the submodule."""
    rs = emb.target.rs
    generators = (
        ("X74", LieElement.x_basis(rs, 74)),
        ("X120", LieElement.x_basis(rs, 120)),
        ("Y1", LieElement.y_basis(rs, 1)),
        ("X112", LieElement.x_basis(rs, 112)),
        ("Y97", LieElement.y_basis(rs, 97)),
        ("H", centralizer_element(rs)),
    )
    summands = []
    union = SpanBasis()
    for name, g in generators:
        sub = generate_submodule(emb, g)
        union = union.insert_all(r for r in sub.basis.row_vectors())
        summands.append(
            AdjointSummand(
                name=name,
                dim=sub.dim,
                highest_weight=sub.highest_weight,
                submodule=sub,
            )
        )
    total = union.dim
    return AdjointDecomposition(
        summands=tuple(summands),
        total_dim=total,
        independent=total == sum(s.dim for s in summands),
    )


# --- span structure checks ---------------------------------------------------

Witness = tuple[LieElement, LieElement, LieElement]


def check_closure(
    table: StructureTable, span: SpanBasis
) -> tuple[bool, Optional[Witness]]:
    rs = table.rs
    elems = [LieElement(rs, r) for r in span.row_vectors()]
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            r = table.bracket(a, b)
            if r and not span.contains(r.coeffs):
                return False, (a, b, r)
    return True, None


def check_abelian(
    table: StructureTable, span: SpanBasis
) -> tuple[bool, Optional[Witness]]:
    rs = table.rs
    elems = [LieElement(rs, r) for r in span.row_vectors()]
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            r = table.bracket(a, b)
            if r:
                return False, (a, b, r)
    return True, None


def check_nilpotent(
    table: StructureTable, span: SpanBasis
) -> tuple[bool, Optional[int]]:
    """Lower central series by repeated bracketing with the full span.

    Returns (nilpotent, class); requires a closed span.  The series is
    decreasing, so a non-shrinking step means it stabilized nonzero.
    """
    closed, witness = check_closure(table, span)
    if not closed:
        raise ValueError(f"span is not closed under the bracket: {witness}")
    rs = table.rs
    top = [LieElement(rs, r) for r in span.row_vectors()]
    current = span
    level = 1
    while True:
        nxt = SpanBasis()
        for a in top:
            for r in current.row_vectors():
                b = table.bracket(a, LieElement(rs, r))
                if b:
                    nxt, _ = nxt.insert(b.coeffs)
        if nxt.dim == 0:
            return True, level
        if nxt.dim == current.dim:
            return False, None
        current = nxt
        level += 1


@dataclass(frozen=True, eq=False)
class LisiSpanReport:
    witness: Optional[Witness]
    extension_closed: bool

    @property
    def ok(self) -> bool:
        return self.witness is not None and self.extension_closed


def lisi_span_not_closed(emb: Embedding) -> LisiSpanReport:
    """Exhibit a pair in the 64-dimensional module generated from root 112
    whose bracket escapes the span of the image plus that module, and verify
    that the 78-dimensional extension absorbs every such bracket."""
    t = emb.target
    rs = t.rs
    x112 = generate_submodule(emb, LieElement.x_basis(rs, 112))
    phi_mod = generate_submodule(emb, LieElement.x_basis(rs, 74))
    base = phi_mod.basis.union(x112.basis)
    elems = [LieElement(rs, r) for r in x112.basis.row_vectors()]
    witness = None
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            r = t.bracket(a, b)
            if r and not base.contains(r.coeffs):
                witness = (a, b, r)
                break
        if witness:
            break
    x120 = generate_submodule(emb, LieElement.x_basis(rs, 120))
    extended = base.union(x120.basis)
    extension_closed = True
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            r = t.bracket(a, b)
            if r and not extended.contains(r.coeffs):
                extension_closed = False
                break
        if not extension_closed:
            break
    return LisiSpanReport(witness=witness, extension_closed=extension_closed)


@dataclass(frozen=True, eq=False)
class ObstructionReport:
    """Tensor-square facts blocking an abelian 64-dimensional ideal plus the
    direct non-abelian witnesses inside E8."""

    decomposition_6: dict
    decomposition_7: dict
    summand_dims_6: dict
    summand_dims_7: dict
    spinor_absent: bool
    no_forbidden_dims: bool
    nonabelian_witnesses: dict
    cited_abelian_bound: int = 36  # external input, recorded but not re-proved

    @property
    def ok(self) -> bool:
        return (
            self.spinor_absent
            and self.no_forbidden_dims
            and len(self.nonabelian_witnesses) == 2
        )


def gravigut_obstruction_report(
    d7: RootSystem, emb: Optional[Embedding] = None
) -> ObstructionReport:
    from .chevalley import build_structure_table
    from .rep_theory import fundamental_weight, tensor_decompose, weyl_dim

    l1 = fundamental_weight(d7, 1)
    l6 = fundamental_weight(d7, 6)
    l7 = fundamental_weight(d7, 7)
    dec6 = tensor_decompose(d7, l6, l6)
    dec7 = tensor_decompose(d7, l7, l7)
    dims6 = {w: weyl_dim(d7, w) for w in dec6}
    dims7 = {w: weyl_dim(d7, w) for w in dec7}
    spinor_absent = l6 not in dec6 and l7 not in dec7
    forbidden = {64, 91}
    no_forbidden = not (
        forbidden & set(dims6.values()) or forbidden & set(dims7.values())
    )
    if emb is None:
        from .root_system import build_root_system

        e8 = build_structure_table(build_root_system(CartanType("E", 8)))
        emb = phi_so14_e8(d7, e8)
    rs = emb.target.rs
    witnesses = {}
    for name, gen in (
        ("X112", LieElement.x_basis(rs, 112)),
        ("Y1", LieElement.y_basis(rs, 1)),
    ):
        sub = generate_submodule(emb, gen)
        abelian, witness = check_abelian(emb.target, sub.basis)
        if not abelian:
            witnesses[name] = witness
    return ObstructionReport(
        decomposition_6=dec6,
        decomposition_7=dec7,
        summand_dims_6=dims6,
        summand_dims_7=dims7,
        spinor_absent=spinor_absent,
        no_forbidden_dims=no_forbidden,
        nonabelian_witnesses=witnesses,
    )


# --- torus automorphisms and lift classification ------------------------------

@dataclass(frozen=True)
class TorusAutomorphism:
    """Graded scaling at node 1: X_gamma -> scale**g * X_gamma with g the
    first coordinate of gamma, Y_gamma scaled inversely, Cartan fixed."""

    scale: Fraction

    def __post_init__(self) -> None:
        if not self.scale:
            raise ValueError("torus automorphism scale must be nonzero")


def apply_torus_automorphism(
    auto: TorusAutomorphism, x: LieElement
) -> LieElement:
    rs = x.rs
    s = Fraction(auto.scale)
    out: dict = {}
    for slot, c in x.coeffs.items():
        kind, i = slot_kind(rs, slot)
        if kind == "H":
            out[slot] = c
        else:
            g = rs.root_coeffs(i)[0]
            out[slot] = c * (s**g if kind == "X" else s**-g)
    return LieElement(rs, out)


@dataclass(frozen=True)
class GraviGUTLift:
    """A lift of the embedding determined by the images alpha * X_112 and
    beta * X_120 of the two highest weight vectors."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        if not self.alpha or not self.beta:
            raise ValueError("lift parameters must be nonzero")


def lifts_equivalent(
    l1: GraviGUTLift, l2: GraviGUTLift
) -> tuple[bool, Optional[TorusAutomorphism]]:
    """Equivalence rule alpha2^2 * beta1 == alpha1^2 * beta2; on equivalence
    the scaling alpha2/alpha1 carries the first lift's images to the second's."""
    a1, b1 = Fraction(l1.alpha), Fraction(l1.beta)
    a2, b2 = Fraction(l2.alpha), Fraction(l2.beta)
    if a2**2 * b1 != a1**2 * b2:
        return False, None
    return True, TorusAutomorphism(scale=a2 / a1)


def long_bracket_identity(table: StructureTable) -> tuple[LieElement, int]:
    """Chain of 21 simple lowerings applied to the root-112 vector.

    The result must be a nonzero integer multiple of the root-1 vector; the
    scalar is the product of the structure constants along the chain.
    """
    rs = table.rs
    if rs.cartan_type != CartanType("E", 8):
        raise ValueError(f"long bracket identity lives in E8, got {rs.cartan_type}")
    e = LieElement.x_basis(rs, 112)
    for a in LOWERING_WORD_TO_NODE_1:
        e = table.bracket(e, LieElement.y_basis(rs, a))
    scalar = e.coeffs.get(x_slot(rs, 1), 0)
    return e, scalar
