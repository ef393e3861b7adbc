"""Exact-arithmetic Chevalley-basis Lie algebra engine.

Builds simply laced root systems and their integer structure constants,
computes brackets, submodules and representation decompositions, and verifies
the structural facts about the natural rank-7 subalgebra of E8 and its
extended GraviGUT modules through a machine-checkable claim registry.
"""

from .root_system import (
    CartanType,
    RootSystem,
    UnsupportedCartanTypeError,
    build_root_system,
    cartan_matrix,
)
from .chevalley import (
    LieElement,
    StructureTable,
    build_structure_table,
    dump_table,
    jacobi_check,
    load_table,
    nested_bracket,
    verify_serre,
)
from .exact_linalg import SpanBasis, kernel_combinations, span_contains, span_insert
from .rep_theory import (
    freudenthal_character,
    fundamental_weight,
    tensor_decompose,
    tensor_oracle,
    weyl_dim,
)
from .embedding import (
    Embedding,
    GraviGUTLift,
    TorusAutomorphism,
    apply_torus_automorphism,
    check_abelian,
    check_closure,
    check_nilpotent,
    decompose_adjoint,
    generate_submodule,
    gravigut_obstruction_report,
    lifts_equivalent,
    lisi_span_not_closed,
    long_bracket_identity,
    phi_so14_e8,
    verify_embedding,
)
from .claims import Report, RunConfig, claim_ids, run_all_claims

__version__ = "0.1.0"

__all__ = [
    "CartanType",
    "Embedding",
    "GraviGUTLift",
    "LieElement",
    "Report",
    "RootSystem",
    "RunConfig",
    "SpanBasis",
    "StructureTable",
    "TorusAutomorphism",
    "UnsupportedCartanTypeError",
    "apply_torus_automorphism",
    "build_root_system",
    "build_structure_table",
    "cartan_matrix",
    "check_abelian",
    "check_closure",
    "check_nilpotent",
    "claim_ids",
    "decompose_adjoint",
    "dump_table",
    "freudenthal_character",
    "fundamental_weight",
    "generate_submodule",
    "gravigut_obstruction_report",
    "jacobi_check",
    "kernel_combinations",
    "lifts_equivalent",
    "lisi_span_not_closed",
    "load_table",
    "long_bracket_identity",
    "nested_bracket",
    "phi_so14_e8",
    "run_all_claims",
    "span_contains",
    "span_insert",
    "tensor_decompose",
    "tensor_oracle",
    "verify_embedding",
    "verify_serre",
    "weyl_dim",
]
