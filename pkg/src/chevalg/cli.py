"""Command line surface: root dumps, bracket evaluation, decompositions,
submodule generation and the claim runner.

Expression grammar (whitespace insignificant):

    expr     := ['-'] term (('+'|'-') term)*
    term     := [rational '*'] atom
    rational := int ['/' int]
    atom     := ('X'|'Y') '[' idx (',' idx)* ']' | 'H' '[' idx ']'

A single X/Y index beyond the rank denotes the canonical root vector at that
index; a multi-index form is the left-nested bracket of simple generators.
The bare string "0" denotes the zero element.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .chevalley import (
    LieElement,
    StructureTable,
    build_structure_table,
    dump_table,
    load_table,
    nested_bracket,
    slot_name,
)
from .claims import RunConfig, run_all_claims
from .embedding import decompose_adjoint, generate_submodule, phi_so14_e8
from .rep_theory import tensor_decompose, weyl_dim
from .root_system import (
    CartanType,
    RootSystem,
    UnsupportedCartanTypeError,
    build_root_system,
)


class ExprError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


Atom = tuple[str, tuple[int, ...]]


@dataclass(frozen=True)
class BracketExpr:
    terms: tuple[tuple[Fraction, Atom], ...]


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("NUM", text[i:j], i))
            i = j
            continue
        if c in "XYH":
            tokens.append(("NAME", c, i))
            i += 1
            continue
        if c in "[],+-*/":
            tokens.append((c, c, i))
            i += 1
            continue
        raise ExprError(f"unexpected character {c!r}", i)
    tokens.append(("END", "", len(text)))
    return tokens


def parse_expr(text: str, rs: RootSystem) -> BracketExpr:
    """Parse the grammar above, validating all indices against rs."""
    if text.strip() == "0":
        return BracketExpr(terms=())
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind: str):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            raise ExprError(f"expected {kind}, found {tok[1]!r}", tok[2])
        pos += 1
        return tok

    def parse_rational(sign: int) -> Fraction:
        num = int(take("NUM")[1])
        if peek()[0] == "/":
            take("/")
            den_tok = take("NUM")
            den = int(den_tok[1])
            if den == 0:
                raise ExprError("zero denominator", den_tok[2])
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def parse_atom() -> Atom:
        name_tok = take("NAME")
        kind = name_tok[1]
        take("[")
        indices = [int(take("NUM")[1])]
        while peek()[0] == ",":
            take(",")
            indices.append(int(take("NUM")[1]))
        close = take("]")
        if kind == "H":
            if len(indices) != 1:
                raise ExprError("H takes a single index", close[2])
            if not 1 <= indices[0] <= rs.rank:
                raise ExprError(f"Cartan index {indices[0]} out of range", close[2])
        elif len(indices) == 1:
            if not 1 <= indices[0] <= rs.n_positive:
                raise ExprError(f"root index {indices[0]} out of range", close[2])
        else:
            for a in indices:
                if not 1 <= a <= rs.rank:
                    raise ExprError(
                        f"nested index {a} exceeds the rank {rs.rank}", close[2]
                    )
        return kind, tuple(indices)

    def parse_term(sign: int):
        coef = Fraction(sign)
        if peek()[0] == "NUM":
            coef = parse_rational(sign)
            take("*")
        return coef, parse_atom()

    terms = []
    sign = 1
    if peek()[0] == "-":
        take("-")
        sign = -1
    terms.append(parse_term(sign))
    while peek()[0] != "END":
        op = peek()
        if op[0] == "+":
            take("+")
            terms.append(parse_term(1))
        elif op[0] == "-":
            take("-")
            terms.append(parse_term(-1))
        else:
            raise ExprError(f"expected '+' or '-', found {op[1]!r}", op[2])
    return BracketExpr(terms=tuple(terms))


def evaluate_expr(table: StructureTable, expr: BracketExpr) -> LieElement:
    rs = table.rs
    out = LieElement.zero(rs)
    for coef, (kind, indices) in expr.terms:
        if kind == "H":
            atom = LieElement.h_basis(rs, indices[0])
        elif len(indices) == 1:
            atom = (
                LieElement.x_basis(rs, indices[0])
                if kind == "X"
                else LieElement.y_basis(rs, indices[0])
            )
        else:
            atom = nested_bracket(table, kind, indices)
        out = out + coef * atom
    return out


def parse_element(table: StructureTable, text: str) -> LieElement:
    return evaluate_expr(table, parse_expr(text, table.rs))


# --- command implementations -------------------------------------------------

def _table_for(args) -> StructureTable:
    rs = build_root_system(CartanType.parse(args.type))
    table_path = getattr(args, "table", None)
    if table_path:
        with open(table_path) as f:
            table = load_table(f.read())
        if table.rs.cartan_type != rs.cartan_type:
            raise ValueError(
                f"table file is for {table.rs.cartan_type}, expected {rs.cartan_type}"
            )
        return table
    return build_structure_table(rs)


def _cmd_roots(args) -> int:
    rs = build_root_system(CartanType.parse(args.type))
    sys.stdout.write(rs.dump())
    return 0


def _cmd_table(args) -> int:
    sys.stdout.write(dump_table(_table_for(args)))
    return 0


def _cmd_bracket(args) -> int:
    exprs = list(args.exprs)
    if "," in exprs:
        split = exprs.index(",")
        left, right = " ".join(exprs[:split]), " ".join(exprs[split + 1 :])
    elif len(exprs) == 2:
        left, right = exprs
    else:
        raise ExprError("expected two expressions separated by ','", 0)
    table = _table_for(args)
    x = parse_element(table, left)
    y = parse_element(table, right)
    print(table.bracket(x, y))
    return 0


def _cmd_nested(args) -> int:
    table = _table_for(args)
    indices = [int(p) for p in args.indices.split(",") if p]
    print(nested_bracket(table, args.kind, indices))
    return 0


def _parse_weight(text: str, rank: int) -> tuple[int, ...]:
    text = text.strip().strip("[]")
    coords = tuple(int(p) for p in text.split(",") if p.strip())
    if len(coords) != rank:
        raise ValueError(f"expected {rank} weight coordinates, got {len(coords)}")
    return coords


def _cmd_tensor(args) -> int:
    rs = build_root_system(CartanType.parse(args.type))
    lam = _parse_weight(args.a, rs.rank)
    mu = _parse_weight(args.b, rs.rank)
    dec = tensor_decompose(rs, lam, mu)
    rows = sorted(
        ((weyl_dim(rs, w), w, m) for w, m in dec.items()),
        key=lambda r: (-r[0], r[1]),
    )
    for dim, w, m in rows:
        coords = "[" + ",".join(map(str, w)) + "]"
        print(f"SUMMAND {coords} mult={m} dim={dim}")
    return 0


def _standard_embedding(args):
    if CartanType.parse(args.type) != CartanType("E", 8):
        raise ValueError("submodule generation runs over the standard E8 setup")
    table = _table_for(args)
    d7 = build_root_system(CartanType("D", 7))
    return table, phi_so14_e8(d7, table)


def _print_submodule(rs: RootSystem, gen_name: str, sub) -> None:
    hw = "[" + ",".join(map(str, sub.highest_weight)) + "]"
    print(f"SUBMODULE gen={gen_name} dim={sub.dim} hw={hw}")
    names = " ".join(slot_name(rs, p) for p in sub.basis.pivots())
    print(f"BASIS {names}")


def _cmd_submodule(args) -> int:
    table, emb = _standard_embedding(args)
    w = parse_element(table, args.expr)
    sub = generate_submodule(emb, w)
    _print_submodule(table.rs, args.expr.replace(" ", ""), sub)
    return 0


def _cmd_decompose(args) -> int:
    table, emb = _standard_embedding(args)
    dec = decompose_adjoint(emb)
    for s in dec.summands:
        _print_submodule(table.rs, s.name, s.submodule)
    print(f"TOTAL dim={dec.total_dim} independent={dec.independent}")
    return 0


def _cmd_verify(args) -> int:
    cfg = RunConfig(seed=args.seed, only=args.only, format=args.format)
    context = None
    if args.table:
        with open(args.table) as f:
            table = load_table(f.read())
        if table.rs.cartan_type != CartanType("E", 8):
            raise ValueError("verify needs an E8 structure table")
        from .claims import Context

        context = Context(cfg, e8_table=table)
    report = run_all_claims(cfg, context=context)
    sys.stdout.write(report.render(args.format))
    return 0 if report.ok else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="chevalg",
        description="Exact Chevalley-basis Lie algebra engine and claim verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="dump the canonical positive-root table")
    p.add_argument("type")
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("table", help="dump the structure-constant table")
    p.add_argument("type")
    p.add_argument("--table", help="load a table dump instead of building")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("bracket", help="bracket of two element expressions")
    p.add_argument("type")
    p.add_argument("exprs", nargs="+", metavar="EXPR , EXPR")
    p.add_argument("--table")
    p.set_defaults(fn=_cmd_bracket)

    p = sub.add_parser("nested", help="left-nested bracket of simple generators")
    p.add_argument("type")
    p.add_argument("kind", choices=("X", "Y"))
    p.add_argument("indices", help="comma separated simple indices")
    p.add_argument("--table")
    p.set_defaults(fn=_cmd_nested)

    p = sub.add_parser("tensor", help="tensor product decomposition")
    p.add_argument("type")
    p.add_argument("a", help="highest weight, comma separated coordinates")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_tensor)

    p = sub.add_parser("submodule", help="submodule generated under the embedding")
    p.add_argument("type")
    p.add_argument("expr")
    p.add_argument("--table")
    p.set_defaults(fn=_cmd_submodule)

    p = sub.add_parser("decompose", help="full adjoint decomposition of E8")
    p.add_argument("--table")
    p.set_defaults(fn=_cmd_decompose, type="E8")

    p = sub.add_parser("verify", help="run the claim registry")
    p.add_argument("--only", help="run a single claim id")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--table", help="verify against a dumped E8 structure table")
    p.set_defaults(fn=_cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (
        ExprError,
        UnsupportedCartanTypeError,
        ValueError,
        LookupError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
